#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "dispersion/graph.hpp"
#include "dispersion/point.hpp"
#include "dispersion/rational.hpp"

namespace dispersion {

enum class Parity { kOdd, kEven };

/// Positive integers with, for delta = a/b,
///   odd a:  2b*x1 - 2a*y1 = a - 1  and  b*x2 - a*y2 = 1
///   even a: 2b*x1 - 2a*y1 = a - 2  and  b*x2 - a*y2 = 2
/// and x2 >= 3 so the gadget cycles are simple.
struct BezoutCoefficients {
  std::int64_t x1 = 0;
  std::int64_t y1 = 0;
  std::int64_t x2 = 0;
  std::int64_t y2 = 0;
  Parity parity = Parity::kOdd;

  friend bool operator==(const BezoutCoefficients&, const BezoutCoefficients&) = default;
};

/// Smallest solution with x1, y1, y2 >= 1 and x2 >= 3. Requires a >= 3,
/// b >= 1 and gcd(a, b) = 1.
BezoutCoefficients bezout_coeffs(std::int64_t a, std::int64_t b);

/// Pieces built for one edge {u, v} of the source graph. Edge lists are in
/// traversal order and every edge is oriented along the traversal.
struct EdgeGadget {
  VertexId hub;                    ///< e*
  std::vector<EdgeIndex> path_u;   ///< u* -> e*, x1 edges
  std::vector<EdgeIndex> path_v;   ///< v* -> e*, x1 edges
  std::vector<EdgeIndex> cycle;    ///< e* -> ... -> e*, x2 edges
};

struct GadgetInstance {
  Graph source;
  Graph g;
  Rational delta;
  BezoutCoefficients coeffs;
  std::vector<VertexId> vmap;  ///< source vertex -> u*
  std::vector<VertexId> emap;  ///< source edge -> e*
  std::vector<EdgeGadget> pieces;

  std::size_t h_edge_count() const { return source.edge_count(); }
};

bool is_cubic(const Graph& h);

/// Replaces every edge of the cubic graph `h` by two paths of x1 edges
/// meeting at a new vertex e* and a cycle of x2 edges through e*.
/// Throws InvalidArgument if `h` is not 3-regular or delta is not a/b with
/// a >= 3.
GadgetInstance build_gadget(const Graph& h, const Rational& delta);

/// k + (2*y1 + y2) * |E_H|
std::int64_t predicted_bound(const GadgetInstance& inst, std::int64_t k);

/// Dispersed set of size |I| + (2*y1 + y2) * |E_H| built from an independent
/// set I of the source graph. Odd numerators only.
WitnessSet witness_from_independent_set(const GadgetInstance& inst, std::span<const VertexId> independent);

/// Sidecar map: "v <source vertex> <gadget id>" and "e <source edge> <gadget id>".
void write_gadget_map(std::ostream& out, const GadgetInstance& inst);

namespace catalogue {
Graph k4();
Graph k33();
Graph cube();
}  // namespace catalogue

}  // namespace dispersion
