#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dispersion/graph.hpp"
#include "dispersion/matching.hpp"
#include "dispersion/point.hpp"

namespace dispersion {

/// 2-dispersed set made only of vertices and edge midpoints.
struct CanonicalWitness {
  std::vector<VertexId> vertex_points;
  std::vector<EdgeIndex> edge_midpoints;

  std::size_t size() const { return vertex_points.size() + edge_midpoints.size(); }
  std::vector<Point> points() const;
};

/// Bipartite data for minimizing |N(T)| - |T| over subsets T of `left`.
/// `adjacency[i]` lists indices into `right` adjacent to `left[i]`.
struct CutInstance {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
  std::vector<std::vector<std::size_t>> adjacency;
};

CutInstance cut_instance(const Graph& g, const EGDecomposition& eg);

/// |N(T)| - |T| for T given as indices into `inst.left`.
std::int64_t evaluate_g(const CutInstance& inst, std::span<const std::size_t> subset);

struct GMinimum {
  std::int64_t value = 0;
  std::vector<std::size_t> subset;  ///< minimizing T, as indices into left
};

/// Minimizes |N(T)| - |T| through a minimum s-t cut: unit arcs s->x and
/// y->t, uncuttable arcs x->y. T is the left part of the source side.
GMinimum min_g(const CutInstance& inst);

struct Disp2Result {
  std::size_t value = 0;
  CanonicalWitness witness;
  EGDecomposition decomposition;
};

/// Exact 2-dispersion number with an optimal canonical witness.
Disp2Result disp2(const Graph& g);

/// Checks the three structural properties of the witnesses `disp2` emits:
/// near-perfect on each large X component, at most one X-Y midpoint in the
/// vicinity of each Y vertex, perfect on each Z component.
bool validate_canonical(const Graph& g, const CanonicalWitness& w, const EGDecomposition& eg);

}  // namespace dispersion
