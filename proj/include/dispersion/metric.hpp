#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dispersion/graph.hpp"
#include "dispersion/point.hpp"
#include "dispersion/rational.hpp"

namespace dispersion {

/// All-pairs hop counts, row-major.
class HopTable {
 public:
  HopTable() = default;
  explicit HopTable(std::size_t n) : n_(n), d_(n * n, 0) {}

  std::size_t size() const { return n_; }
  std::uint32_t operator()(VertexId a, VertexId b) const { return d_[a * n_ + b]; }
  std::uint32_t& at(VertexId a, VertexId b) { return d_[a * n_ + b]; }
  std::span<const std::uint32_t> row(VertexId a) const { return {d_.data() + a * n_, n_}; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> d_;
};

/// Breadth-first search from every vertex.
HopTable hop_distances(const Graph& g);

/// Shortest-path metric on P(G). Holds a reference to the graph, which
/// must outlive the metric.
class Metric {
 public:
  explicit Metric(const Graph& g);

  const Graph& graph() const { return *graph_; }
  const HopTable& hops() const { return hops_; }

  Rational distance(const Point& p, const Point& q) const;

 private:
  const Graph* graph_;
  HopTable hops_;
};

Rational point_distance(const Graph& g, const Point& p, const Point& q);

/// True iff all pairs of distinct points are at distance >= delta.
bool is_dispersed(const Graph& g, std::span<const Point> points, const Rational& delta);
bool is_dispersed(const Metric& metric, std::span<const Point> points, const Rational& delta);

/// `v` together with the midpoints of its incident edges.
std::vector<Point> vicinity(const Graph& g, VertexId v);

/// The c-subdivision of a graph together with the point correspondence.
///
/// Vertex ids 0..n-1 are kept; edge e = (u, v) becomes the chain
/// u, w_1, ..., w_{c-1}, v with w_j = n + e(c-1) + (j-1), and its pieces
/// are edges e*c .. e*c + c - 1, each oriented away from u.
class Subdivision {
 public:
  Subdivision(const Graph& original, std::uint32_t factor);

  const Graph& graph() const { return graph_; }
  std::uint32_t factor() const { return factor_; }

  /// p(u, v, t) in the original maps to the chain point at distance c*t from u.
  Point map_point(const Point& p) const;
  Point unmap_point(const Point& p) const;

 private:
  std::size_t original_vertices_;
  std::uint32_t factor_;
  Graph graph_;
};

Subdivision subdivide(const Graph& g, std::uint32_t factor);

}  // namespace dispersion
