#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "dispersion/error.hpp"

namespace dispersion {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint32_t;

inline constexpr EdgeIndex kNoEdge = static_cast<EdgeIndex>(-1);

/// Stored orientation of an edge; point offsets are measured from `u`.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeIndex edge;
};

enum class GraphErrorKind {
  kMalformed,
  kEmpty,
  kVertexOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kDisconnected,
};

/// Rejection of a graph description. `line()` is 1-based and refers to the
/// graph file; for graphs built in memory, edge i is reported as line i + 2.
class GraphError : public Error {
 public:
  GraphError(GraphErrorKind kind, std::size_t line, const std::string& what);

  GraphErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  GraphErrorKind kind_;
  std::size_t line_;
};

/// Connected, simple, undirected graph whose edges all have unit length.
class Graph {
 public:
  /// Validates the edge list; throws GraphError on out-of-range ids, loops,
  /// parallel edges, an empty vertex set, or a disconnected result.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  /// Incident edges of `v` in ascending edge-index order.
  std::span<const Incidence> incident(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

  std::optional<EdgeIndex> find_edge(VertexId a, VertexId b) const;

  /// The endpoint of `e` that is not `v`.
  VertexId other_end(EdgeIndex e, VertexId v) const;

  bool is_tree() const { return edges_.size() + 1 == adjacency_.size(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

bool is_connected(std::size_t vertex_count, std::span<const Edge> edges);

/// Reads "n m" followed by m lines "u v".
Graph parse_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace dispersion
