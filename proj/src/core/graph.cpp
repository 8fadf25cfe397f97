#include "dispersion/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

namespace dispersion {
namespace {

std::string kind_name(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::kMalformed: return "malformed line";
    case GraphErrorKind::kEmpty: return "empty graph";
    case GraphErrorKind::kVertexOutOfRange: return "vertex id out of range";
    case GraphErrorKind::kSelfLoop: return "self-loop";
    case GraphErrorKind::kDuplicateEdge: return "duplicate edge";
    case GraphErrorKind::kDisconnected: return "graph is disconnected";
  }
  return "graph error";
}

[[noreturn]] void fail(GraphErrorKind kind, std::size_t line, const std::string& detail = {}) {
  std::string msg = "line " + std::to_string(line) + ": " + kind_name(kind);
  if (!detail.empty()) msg += " (" + detail + ")";
  throw GraphError(kind, line, msg);
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

GraphError::GraphError(GraphErrorKind kind, std::size_t line, const std::string& what)
    : Error(what), kind_(kind), line_(line) {}

bool is_connected(std::size_t vertex_count, std::span<const Edge> edges) {
  if (vertex_count == 0) return false;
  DisjointSets sets(vertex_count);
  std::size_t components = vertex_count;
  for (const Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) return false;
    if (sets.unite(e.u, e.v)) --components;
  }
  return components == 1;
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(vertex_count) {
  if (vertex_count == 0) fail(GraphErrorKind::kEmpty, 1);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    const std::size_t line = i + 2;
    if (e.u >= vertex_count || e.v >= vertex_count) {
      fail(GraphErrorKind::kVertexOutOfRange, line,
           std::to_string(e.u) + " " + std::to_string(e.v));
    }
    if (e.u == e.v) fail(GraphErrorKind::kSelfLoop, line, std::to_string(e.u));
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      fail(GraphErrorKind::kDuplicateEdge, line,
           std::to_string(e.u) + " " + std::to_string(e.v));
    }
    adjacency_[e.u].push_back({e.v, static_cast<EdgeIndex>(i)});
    adjacency_[e.v].push_back({e.u, static_cast<EdgeIndex>(i)});
  }
  if (!is_connected(vertex_count, edges_)) fail(GraphErrorKind::kDisconnected, edges_.size() + 1);
}

std::optional<EdgeIndex> Graph::find_edge(VertexId a, VertexId b) const {
  if (a >= vertex_count() || b >= vertex_count()) return std::nullopt;
  const auto& shorter = degree(a) <= degree(b) ? adjacency_[a] : adjacency_[b];
  const VertexId target = degree(a) <= degree(b) ? b : a;
  for (const Incidence& inc : shorter) {
    if (inc.neighbor == target) return inc.edge;
  }
  return std::nullopt;
}

VertexId Graph::other_end(EdgeIndex e, VertexId v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw InvalidArgument("vertex " + std::to_string(v) + " is not an endpoint of edge " +
                        std::to_string(e));
}

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  auto next_data_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto read_pair = [&](const std::string& text, long long& a, long long& b) {
    std::istringstream ss(text);
    std::string extra;
    return static_cast<bool>(ss >> a >> b) && !(ss >> extra);
  };

  long long n = 0;
  long long m = 0;
  if (!next_data_line(line)) fail(GraphErrorKind::kMalformed, line_no + 1, "missing header");
  if (!read_pair(line, n, m) || n < 0 || m < 0) fail(GraphErrorKind::kMalformed, line_no, line);
  if (n == 0) fail(GraphErrorKind::kEmpty, line_no);

  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  std::set<std::pair<long long, long long>> seen;
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(line)) fail(GraphErrorKind::kMalformed, line_no + 1, "missing edge line");
    long long u = 0;
    long long v = 0;
    if (!read_pair(line, u, v)) fail(GraphErrorKind::kMalformed, line_no, line);
    if (u < 0 || v < 0 || u >= n || v >= n) fail(GraphErrorKind::kVertexOutOfRange, line_no, line);
    if (u == v) fail(GraphErrorKind::kSelfLoop, line_no, line);
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      fail(GraphErrorKind::kDuplicateEdge, line_no, line);
    }
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  if (next_data_line(line)) fail(GraphErrorKind::kMalformed, line_no, "trailing data");
  if (!is_connected(static_cast<std::size_t>(n), edges)) {
    fail(GraphErrorKind::kDisconnected, line_no);
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace dispersion
