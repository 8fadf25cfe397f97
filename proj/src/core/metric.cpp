#include "dispersion/metric.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <queue>

namespace dispersion {
namespace {

struct Anchor {
  VertexId vertex;
  Rational dist;
};

// Endpoint routes out of a point: itself for a vertex, both ends otherwise.
std::array<Anchor, 2> anchors(const Graph& g, const Point& p) {
  if (p.is_vertex()) return {Anchor{p.vertex(), 0}, Anchor{p.vertex(), 0}};
  const Edge& e = g.edge(p.edge());
  return {Anchor{e.u, p.offset()}, Anchor{e.v, Rational(1) - p.offset()}};
}

std::vector<Edge> subdivided_edges(const Graph& g, std::uint32_t c) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> out;
  out.reserve(g.edge_count() * c);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    VertexId prev = ed.u;
    for (std::uint32_t j = 1; j < c; ++j) {
      const auto w = static_cast<VertexId>(n + static_cast<std::size_t>(e) * (c - 1) + (j - 1));
      out.push_back({prev, w});
      prev = w;
    }
    out.push_back({prev, ed.v});
  }
  return out;
}

}  // namespace

HopTable hop_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto kUnreached = std::numeric_limits<std::uint32_t>::max();
  HopTable table(n);
  std::vector<std::uint32_t> dist(n);
  std::vector<VertexId> queue;
  queue.reserve(n);
  for (VertexId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    dist[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId x = queue[head];
      for (const Incidence& inc : g.incident(x)) {
        if (dist[inc.neighbor] == kUnreached) {
          dist[inc.neighbor] = dist[x] + 1;
          queue.push_back(inc.neighbor);
        }
      }
    }
    for (VertexId t = 0; t < n; ++t) table.at(s, t) = dist[t];
  }
  return table;
}

Metric::Metric(const Graph& g) : graph_(&g), hops_(hop_distances(g)) {}

Rational Metric::distance(const Point& p, const Point& q) const {
  validate_point(*graph_, p);
  validate_point(*graph_, q);
  if (p == q) return 0;
  std::optional<Rational> best;
  if (!p.is_vertex() && !q.is_vertex() && p.edge() == q.edge()) best = abs(p.offset() - q.offset());
  for (const Anchor& a : anchors(*graph_, p)) {
    for (const Anchor& b : anchors(*graph_, q)) {
      Rational route = a.dist + Rational(hops_(a.vertex, b.vertex)) + b.dist;
      if (!best || route < *best) best = route;
    }
  }
  return *best;
}

Rational point_distance(const Graph& g, const Point& p, const Point& q) {
  return Metric(g).distance(p, q);
}

bool is_dispersed(const Metric& metric, std::span<const Point> points, const Rational& delta) {
  std::vector<Point> unique(points.begin(), points.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  for (std::size_t i = 0; i < unique.size(); ++i) {
    for (std::size_t j = i + 1; j < unique.size(); ++j) {
      if (metric.distance(unique[i], unique[j]) < delta) return false;
    }
  }
  return true;
}

bool is_dispersed(const Graph& g, std::span<const Point> points, const Rational& delta) {
  return is_dispersed(Metric(g), points, delta);
}

std::vector<Point> vicinity(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) throw InvalidArgument("vertex out of range");
  std::vector<Point> out{Point::at_vertex(v)};
  for (const Incidence& inc : g.incident(v)) out.push_back(Point::midpoint(inc.edge));
  return out;
}

Subdivision::Subdivision(const Graph& original, std::uint32_t factor)
    : original_vertices_(original.vertex_count()),
      factor_(factor),
      graph_(factor == 0 ? throw InvalidArgument("subdivision factor must be >= 1")
                         : Graph(original.vertex_count() + (factor - 1) * original.edge_count(),
                                 subdivided_edges(original, factor))) {}

Point Subdivision::map_point(const Point& p) const {
  if (p.is_vertex()) return p;
  const Rational t = p.offset() * Rational(factor_);
  const std::int64_t piece = t.floor();
  const Rational rest = t - Rational(piece);
  const EdgeIndex e = p.edge() * factor_ + static_cast<EdgeIndex>(piece);
  return make_point(graph_, e, rest);
}

Point Subdivision::unmap_point(const Point& p) const {
  const std::uint32_t c = factor_;
  if (p.is_vertex()) {
    if (p.vertex() < original_vertices_) return p;
    const std::size_t k = p.vertex() - original_vertices_;
    const auto e = static_cast<EdgeIndex>(k / (c - 1));
    const auto j = static_cast<std::int64_t>(k % (c - 1) + 1);
    return Point::interior(e, Rational(j, c));
  }
  const EdgeIndex e = p.edge() / c;
  const auto piece = static_cast<std::int64_t>(p.edge() % c);
  return Point::interior(e, (Rational(piece) + p.offset()) / Rational(c));
}

Subdivision subdivide(const Graph& g, std::uint32_t factor) { return Subdivision(g, factor); }

}  // namespace dispersion
