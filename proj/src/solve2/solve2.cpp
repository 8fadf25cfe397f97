#include "dispersion/solve2.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

#include "dispersion/metric.hpp"

namespace dispersion {
namespace {

// Dinic's max-flow over integer capacities.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, std::int64_t cap) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, cap});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0});
  }

  std::int64_t max_flow(std::size_t s, std::size_t t) {
    std::int64_t total = 0;
    while (build_levels(s, t)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (std::int64_t pushed = push(s, t, std::numeric_limits<std::int64_t>::max())) total += pushed;
    }
    return total;
  }

  /// Nodes reachable from `s` in the residual network after max_flow.
  std::vector<char> source_side(std::size_t s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t id : adj_[x]) {
        const Arc& a = arcs_[id];
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
  };

  bool build_levels(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop();
      for (std::size_t id : adj_[x]) {
        if (arcs_[id].cap > 0 && level_[arcs_[id].to] < 0) {
          level_[arcs_[id].to] = level_[x] + 1;
          q.push(arcs_[id].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t push(std::size_t x, std::size_t t, std::int64_t limit) {
    if (x == t) return limit;
    for (std::size_t& i = next_[x]; i < adj_[x].size(); ++i) {
      const std::size_t id = adj_[x][i];
      Arc& a = arcs_[id];
      if (a.cap <= 0 || level_[a.to] != level_[x] + 1) continue;
      if (std::int64_t got = push(a.to, t, std::min(limit, a.cap))) {
        a.cap -= got;
        arcs_[id ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace

std::vector<Point> CanonicalWitness::points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (VertexId v : vertex_points) out.push_back(Point::at_vertex(v));
  for (EdgeIndex e : edge_midpoints) out.push_back(Point::midpoint(e));
  std::sort(out.begin(), out.end());
  return out;
}

CutInstance cut_instance(const Graph& g, const EGDecomposition& eg) {
  CutInstance inst;
  inst.left = eg.X1;
  inst.right = eg.Y;
  std::vector<std::size_t> right_index(g.vertex_count(), inst.right.size());
  for (std::size_t i = 0; i < inst.right.size(); ++i) right_index[inst.right[i]] = i;
  inst.adjacency.resize(inst.left.size());
  for (std::size_t i = 0; i < inst.left.size(); ++i) {
    for (const Incidence& inc : g.incident(inst.left[i])) {
      if (right_index[inc.neighbor] < inst.right.size()) {
        inst.adjacency[i].push_back(right_index[inc.neighbor]);
      }
    }
    std::sort(inst.adjacency[i].begin(), inst.adjacency[i].end());
  }
  return inst;
}

std::int64_t evaluate_g(const CutInstance& inst, std::span<const std::size_t> subset) {
  std::vector<char> hit(inst.right.size(), 0);
  std::int64_t neighbours = 0;
  for (std::size_t i : subset) {
    for (std::size_t r : inst.adjacency.at(i)) {
      if (!hit[r]) {
        hit[r] = 1;
        ++neighbours;
      }
    }
  }
  return neighbours - static_cast<std::int64_t>(subset.size());
}

GMinimum min_g(const CutInstance& inst) {
  const std::size_t left = inst.left.size();
  const std::size_t right = inst.right.size();
  const std::size_t source = left + right;
  const std::size_t sink = source + 1;
  const auto infinite = static_cast<std::int64_t>(left + right + 1);

  FlowNetwork net(left + right + 2);
  for (std::size_t i = 0; i < left; ++i) {
    net.add_arc(source, i, 1);
    for (std::size_t r : inst.adjacency[i]) net.add_arc(i, left + r, infinite);
  }
  for (std::size_t r = 0; r < right; ++r) net.add_arc(left + r, sink, 1);

  const std::int64_t cut = net.max_flow(source, sink);
  const std::vector<char> reach = net.source_side(source);
  GMinimum out;
  out.value = cut - static_cast<std::int64_t>(left);
  for (std::size_t i = 0; i < left; ++i) {
    if (reach[i]) out.subset.push_back(i);
  }
  return out;
}

Disp2Result disp2(const Graph& g) {
  Disp2Result result;
  result.decomposition = edmonds_gallai(g);
  const EGDecomposition& eg = result.decomposition;

  const CutInstance inst = cut_instance(g, eg);
  const GMinimum best = min_g(inst);

  std::int64_t value = static_cast<std::int64_t>(eg.Z.size() / 2 + eg.Y.size()) - best.value;
  for (const auto& comp : eg.Xbig) value += static_cast<std::int64_t>((comp.size() - 1) / 2);
  result.value = static_cast<std::size_t>(value);

  CanonicalWitness& w = result.witness;
  std::vector<char> blocked(g.vertex_count(), 0);
  for (std::size_t i : best.subset) {
    w.vertex_points.push_back(inst.left[i]);
    for (std::size_t r : inst.adjacency[i]) blocked[inst.right[r]] = 1;
  }

  std::set<VertexId> partners;
  for (const auto& [y, x] : eg.y_partner) {
    partners.insert(x);
    if (!blocked[y]) w.edge_midpoints.push_back(*g.find_edge(y, x));
  }
  for (const auto& comp : eg.Xbig) {
    VertexId missed = comp.front();
    for (VertexId v : comp) {
      if (partners.count(v)) missed = v;
    }
    const Matching m = near_perfect_matching(g, comp, missed);
    w.edge_midpoints.insert(w.edge_midpoints.end(), m.edges.begin(), m.edges.end());
  }
  for (const auto& comp : eg.Zcomponents) {
    const Matching m = perfect_matching(g, comp);
    w.edge_midpoints.insert(w.edge_midpoints.end(), m.edges.begin(), m.edges.end());
  }
  std::sort(w.vertex_points.begin(), w.vertex_points.end());
  std::sort(w.edge_midpoints.begin(), w.edge_midpoints.end());

  if (w.size() != result.value) throw InternalError("canonical witness size differs from value");
  const std::vector<Point> pts = w.points();
  if (!is_dispersed(g, pts, Rational(2))) throw InternalError("canonical witness is not 2-dispersed");
  if (!validate_canonical(g, w, eg)) throw InternalError("canonical witness violates P1-P3");
  return result;
}

bool validate_canonical(const Graph& g, const CanonicalWitness& w, const EGDecomposition& eg) {
  const std::size_t n = g.vertex_count();
  for (VertexId v : w.vertex_points) {
    if (v >= n) return false;
  }
  for (EdgeIndex e : w.edge_midpoints) {
    if (e >= g.edge_count()) return false;
  }

  auto induced_cover = [&](const std::vector<VertexId>& comp) -> std::ptrdiff_t {
    std::vector<char> inside(n, 0);
    for (VertexId v : comp) inside[v] = 1;
    std::vector<char> covered(n, 0);
    std::ptrdiff_t count = 0;
    for (EdgeIndex e : w.edge_midpoints) {
      const Edge& ed = g.edge(e);
      if (!inside[ed.u] || !inside[ed.v]) continue;
      if (covered[ed.u] || covered[ed.v]) return -1;
      covered[ed.u] = covered[ed.v] = 1;
      count += 2;
    }
    return count;
  };

  for (const auto& comp : eg.Xbig) {
    if (induced_cover(comp) != static_cast<std::ptrdiff_t>(comp.size()) - 1) return false;
  }
  for (const auto& comp : eg.Zcomponents) {
    if (induced_cover(comp) != static_cast<std::ptrdiff_t>(comp.size())) return false;
  }

  std::vector<char> in_x(n, 0);
  for (VertexId x : eg.X) in_x[x] = 1;
  const std::set<VertexId> chosen_vertices(w.vertex_points.begin(), w.vertex_points.end());
  const std::set<EdgeIndex> chosen_edges(w.edge_midpoints.begin(), w.edge_midpoints.end());
  for (VertexId y : eg.Y) {
    if (chosen_vertices.count(y)) return false;
    std::size_t hits = 0;
    for (const Incidence& inc : g.incident(y)) {
      if (!chosen_edges.count(inc.edge)) continue;
      if (!in_x[inc.neighbor]) return false;
      ++hits;
    }
    if (hits > 1) return false;
  }
  return true;
}

}  // namespace dispersion
