#include "dispersion/matching.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dispersion {
namespace {

constexpr int kNone = -1;

// Edmonds' blossom search on the subgraph induced by the active vertices.
// Returns the mate array (kNone for exposed or inactive vertices).
class BlossomMatcher {
 public:
  BlossomMatcher(const Graph& g, const std::vector<char>& active)
      : g_(g), active_(active), n_(static_cast<int>(g.vertex_count())),
        mate_(n_, kNone), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  std::vector<int> run() {
    greedy_start();
    for (int v = 0; v < n_; ++v) {
      if (!active_[v] || mate_[v] != kNone) continue;
      int end = find_augmenting_path(v);
      while (end != kNone) {
        int pv = parent_[end];
        int next = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = next;
      }
    }
    return mate_;
  }

 private:
  void greedy_start() {
    for (int v = 0; v < n_; ++v) {
      if (!active_[v] || mate_[v] != kNone) continue;
      for (const Incidence& inc : g_.incident(v)) {
        const int w = static_cast<int>(inc.neighbor);
        if (active_[w] && mate_[w] == kNone) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
  }

  int lowest_common_base(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNone);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (const Incidence& inc : g_.incident(static_cast<VertexId>(v))) {
        const int to = static_cast<int>(inc.neighbor);
        if (!active_[to] || base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          const int cur = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) return to;
          used_[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return kNone;
  }

  const Graph& g_;
  const std::vector<char>& active_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

Matching to_matching(const Graph& g, const std::vector<int>& mate) {
  Matching m;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v) {
    if (mate[v] > v) m.edges.push_back(*g.find_edge(v, mate[v]));
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

std::vector<char> mask_of(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<char> active(g.vertex_count(), 0);
  for (VertexId v : vertices) {
    if (v >= g.vertex_count()) throw InvalidArgument("vertex out of range");
    active[v] = 1;
  }
  return active;
}

std::size_t covered_count(const Matching& m) { return 2 * m.size(); }

// Connected components of the subgraph induced by `mask`, each sorted.
std::vector<std::vector<VertexId>> components(const Graph& g, const std::vector<char>& mask) {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(g.vertex_count(), 0);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (!mask[s] || seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (const Incidence& inc : g.incident(comp[head])) {
        if (mask[inc.neighbor] && !seen[inc.neighbor]) {
          seen[inc.neighbor] = 1;
          comp.push_back(inc.neighbor);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

[[noreturn]] void inconsistent(const std::string& what) {
  throw InternalError("Edmonds-Gallai consistency failure: " + what);
}

}  // namespace

bool is_matching(const Graph& g, std::span<const EdgeIndex> edges) {
  std::vector<char> covered(g.vertex_count(), 0);
  for (EdgeIndex e : edges) {
    if (e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    if (covered[ed.u] || covered[ed.v]) return false;
    covered[ed.u] = covered[ed.v] = 1;
  }
  return true;
}

Matching maximum_matching(const Graph& g) {
  std::vector<char> active(g.vertex_count(), 1);
  return to_matching(g, BlossomMatcher(g, active).run());
}

std::size_t nu(const Graph& g) { return maximum_matching(g).size(); }

Matching maximum_matching_induced(const Graph& g, std::span<const VertexId> vertices) {
  const std::vector<char> active = mask_of(g, vertices);
  return to_matching(g, BlossomMatcher(g, active).run());
}

Matching near_perfect_matching(const Graph& g, std::span<const VertexId> component, VertexId missed) {
  if (std::find(component.begin(), component.end(), missed) == component.end()) {
    throw InvalidArgument("missed vertex is not in the component");
  }
  std::vector<VertexId> rest;
  for (VertexId v : component) {
    if (v != missed) rest.push_back(v);
  }
  Matching m = maximum_matching_induced(g, rest);
  if (covered_count(m) != rest.size()) {
    throw InternalError("no near-perfect matching missing vertex " + std::to_string(missed) +
                        "; component is not factor-critical");
  }
  return m;
}

Matching perfect_matching(const Graph& g, std::span<const VertexId> component) {
  Matching m = maximum_matching_induced(g, component);
  if (covered_count(m) != component.size()) throw InternalError("component has no perfect matching");
  return m;
}

EGDecomposition edmonds_gallai(const Graph& g) {
  const std::size_t n = g.vertex_count();
  EGDecomposition eg;
  eg.base_matching = maximum_matching(g);
  const std::size_t full = eg.base_matching.size();

  std::vector<char> in_x(n, 0);
  std::vector<char> active(n, 1);
  for (VertexId v = 0; v < n; ++v) {
    active[v] = 0;
    const std::size_t without = to_matching(g, BlossomMatcher(g, active).run()).size();
    active[v] = 1;
    if (without == full) in_x[v] = 1;
  }

  std::vector<char> in_y(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (in_x[v]) {
      eg.X.push_back(v);
      continue;
    }
    for (const Incidence& inc : g.incident(v)) {
      if (in_x[inc.neighbor]) {
        in_y[v] = 1;
        break;
      }
    }
    (in_y[v] ? eg.Y : eg.Z).push_back(v);
  }

  std::vector<VertexId> mate(n, static_cast<VertexId>(n));
  for (EdgeIndex e : eg.base_matching.edges) {
    mate[g.edge(e).u] = g.edge(e).v;
    mate[g.edge(e).v] = g.edge(e).u;
  }

  std::vector<char> outside_y(n);
  for (VertexId v = 0; v < n; ++v) outside_y[v] = !in_y[v];
  std::vector<int> x_component(n, -1);
  for (auto& comp : components(g, outside_y)) {
    const bool all_x = std::all_of(comp.begin(), comp.end(), [&](VertexId v) { return in_x[v]; });
    const bool none_x = std::none_of(comp.begin(), comp.end(), [&](VertexId v) { return in_x[v]; });
    if (!all_x && !none_x) inconsistent("component of G-Y mixes X and Z");

    std::size_t matched_inside = 0;
    for (VertexId v : comp) {
      if (mate[v] < n && !in_y[mate[v]]) ++matched_inside;
    }
    if (all_x) {
      if (comp.size() % 2 == 0) inconsistent("even component inside X");
      if (matched_inside != comp.size() - 1) inconsistent("matching not near-perfect on X component");
      const int id = static_cast<int>(eg.Xbig.size()) + static_cast<int>(eg.X1.size());
      for (VertexId v : comp) x_component[v] = id;
      if (comp.size() == 1) {
        eg.X1.push_back(comp.front());
      } else {
        eg.Xbig.push_back(std::move(comp));
      }
    } else {
      if (comp.size() % 2 != 0) inconsistent("odd component inside Z");
      if (matched_inside != comp.size()) inconsistent("matching not perfect on Z component");
      eg.Zcomponents.push_back(std::move(comp));
    }
  }
  std::sort(eg.X1.begin(), eg.X1.end());

  std::vector<char> used_component(eg.X1.size() + eg.Xbig.size(), 0);
  for (VertexId y : eg.Y) {
    if (mate[y] >= n || !in_x[mate[y]]) inconsistent("Y vertex not matched into X");
    const int comp = x_component[mate[y]];
    if (used_component[comp]) inconsistent("two Y vertices matched into one X component");
    used_component[comp] = 1;
    eg.y_partner[y] = mate[y];
  }
  return eg;
}

}  // namespace dispersion
