#include "dispersion/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "dispersion/metric.hpp"

namespace dispersion {
namespace {

using simd::Word;
using simd::kWordBits;
using Clock = std::chrono::steady_clock;

struct CandidateColumns {
  std::vector<std::int32_t> end0, off0, end1, off1, edge, pos;

  void add(std::int32_t e0, std::int32_t o0, std::int32_t e1, std::int32_t o1, std::int32_t ed, std::int32_t p) {
    end0.push_back(e0);
    off0.push_back(o0);
    end1.push_back(e1);
    off1.push_back(o1);
    edge.push_back(ed);
    pos.push_back(p);
  }

  simd::CandidateView view() const { return {end0, off0, end1, off1, edge, pos}; }
};

class Bits {
 public:
  explicit Bits(std::size_t words) : w_(words, 0) {}

  std::span<Word> span() { return w_; }
  std::span<const Word> span() const { return w_; }

  void set(std::size_t i) { w_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { w_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  bool empty() const {
    return std::all_of(w_.begin(), w_.end(), [](Word w) { return w == 0; });
  }
  std::size_t first() const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i]) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(w_[i]));
    }
    return std::numeric_limits<std::size_t>::max();
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      for (Word w = w_[i]; w; w &= w - 1) f(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }

 private:
  std::vector<Word> w_;
};

class IndependentSetSearch {
 public:
  IndependentSetSearch(const BitMatrix& adj, std::optional<Clock::time_point> deadline)
      : adj_(adj), deadline_(deadline), words_(adj.stride()) {}

  std::vector<std::size_t> run() {
    Bits all(words_);
    for (std::size_t i = 0; i < adj_.size(); ++i) all.set(i);
    best_ = greedy(all);
    search(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  std::size_t degree(std::size_t v, const Bits& remaining) const {
    return simd::and_popcount(adj_.row(v), remaining.span());
  }

  void take(std::size_t v, Bits& remaining) {
    current_.push_back(v);
    remaining.reset(v);
    simd::andnot_into(remaining.span(), adj_.row(v));
  }

  // Minimum-degree greedy; seeds the incumbent.
  std::vector<std::size_t> greedy(Bits remaining) {
    std::vector<std::size_t> out;
    while (!remaining.empty()) {
      std::size_t pick = 0;
      std::size_t best_deg = std::numeric_limits<std::size_t>::max();
      remaining.for_each([&](std::size_t v) {
        const std::size_t d = degree(v, remaining);
        if (d < best_deg) {
          best_deg = d;
          pick = v;
        }
      });
      out.push_back(pick);
      remaining.reset(pick);
      simd::andnot_into(remaining.span(), adj_.row(pick));
    }
    return out;
  }

  // Number of cliques in a greedy clique cover: an upper bound on the
  // independence number of the remaining subgraph.
  std::size_t clique_cover(const Bits& remaining) const {
    Bits uncovered = remaining;
    Bits clique_candidates(words_);
    std::size_t cliques = 0;
    while (!uncovered.empty()) {
      const std::size_t v = uncovered.first();
      uncovered.reset(v);
      std::copy(uncovered.span().begin(), uncovered.span().end(), clique_candidates.span().begin());
      simd::and_into(clique_candidates.span(), adj_.row(v));
      while (!clique_candidates.empty()) {
        const std::size_t w = clique_candidates.first();
        uncovered.reset(w);
        clique_candidates.reset(w);
        simd::and_into(clique_candidates.span(), adj_.row(w));
      }
      ++cliques;
    }
    return cliques;
  }

  void check_deadline() {
    if (deadline_ && (++nodes_ & 0xff) == 0 && Clock::now() > *deadline_) {
      throw SearchTimeout("brute-force search exceeded its time limit (best so far: " +
                          std::to_string(best_.size()) + ")");
    }
  }

  void search(Bits remaining) {
    check_deadline();
    const std::size_t saved = current_.size();

    for (bool reduced = true; reduced;) {
      reduced = false;
      std::size_t low = std::numeric_limits<std::size_t>::max();
      remaining.for_each([&](std::size_t v) {
        if (low == std::numeric_limits<std::size_t>::max() && degree(v, remaining) <= 1) low = v;
      });
      if (low != std::numeric_limits<std::size_t>::max()) {
        take(low, remaining);
        reduced = true;
      }
    }

    if (remaining.empty()) {
      if (current_.size() > best_.size()) best_ = current_;
      current_.resize(saved);
      return;
    }
    if (current_.size() + clique_cover(remaining) <= best_.size()) {
      current_.resize(saved);
      return;
    }

    std::size_t pivot = 0;
    std::size_t pivot_deg = 0;
    remaining.for_each([&](std::size_t v) {
      const std::size_t d = degree(v, remaining);
      if (d > pivot_deg) {
        pivot_deg = d;
        pivot = v;
      }
    });

    {
      Bits with = remaining;
      const std::size_t before = current_.size();
      take(pivot, with);
      search(std::move(with));
      current_.resize(before);
    }
    remaining.reset(pivot);
    search(std::move(remaining));
    current_.resize(saved);
  }

  const BitMatrix& adj_;
  std::optional<Clock::time_point> deadline_;
  std::size_t words_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ConflictGraph build_conflict_graph(const Graph& g, const Rational& delta, const OracleOptions& options) {
  if (delta <= Rational(0)) throw InvalidArgument("delta must be positive");
  const std::int64_t a = delta.num();
  const std::int64_t b = delta.den();
  const std::int64_t units = 2 * b;
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();

  const auto count = static_cast<long double>(m) * static_cast<long double>(units - 1) + static_cast<long double>(n);
  if (count > static_cast<long double>(options.candidate_cap)) {
    throw SizeGuardExceeded("conflict graph would have " + std::to_string(static_cast<unsigned long long>(count)) +
                            " candidates (cap " + std::to_string(options.candidate_cap) + ")");
  }
  // Every distance is below units * (n + 1); thresholds are 2a.
  constexpr std::int64_t kLimit = std::numeric_limits<std::int32_t>::max() / 4;
  if (units * static_cast<std::int64_t>(n + 1) > kLimit || 2 * a > kLimit) {
    throw OverflowError("discretized distances exceed the 32-bit kernel range");
  }

  ConflictGraph out;
  CandidateColumns cols;
  for (VertexId v = 0; v < n; ++v) {
    out.candidates.push_back(Point::at_vertex(v));
    cols.add(static_cast<std::int32_t>(v), 0, static_cast<std::int32_t>(v), 0, -1, 0);
  }
  for (EdgeIndex e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    for (std::int64_t i = 1; i < units; ++i) {
      out.candidates.push_back(Point::interior(e, Rational(i, units)));
      cols.add(static_cast<std::int32_t>(ed.u), static_cast<std::int32_t>(i), static_cast<std::int32_t>(ed.v),
               static_cast<std::int32_t>(units - i), static_cast<std::int32_t>(e), static_cast<std::int32_t>(i));
    }
  }

  const HopTable hops = hop_distances(g);
  const std::size_t total = out.candidates.size();
  out.conflicts = BitMatrix(total);
  const simd::CandidateView view = cols.view();
  std::vector<std::int32_t> vertex_dist(n);
  const auto u32 = static_cast<std::int32_t>(units);
  for (std::size_t p = 0; p < total; ++p) {
    const auto h0 = hops.row(static_cast<VertexId>(cols.end0[p]));
    const auto h1 = hops.row(static_cast<VertexId>(cols.end1[p]));
    for (std::size_t w = 0; w < n; ++w) {
      vertex_dist[w] = std::min(cols.off0[p] + u32 * static_cast<std::int32_t>(h0[w]),
                                cols.off1[p] + u32 * static_cast<std::int32_t>(h1[w]));
    }
    const simd::ConflictRow row{vertex_dist, static_cast<std::int32_t>(p), cols.edge[p], cols.pos[p],
                                static_cast<std::int32_t>(2 * a)};
    simd::conflict_row(view, row, out.conflicts.row(p));
  }
  return out;
}

std::vector<std::size_t> maximum_independent_set(const BitMatrix& adjacency,
                                                 std::optional<std::chrono::steady_clock::time_point> deadline) {
  if (adjacency.size() == 0) return {};
  return IndependentSetSearch(adjacency, deadline).run();
}

OracleResult brute_disp(const Graph& g, const Rational& delta, const OracleOptions& options) {
  std::optional<Clock::time_point> deadline;
  if (options.timeout) deadline = Clock::now() + *options.timeout;
  const ConflictGraph cg = build_conflict_graph(g, delta, options);
  const std::vector<std::size_t> chosen = maximum_independent_set(cg.conflicts, deadline);

  OracleResult result;
  result.value = chosen.size();
  result.witness.delta = delta;
  for (std::size_t i : chosen) result.witness.points.push_back(cg.candidates[i]);
  if (!is_dispersed(g, result.witness.points, delta)) {
    throw InternalError("brute-force witness failed the exact dispersion check");
  }
  return result;
}

}  // namespace dispersion
