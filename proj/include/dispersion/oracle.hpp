#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dispersion/error.hpp"
#include "dispersion/graph.hpp"
#include "dispersion/point.hpp"
#include "dispersion/rational.hpp"
#include "dispersion/simd/kernels.hpp"

namespace dispersion {

/// The discretized instance would exceed the configured candidate cap.
class SizeGuardExceeded : public Error {
 public:
  using Error::Error;
};

/// The exact search ran out of time before proving optimality.
class SearchTimeout : public Error {
 public:
  using Error::Error;
};

struct OracleOptions {
  std::size_t candidate_cap = 2000;
  std::optional<std::chrono::milliseconds> timeout;
};

/// Dense symmetric adjacency over candidate indices, one bitset row each.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), stride_(simd::words_for(n)), bits_(n * stride_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t stride() const { return stride_; }

  std::span<const simd::Word> row(std::size_t i) const { return {bits_.data() + i * stride_, stride_}; }
  std::span<simd::Word> row(std::size_t i) { return {bits_.data() + i * stride_, stride_}; }

  bool test(std::size_t i, std::size_t j) const {
    return (bits_[i * stride_ + j / simd::kWordBits] >> (j % simd::kWordBits)) & 1U;
  }
  void set(std::size_t i, std::size_t j) {
    bits_[i * stride_ + j / simd::kWordBits] |= simd::Word{1} << (j % simd::kWordBits);
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<simd::Word> bits_;
};

/// All points with offsets in multiples of 1/(2b), deduplicated, and the
/// pairs among them closer than delta.
struct ConflictGraph {
  std::vector<Point> candidates;
  BitMatrix conflicts;
};

/// Candidates are the vertices 0..n-1 followed by the interior grid points
/// edge by edge. Throws SizeGuardExceeded above `options.candidate_cap`.
ConflictGraph build_conflict_graph(const Graph& g, const Rational& delta, const OracleOptions& options = {});

/// Maximum independent set of a bitset graph by branch and bound:
/// degree-0/1 reductions, greedy clique-cover bound, branching on the
/// vertex of maximum remaining degree (lowest index on ties).
std::vector<std::size_t> maximum_independent_set(const BitMatrix& adjacency,
                                                 std::optional<std::chrono::steady_clock::time_point> deadline = {});

struct OracleResult {
  std::size_t value = 0;
  WitnessSet witness;
};

/// Exact delta-dispersion number of any connected graph and positive
/// rational delta, within the size guard.
OracleResult brute_disp(const Graph& g, const Rational& delta, const OracleOptions& options = {});

}  // namespace dispersion
