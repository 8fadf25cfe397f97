#pragma once

// Data-parallel inner loops of the brute-force oracle. Each kernel has a
// scalar reference implementation and, on x86-64, an AVX2 variant picked at
// runtime. Both must produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>

namespace dispersion::simd {

enum class Isa { kScalar, kAvx2 };

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);

/// Best ISA the running CPU supports.
Isa detected_isa();

/// ISA used by the overloads that take no explicit Isa. Defaults to
/// detected_isa(); set_active_isa throws InvalidArgument when unsupported.
Isa active_isa();
void set_active_isa(Isa isa);

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Candidate points in structure-of-arrays layout, distances in integer
/// units. A candidate reaches the rest of the graph through two anchors
/// (end0, off0) and (end1, off1); a vertex uses itself twice with offset 0.
/// `edge` is -1 for vertices, and `pos` is the offset from the edge's first
/// endpoint.
struct CandidateView {
  std::span<const std::int32_t> end0;
  std::span<const std::int32_t> off0;
  std::span<const std::int32_t> end1;
  std::span<const std::int32_t> off1;
  std::span<const std::int32_t> edge;
  std::span<const std::int32_t> pos;

  std::size_t size() const { return end0.size(); }
};

/// Row of the conflict matrix for one candidate p.
struct ConflictRow {
  std::span<const std::int32_t> vertex_dist;  ///< distance from p to every vertex
  std::int32_t self_index;
  std::int32_t self_edge;
  std::int32_t self_pos;
  std::int32_t threshold;  ///< conflict iff distance < threshold
};

/// Sets bit q of `out` iff candidate q != p lies closer than the threshold.
/// `out` must hold words_for(candidates.size()) words; it is overwritten.
void conflict_row(Isa isa, const CandidateView& candidates, const ConflictRow& row, std::span<Word> out);

std::size_t popcount(Isa isa, std::span<const Word> bits);
std::size_t and_popcount(Isa isa, std::span<const Word> a, std::span<const Word> b);
/// dst &= src
void and_into(Isa isa, std::span<Word> dst, std::span<const Word> src);
/// dst &= ~src
void andnot_into(Isa isa, std::span<Word> dst, std::span<const Word> src);

inline void conflict_row(const CandidateView& c, const ConflictRow& r, std::span<Word> out) {
  conflict_row(active_isa(), c, r, out);
}
inline std::size_t popcount(std::span<const Word> bits) { return popcount(active_isa(), bits); }
inline std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  return and_popcount(active_isa(), a, b);
}
inline void and_into(std::span<Word> dst, std::span<const Word> src) { and_into(active_isa(), dst, src); }
inline void andnot_into(std::span<Word> dst, std::span<const Word> src) {
  andnot_into(active_isa(), dst, src);
}

}  // namespace dispersion::simd
