#include <algorithm>
#include <bit>
#include <cstdlib>

#include "kernels_impl.hpp"

namespace dispersion::simd::scalar {

void conflict_row(const CandidateView& c, const ConflictRow& row, std::span<Word> out) {
  std::fill(out.begin(), out.end(), Word{0});
  const std::size_t n = c.size();
  for (std::size_t q = 0; q < n; ++q) {
    std::int32_t d = std::min(row.vertex_dist[c.end0[q]] + c.off0[q], row.vertex_dist[c.end1[q]] + c.off1[q]);
    if (row.self_edge >= 0 && c.edge[q] == row.self_edge) d = std::min(d, std::abs(c.pos[q] - row.self_pos));
    if (d < row.threshold) out[q / kWordBits] |= Word{1} << (q % kWordBits);
  }
  out[row.self_index / kWordBits] &= ~(Word{1} << (row.self_index % kWordBits));
}

std::size_t popcount(std::span<const Word> bits) {
  std::size_t total = 0;
  for (Word w : bits) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

void and_into(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= src[i];
}

void andnot_into(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= ~src[i];
}

}  // namespace dispersion::simd::scalar
