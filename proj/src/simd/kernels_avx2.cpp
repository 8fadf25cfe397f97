// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "kernels_impl.hpp"

namespace dispersion::simd::avx2 {
namespace {

inline __m256i load8(const std::int32_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

// Per-byte popcount via nibble lookup, summed into four 64-bit lanes.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

}  // namespace

void conflict_row(const CandidateView& c, const ConflictRow& row, std::span<Word> out) {
  std::fill(out.begin(), out.end(), Word{0});
  const std::size_t n = c.size();
  const std::int32_t* vd = row.vertex_dist.data();
  const __m256i threshold = _mm256_set1_epi32(row.threshold);
  const __m256i self_edge = _mm256_set1_epi32(row.self_edge);
  const __m256i self_pos = _mm256_set1_epi32(row.self_pos);
  const bool on_edge = row.self_edge >= 0;

  std::size_t q = 0;
  for (; q + 8 <= n; q += 8) {
    const __m256i via0 = _mm256_add_epi32(_mm256_i32gather_epi32(vd, load8(c.end0.data() + q), 4), load8(c.off0.data() + q));
    const __m256i via1 = _mm256_add_epi32(_mm256_i32gather_epi32(vd, load8(c.end1.data() + q), 4), load8(c.off1.data() + q));
    __m256i d = _mm256_min_epi32(via0, via1);
    if (on_edge) {
      const __m256i same = _mm256_cmpeq_epi32(load8(c.edge.data() + q), self_edge);
      const __m256i direct = _mm256_abs_epi32(_mm256_sub_epi32(load8(c.pos.data() + q), self_pos));
      d = _mm256_blendv_epi8(d, _mm256_min_epi32(d, direct), same);
    }
    const __m256i close = _mm256_cmpgt_epi32(threshold, d);
    const auto mask = static_cast<Word>(_mm256_movemask_ps(_mm256_castsi256_ps(close)));
    out[q / kWordBits] |= mask << (q % kWordBits);
  }
  for (; q < n; ++q) {
    std::int32_t d = std::min(vd[c.end0[q]] + c.off0[q], vd[c.end1[q]] + c.off1[q]);
    if (on_edge && c.edge[q] == row.self_edge) d = std::min(d, std::abs(c.pos[q] - row.self_pos));
    if (d < row.threshold) out[q / kWordBits] |= Word{1} << (q % kWordBits);
  }
  out[row.self_index / kWordBits] &= ~(Word{1} << (row.self_index % kWordBits));
}

std::size_t popcount(std::span<const Word> bits) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= bits.size(); i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bits.data() + i));
    acc = _mm256_add_epi64(acc, popcount_lanes(v));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < bits.size(); ++i) total += static_cast<std::size_t>(std::popcount(bits[i]));
  return total;
}

std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(va, vb)));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < a.size(); ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

void and_into(std::span<Word> dst, std::span<const Word> src) {
  std::size_t i = 0;
  for (; i + 4 <= dst.size(); i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    _mm256_storeu_si256(d, _mm256_and_si256(_mm256_loadu_si256(d), s));
  }
  for (; i < dst.size(); ++i) dst[i] &= src[i];
}

void andnot_into(std::span<Word> dst, std::span<const Word> src) {
  std::size_t i = 0;
  for (; i + 4 <= dst.size(); i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    _mm256_storeu_si256(d, _mm256_andnot_si256(s, _mm256_loadu_si256(d)));
  }
  for (; i < dst.size(); ++i) dst[i] &= ~src[i];
}

}  // namespace dispersion::simd::avx2
