#pragma once

#include "dispersion/simd/kernels.hpp"

namespace dispersion::simd {

#define DISPERSION_KERNEL_DECLS                                                                 \
  void conflict_row(const CandidateView& c, const ConflictRow& row, std::span<Word> out);       \
  std::size_t popcount(std::span<const Word> bits);                                             \
  std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b);                   \
  void and_into(std::span<Word> dst, std::span<const Word> src);                                \
  void andnot_into(std::span<Word> dst, std::span<const Word> src);

namespace scalar {
DISPERSION_KERNEL_DECLS
}

#if defined(__x86_64__)
#define DISPERSION_HAVE_AVX2_KERNELS 1
namespace avx2 {
DISPERSION_KERNEL_DECLS
}
#endif

#undef DISPERSION_KERNEL_DECLS

}  // namespace dispersion::simd
