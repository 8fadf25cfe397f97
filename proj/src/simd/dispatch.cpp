#include <atomic>
#include <string>

#include "dispersion/error.hpp"
#include "kernels_impl.hpp"

namespace dispersion::simd {
namespace {

std::atomic<Isa>& active_slot() {
  static std::atomic<Isa> slot{detected_isa()};
  return slot;
}

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return true;
    case Isa::kAvx2:
#ifdef DISPERSION_HAVE_AVX2_KERNELS
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() { return isa_supported(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar; }

Isa active_isa() { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) throw InvalidArgument(std::string("ISA not supported on this CPU: ") + isa_name(isa));
  active_slot().store(isa, std::memory_order_relaxed);
}

#ifdef DISPERSION_HAVE_AVX2_KERNELS
#define DISPERSION_DISPATCH(call)              \
  if (isa == Isa::kAvx2) return avx2::call;    \
  return scalar::call
#else
#define DISPERSION_DISPATCH(call) return scalar::call
#endif

void conflict_row(Isa isa, const CandidateView& c, const ConflictRow& row, std::span<Word> out) {
  DISPERSION_DISPATCH(conflict_row(c, row, out));
}

std::size_t popcount(Isa isa, std::span<const Word> bits) { DISPERSION_DISPATCH(popcount(bits)); }

std::size_t and_popcount(Isa isa, std::span<const Word> a, std::span<const Word> b) {
  DISPERSION_DISPATCH(and_popcount(a, b));
}

void and_into(Isa isa, std::span<Word> dst, std::span<const Word> src) { DISPERSION_DISPATCH(and_into(dst, src)); }

void andnot_into(Isa isa, std::span<Word> dst, std::span<const Word> src) {
  DISPERSION_DISPATCH(andnot_into(dst, src));
}

}  // namespace dispersion::simd
