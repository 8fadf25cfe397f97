#include <doctest.h>

#include <random>

#include "dispersion/simd/kernels.hpp"

using namespace dispersion::simd;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n) {
  std::vector<Word> w(n);
  for (auto& x : w) x = rng();
  return w;
}

struct RandomCandidates {
  std::vector<std::int32_t> end0, off0, end1, off1, edge, pos;
  std::vector<std::int32_t> vertex_dist;

  CandidateView view() const { return {end0, off0, end1, off1, edge, pos}; }
};

RandomCandidates random_candidates(std::mt19937_64& rng, std::size_t count, std::size_t vertices) {
  RandomCandidates c;
  std::uniform_int_distribution<std::int32_t> vertex(0, static_cast<std::int32_t>(vertices) - 1);
  std::uniform_int_distribution<std::int32_t> small(0, 12);
  std::uniform_int_distribution<std::int32_t> far(0, 200);
  for (std::size_t i = 0; i < count; ++i) {
    c.end0.push_back(vertex(rng));
    c.end1.push_back(vertex(rng));
    c.off0.push_back(small(rng));
    c.off1.push_back(small(rng));
    c.edge.push_back(small(rng) - 1);
    c.pos.push_back(small(rng));
  }
  for (std::size_t v = 0; v < vertices; ++v) c.vertex_dist.push_back(far(rng));
  return c;
}

}  // namespace

TEST_CASE("scalar is always available and the active ISA is supported") {
  CHECK(isa_supported(Isa::kScalar));
  CHECK(isa_supported(active_isa()));
  CHECK(isa_supported(detected_isa()));
}

TEST_CASE("bitset kernels agree across ISAs") {
  if (!isa_supported(Isa::kAvx2)) {
    MESSAGE("AVX2 unavailable; equivalence test skipped");
    return;
  }
  std::mt19937_64 rng(7);
  for (std::size_t words : {0UL, 1UL, 3UL, 4UL, 5UL, 8UL, 13UL, 64UL}) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto a = random_words(rng, words);
      const auto b = random_words(rng, words);
      CHECK(popcount(Isa::kScalar, a) == popcount(Isa::kAvx2, a));
      CHECK(and_popcount(Isa::kScalar, a, b) == and_popcount(Isa::kAvx2, a, b));
      auto s = a;
      auto v = a;
      and_into(Isa::kScalar, s, b);
      and_into(Isa::kAvx2, v, b);
      CHECK(s == v);
      s = a;
      v = a;
      andnot_into(Isa::kScalar, s, b);
      andnot_into(Isa::kAvx2, v, b);
      CHECK(s == v);
    }
  }
}

TEST_CASE("scalar bitset kernels on known words") {
  const std::vector<Word> a{0xffULL, 0x1ULL};
  const std::vector<Word> b{0x0fULL, 0x3ULL};
  CHECK(popcount(Isa::kScalar, a) == 9);
  CHECK(and_popcount(Isa::kScalar, a, b) == 5);
  auto x = a;
  andnot_into(Isa::kScalar, x, b);
  CHECK(x == std::vector<Word>{0xf0ULL, 0x0ULL});
}

TEST_CASE("conflict row kernel agrees across ISAs") {
  if (!isa_supported(Isa::kAvx2)) {
    MESSAGE("AVX2 unavailable; equivalence test skipped");
    return;
  }
  std::mt19937_64 rng(11);
  for (std::size_t count : {1UL, 7UL, 8UL, 9UL, 63UL, 64UL, 65UL, 200UL}) {
    for (int rep = 0; rep < 25; ++rep) {
      const RandomCandidates c = random_candidates(rng, count, 9);
      std::uniform_int_distribution<std::size_t> pick(0, count - 1);
      const std::size_t self = pick(rng);
      const ConflictRow row{c.vertex_dist, static_cast<std::int32_t>(self), c.edge[self], c.pos[self],
                            static_cast<std::int32_t>(rng() % 150)};
      std::vector<Word> scalar(words_for(count)), vec(words_for(count));
      conflict_row(Isa::kScalar, c.view(), row, scalar);
      conflict_row(Isa::kAvx2, c.view(), row, vec);
      REQUIRE(scalar == vec);
      CHECK_FALSE((scalar[self / kWordBits] >> (self % kWordBits) & 1));
    }
  }
}

TEST_CASE("conflict row kernel on a hand-built row") {
  // Three candidates on one edge of length 4 units between vertices 0 and 1.
  const std::vector<std::int32_t> end0{0, 0, 0}, off0{1, 2, 3}, end1{1, 1, 1}, off1{3, 2, 1}, edge{0, 0, 0},
      pos{1, 2, 3};
  const CandidateView view{end0, off0, end1, off1, edge, pos};
  // From candidate 0: vertex 0 at 1 unit, vertex 1 at 3 units.
  const std::vector<std::int32_t> vd{1, 3};
  std::vector<Word> out(1);
  conflict_row(Isa::kScalar, view, ConflictRow{vd, 0, 0, 1, 2}, out);
  CHECK(out[0] == 0b010);
  conflict_row(Isa::kScalar, view, ConflictRow{vd, 0, 0, 1, 3}, out);
  CHECK(out[0] == 0b110);
}

TEST_CASE("set_active_isa") {
  const Isa before = active_isa();
  set_active_isa(Isa::kScalar);
  CHECK(active_isa() == Isa::kScalar);
  set_active_isa(before);
  if (!isa_supported(Isa::kAvx2)) CHECK_THROWS(set_active_isa(Isa::kAvx2));
}
