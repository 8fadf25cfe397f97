#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "dispersion/gadget.hpp"
#include "dispersion/metric.hpp"
#include "oracles.hpp"

using namespace dispersion;
using namespace dispersion::testing;

TEST_CASE("bezout examples") {
  CHECK(bezout_coeffs(3, 1) == BezoutCoefficients{4, 1, 4, 1, Parity::kOdd});
  CHECK(bezout_coeffs(4, 1) == BezoutCoefficients{5, 1, 6, 1, Parity::kEven});
  CHECK(bezout_coeffs(3, 7) == BezoutCoefficients{1, 2, 4, 9, Parity::kOdd});
  CHECK_THROWS_AS(bezout_coeffs(2, 1), InvalidArgument);
  CHECK_THROWS_AS(bezout_coeffs(6, 4), InvalidArgument);
}

TEST_CASE("bezout coefficients satisfy their equations") {
  std::mt19937_64 rng(8);
  int checked = 0;
  while (checked < 50) {
    const std::int64_t a = 3 + static_cast<std::int64_t>(rng() % 20);
    const std::int64_t b = 1 + static_cast<std::int64_t>(rng() % 20);
    if (std::gcd(a, b) != 1) continue;
    const BezoutCoefficients c = bezout_coeffs(a, b);
    const bool odd = a % 2 == 1;
    CHECK(c.parity == (odd ? Parity::kOdd : Parity::kEven));
    CHECK(2 * b * c.x1 - 2 * a * c.y1 == (odd ? a - 1 : a - 2));
    CHECK(b * c.x2 - a * c.y2 == (odd ? 1 : 2));
    CHECK(c.x1 >= 1);
    CHECK(c.y1 >= 1);
    CHECK(c.x2 >= 3);
    CHECK(c.y2 >= 1);
    ++checked;
  }
}

TEST_CASE("gadget sizes and maps") {
  const GadgetInstance k4 = build_gadget(catalogue::k4(), Rational(3));
  CHECK(k4.g.vertex_count() == 4 + 6 * (1 + 2 * 3 + 3));
  CHECK(k4.g.vertex_count() == 64);
  CHECK(k4.g.edge_count() == 72);
  CHECK(std::set<VertexId>(k4.vmap.begin(), k4.vmap.end()).size() == 4);
  CHECK(std::set<VertexId>(k4.emap.begin(), k4.emap.end()).size() == 6);
  for (VertexId hub : k4.emap) CHECK(k4.g.degree(hub) == 4);
  for (VertexId v : k4.vmap) CHECK(k4.g.degree(v) == 3);

  const GadgetInstance k33 = build_gadget(catalogue::k33(), Rational(3));
  CHECK(k33.g.edge_count() == 108);
  CHECK(build_gadget(catalogue::cube(), Rational(3)).g.edge_count() == 144);

  for (const EdgeGadget& p : k4.pieces) {
    CHECK(p.path_u.size() == 4);
    CHECK(p.path_v.size() == 4);
    CHECK(p.cycle.size() == 4);
  }

  std::ostringstream map;
  write_gadget_map(map, k4);
  CHECK(map.str().rfind("v 0 ", 0) == 0);
}

TEST_CASE("predicted bounds") {
  const GadgetInstance k4 = build_gadget(catalogue::k4(), Rational(3));
  CHECK(predicted_bound(k4, 1) == 19);
  const GadgetInstance k33 = build_gadget(catalogue::k33(), Rational(3));
  CHECK(predicted_bound(k33, 3) == 30);
  CHECK(predicted_bound(build_gadget(catalogue::cube(), Rational(3)), 4) == 40);
}

TEST_CASE("gadget input validation") {
  CHECK_FALSE(is_cubic(Graph(2, {{0, 1}})));
  CHECK(is_cubic(catalogue::k4()));
  CHECK(is_cubic(catalogue::cube()));
  CHECK_THROWS_AS(build_gadget(Graph(3, {{0, 1}, {1, 2}, {0, 2}}), Rational(3)), InvalidArgument);
  CHECK_THROWS_AS(build_gadget(catalogue::k4(), Rational(2)), InvalidArgument);
  CHECK_THROWS_AS(build_gadget(catalogue::k4(), Rational(1, 2)), InvalidArgument);
}

TEST_CASE("witness from every independent set is dispersed") {
  for (const Graph& h : {catalogue::k4(), catalogue::k33()}) {
    for (const Rational& delta : {Rational(3), Rational(5, 2), Rational(3, 2)}) {
      const GadgetInstance inst = build_gadget(h, delta);
      const Metric metric(inst.g);
      for (const auto& set : all_independent_sets(h)) {
        const WitnessSet w = witness_from_independent_set(inst, set);
        REQUIRE(w.size() == static_cast<std::size_t>(predicted_bound(inst, static_cast<std::int64_t>(set.size()))));
        REQUIRE(is_dispersed(metric, w.points, delta));
      }
    }
  }
}

TEST_CASE("witness rejects dependent sets and even numerators") {
  const GadgetInstance inst = build_gadget(catalogue::k4(), Rational(3));
  const std::vector<VertexId> adjacent{0, 1};
  CHECK_THROWS_AS(witness_from_independent_set(inst, adjacent), InvalidArgument);
  const GadgetInstance even = build_gadget(catalogue::k4(), Rational(4));
  const std::vector<VertexId> one{0};
  CHECK_THROWS(witness_from_independent_set(even, one));
}
