#include "dispersion/dispatch.hpp"

#include <algorithm>
#include <string>

#include "dispersion/metric.hpp"

namespace dispersion {

std::vector<Point> unit_fraction_witness(const Graph& g, std::int64_t b) {
  std::vector<Point> out;
  if (g.is_tree()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back(Point::at_vertex(v));
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      for (std::int64_t i = 1; i < b; ++i) out.push_back(Point::interior(e, Rational(i, b)));
    }
  } else {
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      for (std::int64_t i = 1; i <= b; ++i) out.push_back(Point::interior(e, Rational(2 * i - 1, 2 * b)));
    }
  }
  return out;
}

std::vector<Point> lift_canonical_witness(const Graph& g, const CanonicalWitness& w, std::int64_t z) {
  const Rational delta(2, 2 * z + 1);
  std::vector<char> chosen_vertex(g.vertex_count(), 0);
  std::vector<char> chosen_edge(g.edge_count(), 0);
  for (VertexId v : w.vertex_points) chosen_vertex[v] = 1;
  for (EdgeIndex e : w.edge_midpoints) chosen_edge[e] = 1;

  std::vector<Point> out;
  for (VertexId v : w.vertex_points) out.push_back(Point::at_vertex(v));
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (chosen_vertex[ed.u] || chosen_vertex[ed.v]) {
      // One endpoint carries a point: continue from it at spacing delta.
      const VertexId from = chosen_vertex[ed.u] ? ed.u : ed.v;
      for (std::int64_t i = 1; i <= z; ++i) out.push_back(point_from(g, e, from, delta * Rational(i)));
    } else if (chosen_edge[e]) {
      for (std::int64_t i = 1; i <= z + 1; ++i) out.push_back(make_point(g, e, delta * Rational(4 * i - 3, 4)));
    } else {
      for (std::int64_t i = 1; i <= z; ++i) out.push_back(make_point(g, e, delta * Rational(4 * i - 1, 4)));
    }
  }
  return out;
}

DispersionResult disp(const Graph& g, const Rational& delta, const SolveOptions& options) {
  if (delta <= Rational(0)) throw InvalidArgument("delta must be positive");
  const std::int64_t a = delta.num();
  const std::int64_t b = delta.den();

  DispersionResult result;
  result.witness.delta = delta;
  if (a == 1) {
    result.witness.points = unit_fraction_witness(g, b);
    result.value = static_cast<std::size_t>(b) * g.edge_count() + (g.is_tree() ? 1 : 0);
  } else if (a == 2) {
    // gcd(2, b) = 1 forces b = 2z + 1.
    const std::int64_t z = (b - 1) / 2;
    const Disp2Result two = disp2(g);
    result.value = two.value + static_cast<std::size_t>(z) * g.edge_count();
    result.witness.points = z == 0 ? two.witness.points() : lift_canonical_witness(g, two.witness, z);
  } else {
    if (!options.allow_bruteforce) {
      throw HardRegimeError("delta = " + delta.to_string() +
                            " has numerator >= 3; computing this dispersion number is NP-hard "
                            "(rerun with brute force enabled for small instances)");
    }
    OracleResult oracle = brute_disp(g, delta, options.oracle);
    result.value = oracle.value;
    result.witness = std::move(oracle.witness);
  }

  std::sort(result.witness.points.begin(), result.witness.points.end());
  if (std::adjacent_find(result.witness.points.begin(), result.witness.points.end()) != result.witness.points.end() ||
      result.witness.points.size() != result.value) {
    throw InternalError("witness cardinality differs from the computed value");
  }
  if (!is_dispersed(g, result.witness.points, delta)) {
    throw InternalError("constructed witness is not " + delta.to_string() + "-dispersed");
  }
  return result;
}

}  // namespace dispersion
