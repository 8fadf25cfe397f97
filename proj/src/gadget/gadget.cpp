#include "dispersion/gadget.hpp"

#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <tuple>

namespace dispersion {
namespace {

// Inverse of b modulo a, for coprime a, b.
std::int64_t inverse_mod(std::int64_t b, std::int64_t a) {
  std::int64_t old_r = b % a;
  std::int64_t r = a;
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return ((old_s % a) + a) % a;
}

// Smallest x >= 1 with b*x - a*y = rhs and y >= y_min, x >= x_min.
std::pair<std::int64_t, std::int64_t> lattice_solution(std::int64_t a, std::int64_t b, std::int64_t rhs,
                                                       std::int64_t x_min) {
  std::int64_t x = static_cast<std::int64_t>((static_cast<__int128>(rhs % a) * inverse_mod(b, a)) % a);
  if (x == 0) x = a;
  std::int64_t y = (b * x - rhs) / a;
  while (y < 1 || x < x_min) {
    x += a;
    y += b;
  }
  return {x, y};
}

}  // namespace

BezoutCoefficients bezout_coeffs(std::int64_t a, std::int64_t b) {
  if (a < 3 || b < 1 || std::gcd(a, b) != 1) {
    throw InvalidArgument("gadget coefficients need a >= 3, b >= 1, gcd(a,b) = 1");
  }
  BezoutCoefficients c;
  c.parity = a % 2 == 1 ? Parity::kOdd : Parity::kEven;
  const std::int64_t first_rhs = c.parity == Parity::kOdd ? (a - 1) / 2 : (a - 2) / 2;
  const std::int64_t second_rhs = c.parity == Parity::kOdd ? 1 : 2;
  std::tie(c.x1, c.y1) = lattice_solution(a, b, first_rhs, 1);
  std::tie(c.x2, c.y2) = lattice_solution(a, b, second_rhs, 3);
  return c;
}

bool is_cubic(const Graph& h) {
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) != 3) return false;
  }
  return true;
}

GadgetInstance build_gadget(const Graph& h, const Rational& delta) {
  if (!is_cubic(h)) throw InvalidArgument("source graph is not 3-regular");
  const BezoutCoefficients c = bezout_coeffs(delta.num(), delta.den());

  std::vector<Edge> edges;
  std::vector<VertexId> vmap(h.vertex_count());
  std::iota(vmap.begin(), vmap.end(), VertexId{0});
  std::vector<VertexId> emap;
  std::vector<EdgeGadget> pieces;
  auto next_vertex = static_cast<VertexId>(h.vertex_count());

  auto add_path = [&](VertexId from, VertexId to, std::int64_t length) {
    std::vector<EdgeIndex> ids;
    VertexId prev = from;
    for (std::int64_t i = 1; i <= length; ++i) {
      const VertexId cur = i == length ? to : next_vertex++;
      ids.push_back(static_cast<EdgeIndex>(edges.size()));
      edges.push_back({prev, cur});
      prev = cur;
    }
    return ids;
  };

  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    const Edge& he = h.edge(e);
    EdgeGadget piece;
    piece.hub = next_vertex++;
    emap.push_back(piece.hub);
    piece.path_u = add_path(vmap[he.u], piece.hub, c.x1);
    piece.path_v = add_path(vmap[he.v], piece.hub, c.x1);
    piece.cycle = add_path(piece.hub, piece.hub, c.x2);
    pieces.push_back(std::move(piece));
  }

  return GadgetInstance{h,          Graph(next_vertex, std::move(edges)), delta, c, std::move(vmap),
                        std::move(emap), std::move(pieces)};
}

std::int64_t predicted_bound(const GadgetInstance& inst, std::int64_t k) {
  return k + (2 * inst.coeffs.y1 + inst.coeffs.y2) * static_cast<std::int64_t>(inst.h_edge_count());
}

WitnessSet witness_from_independent_set(const GadgetInstance& inst, std::span<const VertexId> independent) {
  if (inst.coeffs.parity != Parity::kOdd) {
    throw InvalidArgument("independent-set witnesses are only constructed for odd numerators");
  }
  const Graph& h = inst.source;
  std::set<VertexId> chosen;
  for (VertexId v : independent) {
    if (v >= h.vertex_count()) throw InvalidArgument("vertex " + std::to_string(v) + " not in source graph");
    chosen.insert(v);
  }
  for (const Edge& e : h.edges()) {
    if (chosen.count(e.u) && chosen.count(e.v)) {
      throw InvalidArgument("vertices " + std::to_string(e.u) + " and " + std::to_string(e.v) + " are adjacent");
    }
  }

  const Rational& delta = inst.delta;
  const auto& c = inst.coeffs;
  const Rational a(inst.delta.num());
  const Rational b(inst.delta.den());

  // Point at distance t from the start of a traversal-ordered edge list.
  auto along = [&](const std::vector<EdgeIndex>& route, const Rational& t) {
    const std::int64_t piece = t.floor();
    return make_point(inst.g, route.at(static_cast<std::size_t>(piece)), t - Rational(piece));
  };

  WitnessSet w;
  w.delta = delta;
  for (VertexId v : chosen) w.points.push_back(Point::at_vertex(inst.vmap[v]));
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    const EdgeGadget& piece = inst.pieces[e];
    const Edge& he = h.edge(e);
    for (const auto& [end, route] : {std::pair{he.u, &piece.path_u}, std::pair{he.v, &piece.path_v}}) {
      const Rational start = chosen.count(end) ? delta : delta / Rational(2);
      for (std::int64_t i = 0; i < c.y1; ++i) w.points.push_back(along(*route, start + Rational(i) * delta));
    }
    const Rational start = (a + Rational(1)) / (Rational(2) * b);
    for (std::int64_t i = 0; i < c.y2; ++i) w.points.push_back(along(piece.cycle, start + Rational(i) * delta));
  }
  return w;
}

void write_gadget_map(std::ostream& out, const GadgetInstance& inst) {
  for (VertexId v = 0; v < inst.vmap.size(); ++v) out << "v " << v << ' ' << inst.vmap[v] << '\n';
  for (EdgeIndex e = 0; e < inst.emap.size(); ++e) out << "e " << e << ' ' << inst.emap[e] << '\n';
}

namespace catalogue {

Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Graph k33() { return Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}); }

Graph cube() {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < 8; ++v) {
    for (VertexId bit = 1; bit < 8; bit <<= 1) {
      if ((v & bit) == 0) edges.push_back({v, v | bit});
    }
  }
  return Graph(8, std::move(edges));
}

}  // namespace catalogue
}  // namespace dispersion
