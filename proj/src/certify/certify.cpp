#include "dispersion/certify.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "dispersion/metric.hpp"

namespace dispersion {
namespace {

Verdict reject(RejectReason reason, std::string detail, std::size_t stage = 0) {
  Verdict v;
  v.accepted = false;
  v.reason = reason;
  v.detail = std::move(detail);
  v.stage = stage;
  return v;
}

}  // namespace

std::int64_t Certificate::total() const {
  std::int64_t sum = static_cast<std::int64_t>(W.size());
  for (const auto& [e, n] : counts) sum += n;
  return sum;
}

const char* reject_reason_name(RejectReason reason) {
  switch (reason) {
    case RejectReason::kMalformed: return "malformed certificate";
    case RejectReason::kCardinalityShortfall: return "cardinality shortfall";
    case RejectReason::kVertexPairTooClose: return "vertex pair too close";
    case RejectReason::kInfeasible: return "infeasible placement system";
  }
  return "rejected";
}

Certificate extract_certificate(const Graph& g, std::span<const Point> points) {
  std::set<Point> unique(points.begin(), points.end());
  Certificate cert;
  for (const Point& p : unique) {
    validate_point(g, p);
    if (p.is_vertex()) {
      cert.W.push_back(p.vertex());
    } else {
      ++cert.counts[p.edge()];
    }
  }
  return cert;
}

Verdict verify_certificate(const Graph& g, const Rational& delta, const Certificate& cert, std::int64_t k) {
  if (delta <= Rational(0)) return reject(RejectReason::kMalformed, "delta must be positive");
  std::set<VertexId> w_set;
  for (VertexId w : cert.W) {
    if (w >= g.vertex_count()) return reject(RejectReason::kMalformed, "vertex " + std::to_string(w) + " out of range");
    if (!w_set.insert(w).second) return reject(RejectReason::kMalformed, "vertex " + std::to_string(w) + " repeated");
  }
  const std::int64_t cap = (Rational(1) / delta).floor() + 1;
  for (const auto& [e, n] : cert.counts) {
    if (e >= g.edge_count()) return reject(RejectReason::kMalformed, "edge " + std::to_string(e) + " out of range");
    if (n <= 0 || n > cap) {
      return reject(RejectReason::kMalformed,
                    "edge " + std::to_string(e) + " count " + std::to_string(n) + " outside [1," + std::to_string(cap) + "]");
    }
  }

  if (cert.total() < k) {
    return reject(RejectReason::kCardinalityShortfall,
                  "certificate holds " + std::to_string(cert.total()) + " points, need " + std::to_string(k));
  }

  const HopTable hops = hop_distances(g);
  const std::vector<VertexId> W(w_set.begin(), w_set.end());
  for (std::size_t i = 0; i < W.size(); ++i) {
    for (std::size_t j = i + 1; j < W.size(); ++j) {
      if (Rational(hops(W[i], W[j])) < delta) {
        return reject(RejectReason::kVertexPairTooClose,
                      "d(" + std::to_string(W[i]) + "," + std::to_string(W[j]) + ") = " +
                          std::to_string(hops(W[i], W[j])) + " < " + delta.to_string());
      }
    }
  }

  // Variable 2i is x(u,e_i), 2i+1 is x(v,e_i) for the i-th occupied edge.
  struct Occupied {
    EdgeIndex edge;
    std::int64_t count;
  };
  std::vector<Occupied> occupied;
  for (const auto& [e, n] : cert.counts) occupied.push_back({e, n});
  auto end_of = [&](std::size_t i, int side) {
    const Edge& ed = g.edge(occupied[i].edge);
    return side == 0 ? ed.u : ed.v;
  };
  auto var = [](std::size_t i, int side) { return 2 * i + static_cast<std::size_t>(side); };

  std::vector<LinearRow> rows;
  const Rational one(1);
  for (std::size_t i = 0; i < occupied.size(); ++i) {
    for (int side = 0; side < 2; ++side) {
      rows.push_back({{{var(i, side), Rational(-1)}}, Rational(0)});
      for (VertexId w : W) {
        // x(u,e) >= delta - d(u,w)
        rows.push_back({{{var(i, side), Rational(-1)}}, Rational(hops(end_of(i, side), w)) - delta});
      }
    }
    rows.push_back({{{var(i, 0), one}, {var(i, 1), one}}, one - Rational(occupied[i].count - 1) * delta});
    if (occupied[i].count >= 2) {
      // Extreme points of one edge, reconnected through the graph.
      rows.push_back({{{var(i, 0), Rational(-1)}, {var(i, 1), Rational(-1)}},
                      Rational(hops(end_of(i, 0), end_of(i, 1))) - delta});
    }
    for (std::size_t j = i + 1; j < occupied.size(); ++j) {
      for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
          rows.push_back({{{var(i, s), Rational(-1)}, {var(j, t), Rational(-1)}},
                          Rational(hops(end_of(i, s), end_of(j, t))) - delta});
        }
      }
    }
  }

  const EliminationOutcome outcome = fourier_motzkin(2 * occupied.size(), std::move(rows));
  if (!outcome.feasible) {
    return reject(RejectReason::kInfeasible,
                  "contradiction after eliminating " + std::to_string(outcome.stage) + " variable(s)", outcome.stage);
  }
  Verdict ok;
  ok.accepted = true;
  return ok;
}

CertificateFile parse_certificate(std::istream& in) {
  CertificateFile file;
  std::string line;
  std::size_t line_no = 0;
  auto bad = [&](const std::string& why) {
    return InvalidArgument("certificate line " + std::to_string(line_no) + ": " + why);
  };
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw bad("missing k");
  {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> file.k) || (ss >> extra)) throw bad("expected integer k");
  }
  if (!next_line()) throw bad("missing 'W:' line");
  {
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag != "W:") throw bad("expected 'W:'");
    long long v = 0;
    while (ss >> v) {
      if (v < 0) throw bad("negative vertex id");
      file.certificate.W.push_back(static_cast<VertexId>(v));
    }
    if (!ss.eof()) throw bad("bad vertex list");
  }
  while (next_line()) {
    std::istringstream ss(line);
    long long e = 0;
    long long n = 0;
    std::string extra;
    if (!(ss >> e >> n) || (ss >> extra) || e < 0) throw bad("expected 'e n_e'");
    if (!file.certificate.counts.emplace(static_cast<EdgeIndex>(e), n).second) throw bad("edge listed twice");
  }
  return file;
}

void write_certificate(std::ostream& out, const Certificate& cert, std::int64_t k) {
  out << k << "\nW:";
  for (VertexId w : cert.W) out << ' ' << w;
  out << '\n';
  for (const auto& [e, n] : cert.counts) out << e << ' ' << n << '\n';
}

}  // namespace dispersion
