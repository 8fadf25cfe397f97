#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dispersion/graph.hpp"
#include "dispersion/point.hpp"
#include "dispersion/rational.hpp"

namespace dispersion {

/// Compressed description of a dispersed set: the vertices it occupies and
/// how many of its points lie strictly inside each edge.
struct Certificate {
  std::vector<VertexId> W;
  std::map<EdgeIndex, std::int64_t> counts;  ///< only edges with n_e > 0

  std::int64_t total() const;
};

Certificate extract_certificate(const Graph& g, std::span<const Point> points);

enum class RejectReason {
  kMalformed,
  kCardinalityShortfall,
  kVertexPairTooClose,
  kInfeasible,
};

const char* reject_reason_name(RejectReason reason);

struct Verdict {
  bool accepted = false;
  RejectReason reason = RejectReason::kMalformed;
  std::string detail;
  /// For kInfeasible: number of variables eliminated when the
  /// contradiction surfaced (0 means a constant row was violated outright).
  std::size_t stage = 0;

  explicit operator bool() const { return accepted; }
};

/// Accepts iff the certificate carries at least k points and the placement
/// system over x(u,e) (distance from u to the nearest point inside e) has
/// a solution. Decided exactly by Fourier-Motzkin elimination.
Verdict verify_certificate(const Graph& g, const Rational& delta, const Certificate& cert, std::int64_t k);

/// sum(coeff * x_var) <= bound, sparse, sorted by variable.
struct LinearRow {
  std::vector<std::pair<std::size_t, Rational>> terms;
  Rational bound;
};

struct EliminationOutcome {
  bool feasible = true;
  std::size_t stage = 0;
};

/// Feasibility of a system of `<=` rows over the reals. Rows are scaled so
/// their leading coefficient has magnitude 1 and only the tightest row per
/// coefficient vector is kept.
EliminationOutcome fourier_motzkin(std::size_t variable_count, std::vector<LinearRow> rows);

struct CertificateFile {
  std::int64_t k = 0;
  Certificate certificate;
};

/// Line 1 "k"; line 2 "W: v1 v2 ..."; then "e n_e" per occupied edge.
CertificateFile parse_certificate(std::istream& in);
void write_certificate(std::ostream& out, const Certificate& cert, std::int64_t k);

}  // namespace dispersion
