#pragma once

#include <cstddef>

#include "dispersion/error.hpp"
#include "dispersion/graph.hpp"
#include "dispersion/oracle.hpp"
#include "dispersion/point.hpp"
#include "dispersion/rational.hpp"
#include "dispersion/solve2.hpp"

namespace dispersion {

/// Numerator >= 3 requested without permission to run the exponential
/// oracle.
class HardRegimeError : public Error {
 public:
  using Error::Error;
};

struct DispersionResult {
  std::size_t value = 0;
  WitnessSet witness;
};

struct SolveOptions {
  bool allow_bruteforce = false;
  OracleOptions oracle;
};

/// Points of a maximum (1/b)-dispersed set: all vertices plus the points
/// i/b on every edge for a tree, the points (2i-1)/(2b) otherwise.
std::vector<Point> unit_fraction_witness(const Graph& g, std::int64_t b);

/// Lifts a canonical 2-dispersed set to a 2/(2z+1)-dispersed set with
/// z|E| additional points.
std::vector<Point> lift_canonical_witness(const Graph& g, const CanonicalWitness& w, std::int64_t z);

/// delta-dispersion number with a verified witness. Numerator 1 uses the
/// closed form, numerator 2 the matching algorithm, larger numerators the
/// brute-force oracle when allowed (HardRegimeError otherwise).
DispersionResult disp(const Graph& g, const Rational& delta, const SolveOptions& options = {});

}  // namespace dispersion
