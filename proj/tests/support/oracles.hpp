#pragma once

// Slow reference computations used only to cross-check the library.

#include <cstddef>
#include <optional>
#include <vector>

#include "dispersion/certify.hpp"
#include "dispersion/graph.hpp"
#include "dispersion/oracle.hpp"
#include "dispersion/rational.hpp"
#include "dispersion/solve2.hpp"

namespace dispersion::testing {

/// Matching number by exhaustive recursion, optionally with one vertex deleted.
std::size_t brute_matching_number(const Graph& g, std::optional<VertexId> removed = {});

/// {v : nu(G - v) = nu(G)} by the definition.
std::vector<VertexId> brute_missable_vertices(const Graph& g);

/// Minimum of |N(T)| - |T| over all 2^|left| subsets.
std::int64_t brute_min_g(const CutInstance& inst);

/// Conflict matrix from exact rational point distances, same candidate
/// order as build_conflict_graph.
BitMatrix exact_conflict_matrix(const Graph& g, const Rational& delta);

/// Independence number by subset enumeration (n <= 24).
std::size_t brute_independence_number(const BitMatrix& adj);

/// All independent vertex sets of a small graph.
std::vector<std::vector<VertexId>> all_independent_sets(const Graph& h);

/// Feasibility by scanning every variable over {0, step, 2 step, ..., 1}.
bool grid_feasible(std::size_t variable_count, const std::vector<LinearRow>& rows, const Rational& step);

}  // namespace dispersion::testing
