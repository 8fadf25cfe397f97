#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "dispersion/graph.hpp"

namespace dispersion {

/// A set of pairwise vertex-disjoint edges, held as ascending edge indices.
struct Matching {
  std::vector<EdgeIndex> edges;

  std::size_t size() const { return edges.size(); }
};

bool is_matching(const Graph& g, std::span<const EdgeIndex> edges);

/// Maximum-cardinality matching by Edmonds' blossom search.
Matching maximum_matching(const Graph& g);

std::size_t nu(const Graph& g);

/// Maximum matching of the subgraph induced by `vertices`.
Matching maximum_matching_induced(const Graph& g, std::span<const VertexId> vertices);

/// Matching on the subgraph induced by `component` that covers every vertex
/// except `missed`. Throws InternalError if none exists.
Matching near_perfect_matching(const Graph& g, std::span<const VertexId> component, VertexId missed);

/// Perfect matching of the subgraph induced by `component`; throws
/// InternalError if none exists.
Matching perfect_matching(const Graph& g, std::span<const VertexId> component);

/// Edmonds-Gallai partition V = X + Y + Z with the structure a maximum
/// matching induces on it.
struct EGDecomposition {
  std::vector<VertexId> X;  ///< missed by some maximum matching
  std::vector<VertexId> Y;  ///< neighbours of X outside X
  std::vector<VertexId> Z;  ///< everything else
  std::vector<VertexId> X1;                  ///< singleton components of G[X]
  std::vector<std::vector<VertexId>> Xbig;   ///< components of G[X] of size >= 3
  std::vector<std::vector<VertexId>> Zcomponents;
  std::map<VertexId, VertexId> y_partner;    ///< y -> M(y) in X
  Matching base_matching;
};

/// Computes X by the definition (v in X iff nu(G - v) = nu(G)) and derives
/// the rest. Every structural guarantee is checked; a violation throws
/// InternalError.
EGDecomposition edmonds_gallai(const Graph& g);

}  // namespace dispersion
