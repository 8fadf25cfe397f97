#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "dispersion/graph.hpp"

namespace dispersion::testing {

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_graph(std::size_t n);

/// Every connected graph on vertex set {0..n-1} (labeled, all edge subsets).
std::vector<Graph> labeled_connected_graphs(std::size_t n);

/// One representative per isomorphism class of connected graphs with
/// between 1 and max_edges edges, plus the single vertex.
std::vector<Graph> connected_graphs_up_to_edges(std::size_t max_edges);

/// Random spanning tree plus each remaining pair with probability p.
Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p);
Graph random_tree(std::mt19937_64& rng, std::size_t n);
/// Connected graph with exactly `edges` edges and at least one cycle.
Graph random_cyclic_graph(std::mt19937_64& rng, std::size_t edges);

}  // namespace dispersion::testing
