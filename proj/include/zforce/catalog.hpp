#pragma once

#include <random>
#include <vector>

#include "zforce/graph.hpp"

namespace zforce {

/// Every graph on exactly n vertices (n <= 8), one per isomorphism class.
std::vector<Graph> all_graphs(int n);

/// Every connected cubic graph on n vertices, one per isomorphism class.
/// Intended for n <= 14.
std::vector<Graph> connected_cubic_graphs(int n);

/// Uniform-ish random connected simple cubic graph via the pairing model
/// with rejection. n must be even and >= 4.
Graph random_connected_cubic(int n, std::mt19937_64& rng);

/// Random spanning tree plus each remaining pair independently with
/// probability p.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

/// Each pair independently with probability p.
Graph random_graph(int n, double p, std::mt19937_64& rng);

}  // namespace zforce
