#pragma once

#include <cstdint>
#include <random>

#include "vcgap/graph.hpp"
#include "vcgap/vc_lp.hpp"

namespace vcgap {

// Seeded instance generation for property suites. std::mt19937_64 is fully
// specified by the standard and the draws below avoid
// std::uniform_int_distribution, so identical seeds give identical instances
// on every platform.
using SeededRng = std::mt19937_64;

// Uniform draw in [0, k); requires k >= 1. One rng draw per call.
inline std::uint64_t bounded(SeededRng& rng, std::uint64_t k) { return rng() % k; }

// Numerator uniform in 0..20, denominator in {1,2,3,4}: small rationals keep
// the exact IP solves fast while still exercising non-unit costs.
Rat random_cost_entry(SeededRng& rng);
CostVector random_costs(SeededRng& rng, int n);

// Random graph: n in 1..max_n, each pair an edge with probability 1/2.
Graph random_graph(SeededRng& rng, int max_n);

// Random bipartite graph with sides 1..max_n/2, guaranteed at least one edge.
Graph random_bipartite_graph(SeededRng& rng, int max_n);

}  // namespace vcgap
