#pragma once

#include <vector>

#include "vcgap/graph.hpp"
#include "vcgap/rat.hpp"

namespace vcgap {

inline constexpr int kDefaultOracleLimit = 20;

/// Feasible fractional coloring: independent sets with positive weights such
/// that every vertex gathers total weight >= 1; value is the weight sum.
struct ColorClass {
    VertexSet vertices;
    Rat weight;
};

struct FractionalColoring {
    std::vector<ColorClass> classes;
    Rat value = 0;
};

/// Dual side: nonnegative vertex weights with sum z(U) <= 1 over every
/// independent set U; at the optimum the total equals the fractional
/// chromatic number.
struct DualWeights {
    std::vector<Rat> z;
    Rat value = 0;
};

struct ChiFResult {
    FractionalColoring coloring;
    DualWeights duals;
    Rat value = 0;
};

// Exact max-weight independent set by branch-and-bound. Requires z >= 0.
// Ties are broken toward the lexicographically smallest maximizing set
// (compared as sorted index sequences, so the empty set beats everything
// when all weights are zero).
struct PricedColumn {
    VertexSet vertices;
    Rat weight;
};

PricedColumn price_column(const Graph& g, const std::vector<Rat>& z);

// Exact fractional chromatic number by column generation: restricted master
// over independent-set columns (seeded with singletons and greedy color
// classes), pricing via price_column, exact termination when the pricing
// maximum is <= 1 -- which simultaneously certifies dual feasibility.
// Edgeless graphs with n >= 1 give value 1; the empty graph gives 0.
ChiFResult solve_chi_f(const Graph& g);

// Literal LP over all maximal independent sets (Bron-Kerbosch enumeration).
// Maximal sets suffice: enlarging a class never hurts coverage. Serves as the
// independent oracle for solve_chi_f. Throws DomainError above size_limit.
ChiFResult chi_f_bruteforce(const Graph& g, int size_limit = kDefaultOracleLimit);

// All maximal independent sets, each sorted, the list in lexicographic order.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

// First-fit coloring along vertex order; returns the color classes.
std::vector<VertexSet> greedy_coloring_classes(const Graph& g);

// Greedily extends an independent set to a maximal one (ascending vertex scan).
VertexSet maximalize_independent(const Graph& g, const VertexSet& s);

}  // namespace vcgap
