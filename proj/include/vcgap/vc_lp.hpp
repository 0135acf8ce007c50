#pragma once

#include <vector>

#include "vcgap/graph.hpp"
#include "vcgap/rat.hpp"

namespace vcgap {

/// Per-vertex nonnegative costs; length must match the graph.
using CostVector = std::vector<Rat>;

CostVector unit_costs(int n);

// Throws DomainError on length mismatch or a negative entry.
void require_valid_costs(const Graph& g, const CostVector& c);

inline constexpr int kDefaultExactLimit = 40;

/// An optimal solution of the vertex-cover LP relaxation together with its
/// {0, 1/2, 1} partition (V0 / V_half / V1). Extreme points of the relaxation
/// are half-integral, so a non-half-integral result signals a solver bug.
struct HalfIntegralVC {
    std::vector<Rat> x;
    Rat objective = 0;
    VertexSet v0, v_half, v1;
};

struct NtPartition {
    VertexSet v0, v_half, v1;
};

// Splits V by x_v = 0, 1/2, 1. Throws InvariantError on any other value.
NtPartition nt_partition(const std::vector<Rat>& x);

// Solves min c.x over { x >= 0 : x_u + x_v >= 1 for every edge } with the
// exact simplex kernel and asserts half-integrality of the extreme point.
HalfIntegralVC solve_vc_lp(const Graph& g, const CostVector& c);

// Independent route to the same optimum: double every vertex v into a left
// and right copy (both with cost c_v), replace each edge {u,v} by the pair
// {u',v''}, {v',u''}, solve the resulting weighted bipartite vertex cover
// exactly via max-flow/min-cut, and average the two copies. Half-integral by
// construction, optimal for the original LP, and solver-independent of the
// simplex path.
HalfIntegralVC solve_vc_lp_bipartite_double(const Graph& g, const CostVector& c);

struct MinVertexCover {
    VertexSet cover;
    Rat cost = 0;
};

// Exact minimum-weight vertex cover by branch-and-bound: branch on the
// lowest-index endpoint of the lowest-index uncovered edge (include branch
// first), prune with the exact LP value as lower bound. Deterministic.
// Throws DomainError when the graph exceeds size_limit.
MinVertexCover min_vc_exact(const Graph& g, const CostVector& c,
                            int size_limit = kDefaultExactLimit);

}  // namespace vcgap
