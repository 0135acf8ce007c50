#pragma once

#include <vector>

#include "vcgap/errors.hpp"
#include "vcgap/frac_chromatic.hpp"
#include "vcgap/graph.hpp"
#include "vcgap/rat.hpp"
#include "vcgap/report.hpp"
#include "vcgap/vc_lp.hpp"

namespace vcgap {

/// One cover of the convex decomposition with its convex weight.
struct CoverTerm {
    VertexSet cover;
    Rat lambda;
};

/// Full witness that the integrality gap of the vertex-cover LP relaxation
/// equals 2 - 2/chi_f(G), re-checkable with graph predicates and rational
/// arithmetic alone:
///   - worst_cost is the optimal dual of the fractional-coloring LP; under it
///     lp_value <= chi_f/2 and ip_value >= chi_f - 1, so the ratio attains
///     the gap (lower-bound direction);
///   - x_star is an optimal half-integral extreme point under worst_cost, and
///     covers is a convex combination of integral covers dominated by
///     rho * x_star componentwise (upper-bound direction): each cover is
///     (V_half \ U) union V_1 for a color class U of h_coloring, the
///     fractional coloring of the subgraph induced by V_half, with weight
///     lambda_U = y_U / value(h_coloring).
struct GapCertificate {
    Rat chi_f;
    Rat rho;
    CostVector worst_cost;
    Rat lp_value;
    Rat ip_value;
    Rat ratio;
    HalfIntegralVC x_star;
    FractionalColoring h_coloring;  // classes in original vertex indices
    std::vector<CoverTerm> covers;
};

// 2 - 2/chi_f(G), exact. Throws DomainError on an edgeless graph
// (chi_f >= 2 needs at least one edge).
Rat integrality_gap(const Graph& g);

// Builds the full certificate: dual weights as costs, exact LP and IP values
// under them, and the convex decomposition of rho * x_star.
GapCertificate worst_case_certificate(const Graph& g, int exact_limit = kDefaultExactLimit);

struct Decomposition {
    FractionalColoring h_coloring;
    std::vector<CoverTerm> covers;
};

// Decomposes a feasible half-integral point: fractionally colors the
// subgraph induced by V_half and maps each color class U to the cover
// (V_half \ U) union V_1 with weight y_U / chi_f(H). When V_half is empty
// the decomposition degenerates to the single cover V_1 with weight 1.
Decomposition decompose_upper(const Graph& g, const HalfIntegralVC& x);

struct VerifyOptions {
    bool oracle = false;          // additionally re-derive chi_f by enumeration
    int oracle_limit = kDefaultOracleLimit;
};

// Independent pass/fail per certificate invariant. Uses only graph
// predicates and rational arithmetic -- never the LP solver -- so a solver
// bug cannot certify itself. Oracle mode re-checks chi_f by full enumeration.
Report verify_certificate(const Graph& g, const GapCertificate& cert,
                          const VerifyOptions& options = {});

// Thrown when the LP value under a cost vector is zero, making the
// IP/LP ratio undefined; carries the (necessarily zero-cost) IP value.
struct RatioUndefinedError : DomainError {
    Rat ip_value;
    explicit RatioUndefinedError(const Rat& ip)
        : DomainError("LP value is 0 under this cost vector, ratio undefined (IP value " +
                      rat_str(ip) + ")"),
          ip_value(ip) {}
};

// Exact IP/LP ratio under one cost vector. Throws RatioUndefinedError when
// the LP value vanishes and DomainError on an edgeless graph.
Rat empirical_ratio(const Graph& g, const CostVector& c, int exact_limit = kDefaultExactLimit);

}  // namespace vcgap
