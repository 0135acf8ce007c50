#pragma once

#include <vector>

#include "vcgap/rat.hpp"
#include "vcgap/report.hpp"

namespace vcgap {

/// min objective . x   subject to   rows[i] . x >= rhs[i],   x >= 0.
struct LpProblem {
    int num_vars = 0;
    std::vector<Rat> objective;          // size num_vars
    std::vector<std::vector<Rat>> rows;  // each of size num_vars
    std::vector<Rat> rhs;                // size rows.size()

    int num_constraints() const { return static_cast<int>(rows.size()); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus status);

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rat> primal;  // size num_vars when optimal
    std::vector<Rat> dual;    // size num_constraints when optimal, one multiplier per row
    Rat objective = 0;
};

// Exact two-phase primal simplex on a dense rational tableau. Bland's rule
// (lowest index for both entering and leaving variable) makes the pivot
// sequence deterministic and cycle-free. When optimal, the primal is a basic
// feasible solution -- an extreme point of the feasible polyhedron -- and the
// dual certifies optimality with exact objective equality.
// Throws InvariantError on dimension mismatches (distinct from Infeasible).
LpSolution solve(const LpProblem& p);

// Re-checks a claimed optimal solution using only rational arithmetic:
// primal feasibility, dual feasibility, objective equality, and
// complementary slackness, each reported separately.
Report check_certificate(const LpProblem& p, const LpSolution& s);

}  // namespace vcgap
