#include "vcgap/lp.hpp"

#include <string>

#include "vcgap/errors.hpp"

namespace vcgap {

const char* to_string(LpStatus status) {
    switch (status) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

namespace {

void validate_dimensions(const LpProblem& p) {
    if (p.num_vars < 0) throw InvariantError("lp: negative variable count");
    if (static_cast<int>(p.objective.size()) != p.num_vars) {
        throw InvariantError("lp: objective length does not match num_vars");
    }
    if (p.rows.size() != p.rhs.size()) {
        throw InvariantError("lp: row/rhs count mismatch");
    }
    for (const auto& row : p.rows) {
        if (static_cast<int>(row.size()) != p.num_vars) {
            throw InvariantError("lp: constraint row length does not match num_vars");
        }
    }
}

// Internal sanity pass over a finished solve. Any failure here is a tableau
// bug, so it throws rather than reporting.
void assert_optimal_consistent(const LpProblem& p, const LpSolution& s) {
    const int n = p.num_vars;
    const int m = p.num_constraints();
    Rat primal_obj = 0;
    for (int j = 0; j < n; ++j) {
        if (s.primal[j] < 0) throw InvariantError("lp: negative primal value");
        primal_obj += p.objective[j] * s.primal[j];
    }
    Rat dual_obj = 0;
    for (int i = 0; i < m; ++i) {
        if (s.dual[i] < 0) throw InvariantError("lp: negative dual multiplier");
        Rat lhs = 0;
        for (int j = 0; j < n; ++j) lhs += p.rows[i][j] * s.primal[j];
        if (lhs < p.rhs[i]) throw InvariantError("lp: primal infeasible at optimality");
        dual_obj += p.rhs[i] * s.dual[i];
    }
    for (int j = 0; j < n; ++j) {
        Rat col = 0;
        for (int i = 0; i < m; ++i) col += p.rows[i][j] * s.dual[i];
        if (col > p.objective[j]) throw InvariantError("lp: dual infeasible at optimality");
    }
    if (primal_obj != s.objective || dual_obj != s.objective) {
        throw InvariantError("lp: strong duality violated");
    }
}

}  // namespace

LpSolution solve(const LpProblem& p) {
    validate_dimensions(p);
    const int n = p.num_vars;
    const int m = p.num_constraints();

    // Equality form: one surplus column per row. Rows with positive rhs get an
    // artificial basic variable; rows with rhs <= 0 are negated so their
    // surplus column can start basic.
    int num_art = 0;
    for (int i = 0; i < m; ++i)
        if (p.rhs[i] > 0) ++num_art;

    const int cols = n + m + num_art;  // structural, surplus, artificial
    const int rhs_col = cols;

    std::vector<std::vector<Rat>> tab(static_cast<std::size_t>(m),
                                      std::vector<Rat>(static_cast<std::size_t>(cols + 1)));
    std::vector<int> basis(static_cast<std::size_t>(m));
    std::vector<bool> barred(static_cast<std::size_t>(cols), false);

    int art = 0;
    for (int i = 0; i < m; ++i) {
        auto& row = tab[static_cast<std::size_t>(i)];
        const bool negated = !(p.rhs[i] > 0);
        for (int j = 0; j < n; ++j) row[j] = negated ? -p.rows[i][j] : p.rows[i][j];
        row[n + i] = negated ? Rat(1) : Rat(-1);
        row[rhs_col] = negated ? -p.rhs[i] : p.rhs[i];
        if (negated) {
            basis[static_cast<std::size_t>(i)] = n + i;
        } else {
            basis[static_cast<std::size_t>(i)] = n + m + art;
            row[n + m + art] = 1;
            ++art;
        }
    }

    // Reduced-cost rows; the last entry holds the negated objective value.
    std::vector<Rat> cost(static_cast<std::size_t>(cols + 1));
    for (int j = 0; j < n; ++j) cost[static_cast<std::size_t>(j)] = p.objective[j];
    std::vector<Rat> phase1(static_cast<std::size_t>(cols + 1));
    for (int k = n + m; k < cols; ++k) phase1[static_cast<std::size_t>(k)] = 1;
    for (int i = 0; i < m; ++i) {
        if (basis[static_cast<std::size_t>(i)] >= n + m) {
            for (int k = 0; k <= cols; ++k)
                phase1[static_cast<std::size_t>(k)] -= tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        }
    }

    auto pivot = [&](int r, int c) {
        auto& prow = tab[static_cast<std::size_t>(r)];
        const Rat pv = prow[static_cast<std::size_t>(c)];
        for (int k = 0; k <= cols; ++k) prow[static_cast<std::size_t>(k)] /= pv;
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            auto& row = tab[static_cast<std::size_t>(i)];
            const Rat factor = row[static_cast<std::size_t>(c)];
            if (factor == 0) continue;
            for (int k = 0; k <= cols; ++k)
                row[static_cast<std::size_t>(k)] -= factor * prow[static_cast<std::size_t>(k)];
        }
        // Both reduced-cost rows stay consistent across phases.
        for (std::vector<Rat>* cr : {&cost, &phase1}) {
            const Rat factor = (*cr)[static_cast<std::size_t>(c)];
            if (factor == 0) continue;
            for (int k = 0; k <= cols; ++k)
                (*cr)[static_cast<std::size_t>(k)] -= factor * prow[static_cast<std::size_t>(k)];
        }
        const int old = basis[static_cast<std::size_t>(r)];
        if (old >= n + m) barred[static_cast<std::size_t>(old)] = true;  // artificials never re-enter
        basis[static_cast<std::size_t>(r)] = c;
    };

    // One simplex phase under Bland's rule. Returns false on unboundedness.
    auto run_phase = [&](std::vector<Rat>& obj_row, bool allow_artificials) -> bool {
        const int scan = allow_artificials ? cols : n + m;
        for (;;) {
            int enter = -1;
            for (int j = 0; j < scan; ++j) {
                if (barred[static_cast<std::size_t>(j)]) continue;
                if (obj_row[static_cast<std::size_t>(j)] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;

            int leave = -1;
            Rat best_ratio;
            for (int i = 0; i < m; ++i) {
                const Rat& coef = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
                if (!(coef > 0)) continue;
                Rat ratio = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(rhs_col)] / coef;
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio &&
                     basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    };

    if (num_art > 0) {
        if (!run_phase(phase1, true)) {
            throw InvariantError("lp: phase-1 objective unbounded");
        }
        if (phase1[static_cast<std::size_t>(rhs_col)] != 0) {
            LpSolution s;
            s.status = LpStatus::Infeasible;
            return s;
        }
        // Drive leftover artificials out of the basis where possible. A row
        // whose artificial cannot leave is linearly dependent and stays inert
        // (all real entries zero, value zero).
        for (int i = 0; i < m; ++i) {
            if (basis[static_cast<std::size_t>(i)] < n + m) continue;
            for (int j = 0; j < n + m; ++j) {
                if (tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    if (!run_phase(cost, false)) {
        LpSolution s;
        s.status = LpStatus::Unbounded;
        return s;
    }

    LpSolution s;
    s.status = LpStatus::Optimal;
    s.primal.assign(static_cast<std::size_t>(n), Rat(0));
    for (int i = 0; i < m; ++i) {
        const int b = basis[static_cast<std::size_t>(i)];
        if (b < n) s.primal[static_cast<std::size_t>(b)] = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(rhs_col)];
    }
    // The dual multiplier of original row i is the reduced cost of its
    // surplus column (row negation during setup cancels in both places).
    s.dual.assign(static_cast<std::size_t>(m), Rat(0));
    for (int i = 0; i < m; ++i) s.dual[static_cast<std::size_t>(i)] = cost[static_cast<std::size_t>(n + i)];
    s.objective = -cost[static_cast<std::size_t>(rhs_col)];

    assert_optimal_consistent(p, s);
    return s;
}

Report check_certificate(const LpProblem& p, const LpSolution& s) {
    Report report;

    if (s.status != LpStatus::Optimal) {
        report.add("status_optimal", false,
                   std::string("solution status is ") + to_string(s.status));
        return report;
    }
    report.add("status_optimal", true);

    const int n = p.num_vars;
    const int m = p.num_constraints();
    if (static_cast<int>(s.primal.size()) != n || static_cast<int>(s.dual.size()) != m) {
        report.add("dimensions", false, "primal/dual vector length mismatch");
        return report;
    }
    report.add("dimensions", true);

    bool nonneg = true;
    std::string detail;
    for (int j = 0; j < n && nonneg; ++j) {
        if (s.primal[j] < 0) {
            nonneg = false;
            detail = "x_" + std::to_string(j) + " = " + rat_str(s.primal[j]);
        }
    }
    report.add("primal_nonneg", nonneg, detail);

    bool feasible = true;
    detail.clear();
    std::vector<Rat> row_activity(static_cast<std::size_t>(m), Rat(0));
    for (int i = 0; i < m; ++i) {
        Rat lhs = 0;
        for (int j = 0; j < n; ++j) lhs += p.rows[i][j] * s.primal[j];
        row_activity[static_cast<std::size_t>(i)] = lhs;
        if (feasible && lhs < p.rhs[i]) {
            feasible = false;
            detail = "constraint " + std::to_string(i) + ": " + rat_str(lhs) + " < " +
                     rat_str(p.rhs[i]);
        }
    }
    report.add("primal_feasible", feasible, detail);

    bool dual_nonneg = true;
    detail.clear();
    for (int i = 0; i < m && dual_nonneg; ++i) {
        if (s.dual[i] < 0) {
            dual_nonneg = false;
            detail = "y_" + std::to_string(i) + " = " + rat_str(s.dual[i]);
        }
    }
    report.add("dual_nonneg", dual_nonneg, detail);

    bool dual_feasible = true;
    detail.clear();
    std::vector<Rat> col_activity(static_cast<std::size_t>(n), Rat(0));
    for (int j = 0; j < n; ++j) {
        Rat col = 0;
        for (int i = 0; i < m; ++i) col += p.rows[i][j] * s.dual[i];
        col_activity[static_cast<std::size_t>(j)] = col;
        if (dual_feasible && col > p.objective[j]) {
            dual_feasible = false;
            detail = "variable " + std::to_string(j) + ": " + rat_str(col) + " > " +
                     rat_str(p.objective[j]);
        }
    }
    report.add("dual_feasible", dual_feasible, detail);

    Rat primal_obj = 0;
    for (int j = 0; j < n; ++j) primal_obj += p.objective[j] * s.primal[j];
    Rat dual_obj = 0;
    for (int i = 0; i < m; ++i) dual_obj += p.rhs[i] * s.dual[i];

    report.add("objective_stated", primal_obj == s.objective,
               primal_obj == s.objective
                   ? ""
                   : "c.x = " + rat_str(primal_obj) + " but stated " + rat_str(s.objective));
    report.add("objective_duality", primal_obj == dual_obj,
               primal_obj == dual_obj
                   ? ""
                   : "c.x = " + rat_str(primal_obj) + " vs b.y = " + rat_str(dual_obj));

    bool slack = true;
    detail.clear();
    for (int i = 0; i < m && slack; ++i) {
        if (s.dual[i] != 0 && row_activity[static_cast<std::size_t>(i)] != p.rhs[i]) {
            slack = false;
            detail = "row " + std::to_string(i) + " slack with y_" + std::to_string(i) + " != 0";
        }
    }
    for (int j = 0; j < n && slack; ++j) {
        if (s.primal[j] != 0 && col_activity[static_cast<std::size_t>(j)] != p.objective[j]) {
            slack = false;
            detail = "variable " + std::to_string(j) + " positive with nonzero reduced cost";
        }
    }
    report.add("complementary_slackness", slack, detail);

    return report;
}

}  // namespace vcgap
