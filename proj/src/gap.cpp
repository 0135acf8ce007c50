#include "vcgap/gap.hpp"

#include <string>

#include "vcgap/errors.hpp"

namespace vcgap {

namespace {

void require_edges(const Graph& g) {
    if (g.num_edges() == 0) {
        throw DomainError(
            "graph has no edges: the integrality gap is defined for graphs with at least one "
            "edge (chi_f >= 2)");
    }
}

Rat gap_from_chi_f(const Rat& chi_f) { return 2 - Rat(2) / chi_f; }

// Componentwise check of rho * x >= sum of lambda * cover indicators.
// Returns the first violating vertex, or -1.
int domination_violation(int n, const Rat& rho, const std::vector<Rat>& x,
                         const std::vector<CoverTerm>& covers) {
    std::vector<Rat> rhs(static_cast<std::size_t>(n), Rat(0));
    for (const CoverTerm& term : covers) {
        for (int v : term.cover) rhs[static_cast<std::size_t>(v)] += term.lambda;
    }
    for (int v = 0; v < n; ++v) {
        if (rho * x[static_cast<std::size_t>(v)] < rhs[static_cast<std::size_t>(v)]) return v;
    }
    return -1;
}

}  // namespace

Rat integrality_gap(const Graph& g) {
    require_edges(g);
    return gap_from_chi_f(solve_chi_f(g).value);
}

Decomposition decompose_upper(const Graph& g, const HalfIntegralVC& x) {
    if (static_cast<int>(x.x.size()) != g.num_vertices()) {
        throw InvariantError("decompose_upper: solution length mismatch");
    }
    const NtPartition part = nt_partition(x.x);  // re-derives and validates half-integrality
    if (part.v0 != x.v0 || part.v_half != x.v_half || part.v1 != x.v1) {
        throw InvariantError("decompose_upper: stored partition inconsistent with x");
    }
    for (auto [u, v] : g.edges()) {
        if (x.x[static_cast<std::size_t>(u)] + x.x[static_cast<std::size_t>(v)] < 1) {
            throw InvariantError("decompose_upper: x is not a feasible fractional cover");
        }
    }

    Decomposition dec;
    if (x.v_half.empty()) {
        // Degenerate case: the point is integral and V_1 alone covers the graph.
        dec.covers.push_back({x.v1, Rat(1)});
    } else {
        const InducedSubgraph h = induced_subgraph(g, x.v_half);
        const ChiFResult h_chi = solve_chi_f(h.graph);
        dec.h_coloring.value = h_chi.value;
        for (const ColorClass& cls : h_chi.coloring.classes) {
            std::vector<int> original;
            original.reserve(static_cast<std::size_t>(cls.vertices.size()));
            for (int v : cls.vertices) original.push_back(h.to_original[static_cast<std::size_t>(v)]);
            const VertexSet u_original(std::move(original));
            dec.h_coloring.classes.push_back({u_original, cls.weight});
            dec.covers.push_back(
                {set_union(set_difference(x.v_half, u_original), x.v1), cls.weight / h_chi.value});
        }
    }

    Rat lambda_total = 0;
    for (const CoverTerm& term : dec.covers) {
        lambda_total += term.lambda;
        if (!is_vertex_cover(g, term.cover)) {
            throw InvariantError("decompose_upper: produced a non-cover");
        }
    }
    if (lambda_total != 1) {
        throw InvariantError("decompose_upper: convex weights sum to " + rat_str(lambda_total));
    }
    return dec;
}

GapCertificate worst_case_certificate(const Graph& g, int exact_limit) {
    require_edges(g);

    const ChiFResult chi = solve_chi_f(g);
    GapCertificate cert;
    cert.chi_f = chi.value;
    cert.rho = gap_from_chi_f(chi.value);
    cert.worst_cost = chi.duals.z;

    cert.x_star = solve_vc_lp(g, cert.worst_cost);
    cert.lp_value = cert.x_star.objective;
    if (2 * cert.lp_value > cert.chi_f) {
        throw InvariantError("certificate: LP value exceeds chi_f/2");
    }
    if (cert.lp_value == 0) {
        throw InvariantError("certificate: LP value vanished under the dual cost");
    }

    const MinVertexCover ip = min_vc_exact(g, cert.worst_cost, exact_limit);
    cert.ip_value = ip.cost;
    if (cert.ip_value < cert.chi_f - 1) {
        throw InvariantError("certificate: IP value below chi_f - 1");
    }

    cert.ratio = cert.ip_value / cert.lp_value;

    Decomposition dec = decompose_upper(g, cert.x_star);
    cert.h_coloring = std::move(dec.h_coloring);
    cert.covers = std::move(dec.covers);

    const int bad = domination_violation(g.num_vertices(), cert.rho, cert.x_star.x, cert.covers);
    if (bad >= 0) {
        throw InvariantError("certificate: domination fails at vertex " + std::to_string(bad));
    }
    if (cert.ratio != cert.rho) {
        throw InvariantError("certificate: achieved ratio " + rat_str(cert.ratio) +
                             " differs from 2 - 2/chi_f = " + rat_str(cert.rho));
    }
    return cert;
}

Report verify_certificate(const Graph& g, const GapCertificate& cert,
                          const VerifyOptions& options) {
    Report report;
    const int n = g.num_vertices();

    // -- shape ---------------------------------------------------------------
    const bool shape_ok = static_cast<int>(cert.x_star.x.size()) == n &&
                          static_cast<int>(cert.worst_cost.size()) == n;
    report.add("shape", shape_ok, shape_ok ? "" : "vector lengths do not match the graph");
    if (!shape_ok) return report;

    // -- x_star --------------------------------------------------------------
    {
        const Rat half(1, 2);
        bool half_integral = true;
        std::string detail;
        for (int v = 0; v < n && half_integral; ++v) {
            const Rat& xv = cert.x_star.x[static_cast<std::size_t>(v)];
            if (xv != 0 && xv != half && xv != 1) {
                half_integral = false;
                detail = "x_" + std::to_string(v) + " = " + rat_str(xv);
            }
        }
        report.add("x_star.half_integral", half_integral, detail);
    }
    {
        bool feasible = true;
        std::string detail;
        for (auto [u, v] : g.edges()) {
            if (cert.x_star.x[static_cast<std::size_t>(u)] +
                    cert.x_star.x[static_cast<std::size_t>(v)] <
                1) {
                feasible = false;
                detail = "edge (" + std::to_string(u) + ", " + std::to_string(v) + ")";
                break;
            }
        }
        report.add("x_star.feasible", feasible, detail);
    }
    {
        Rat obj = 0;
        for (int v = 0; v < n; ++v) {
            obj += cert.worst_cost[static_cast<std::size_t>(v)] *
                   cert.x_star.x[static_cast<std::size_t>(v)];
        }
        report.add("x_star.objective", obj == cert.lp_value,
                   obj == cert.lp_value ? ""
                                        : "cost . x_star = " + rat_str(obj) + " but lp_value = " +
                                              rat_str(cert.lp_value));
    }

    // -- partition -----------------------------------------------------------
    {
        bool consistent = cert.x_star.v0.size() + cert.x_star.v_half.size() +
                              cert.x_star.v1.size() ==
                          n;
        std::string detail;
        const Rat half(1, 2);
        for (int v = 0; v < n && consistent; ++v) {
            const Rat& xv = cert.x_star.x[static_cast<std::size_t>(v)];
            const bool in0 = cert.x_star.v0.contains(v);
            const bool inh = cert.x_star.v_half.contains(v);
            const bool in1 = cert.x_star.v1.contains(v);
            if (static_cast<int>(in0) + static_cast<int>(inh) + static_cast<int>(in1) != 1 ||
                (in0 && xv != 0) || (inh && xv != half) || (in1 && xv != 1)) {
                consistent = false;
                detail = "vertex " + std::to_string(v);
            }
        }
        report.add("partition.consistent", consistent, detail);
    }
    {
        bool paired = true;
        std::string detail;
        for (auto [u, v] : g.edges()) {
            const bool u0 = cert.x_star.v0.contains(u);
            const bool v0 = cert.x_star.v0.contains(v);
            if ((u0 && !cert.x_star.v1.contains(v)) || (v0 && !cert.x_star.v1.contains(u))) {
                paired = false;
                detail = "edge (" + std::to_string(u) + ", " + std::to_string(v) + ")";
                break;
            }
        }
        report.add("partition.v0_v1_pairing", paired, detail);
    }

    // -- gap arithmetic --------------------------------------------------------
    {
        const bool chi_positive = cert.chi_f > 0;
        report.add("chi_f.positive", chi_positive, chi_positive ? "" : rat_str(cert.chi_f));
        if (!chi_positive) return report;
    }
    report.add("rho.formula", cert.rho == gap_from_chi_f(cert.chi_f),
               cert.rho == gap_from_chi_f(cert.chi_f)
                   ? ""
                   : "rho = " + rat_str(cert.rho) + " but 2 - 2/chi_f = " +
                         rat_str(gap_from_chi_f(cert.chi_f)));
    {
        bool nonneg = true;
        std::string detail;
        Rat total = 0;
        for (int v = 0; v < n; ++v) {
            const Rat& cv = cert.worst_cost[static_cast<std::size_t>(v)];
            if (cv < 0 && nonneg) {
                nonneg = false;
                detail = "c_" + std::to_string(v) + " = " + rat_str(cv);
            }
            total += cv;
        }
        report.add("worst_cost.nonneg", nonneg, detail);
        report.add("worst_cost.total_is_chi_f", total == cert.chi_f,
                   total == cert.chi_f ? ""
                                       : "sum = " + rat_str(total) + " but chi_f = " +
                                             rat_str(cert.chi_f));
    }
    report.add("lp.le_half_chi_f", 2 * cert.lp_value <= cert.chi_f,
               2 * cert.lp_value <= cert.chi_f
                   ? ""
                   : "lp_value = " + rat_str(cert.lp_value) + " > chi_f/2");
    report.add("ip.ge_chi_f_minus_1", cert.ip_value >= cert.chi_f - 1,
               cert.ip_value >= cert.chi_f - 1
                   ? ""
                   : "ip_value = " + rat_str(cert.ip_value) + " < chi_f - 1");
    {
        const bool lp_positive = cert.lp_value > 0;
        report.add("lp.positive", lp_positive, lp_positive ? "" : rat_str(cert.lp_value));
        if (lp_positive) {
            report.add("ratio.consistent", cert.ratio == cert.ip_value / cert.lp_value,
                       cert.ratio == cert.ip_value / cert.lp_value
                           ? ""
                           : "ratio != ip_value / lp_value");
        }
    }
    report.add("ratio.equals_rho", cert.ratio == cert.rho,
               cert.ratio == cert.rho ? ""
                                      : "ratio = " + rat_str(cert.ratio) + " vs rho = " +
                                            rat_str(cert.rho));

    // -- induced coloring -------------------------------------------------------
    const bool degenerate = cert.h_coloring.classes.empty();
    {
        bool classes_ok = true;
        std::string detail;
        for (const ColorClass& cls : cert.h_coloring.classes) {
            for (int v : cls.vertices) {
                if (!cert.x_star.v_half.contains(v)) {
                    classes_ok = false;
                    detail = "class vertex " + std::to_string(v) + " outside V_half";
                    break;
                }
            }
            if (classes_ok && !is_independent(g, cls.vertices)) {
                classes_ok = false;
                detail = "a class is not independent";
            }
            if (classes_ok && !(cls.weight > 0)) {
                classes_ok = false;
                detail = "a class has nonpositive weight";
            }
            if (!classes_ok) break;
        }
        report.add("h_coloring.classes_independent", classes_ok, detail);
    }
    {
        bool covered = true;
        std::string detail;
        if (!degenerate) {
            for (int v : cert.x_star.v_half) {
                Rat total = 0;
                for (const ColorClass& cls : cert.h_coloring.classes) {
                    if (cls.vertices.contains(v)) total += cls.weight;
                }
                if (total < 1) {
                    covered = false;
                    detail = "vertex " + std::to_string(v) + " gathers only " + rat_str(total);
                    break;
                }
            }
        } else if (!cert.x_star.v_half.empty()) {
            covered = false;
            detail = "V_half nonempty but no coloring classes";
        }
        report.add("h_coloring.covers_v_half", covered, detail);
    }
    {
        Rat total = 0;
        for (const ColorClass& cls : cert.h_coloring.classes) total += cls.weight;
        report.add("h_coloring.value", total == cert.h_coloring.value,
                   total == cert.h_coloring.value
                       ? ""
                       : "class weights sum to " + rat_str(total) + " but value = " +
                             rat_str(cert.h_coloring.value));
    }
    if (!degenerate) {
        report.add("h_coloring.value_le_chi_f", cert.h_coloring.value <= cert.chi_f,
                   cert.h_coloring.value <= cert.chi_f
                       ? ""
                       : rat_str(cert.h_coloring.value) + " > " + rat_str(cert.chi_f));
    }

    // -- covers ---------------------------------------------------------------
    {
        bool valid = true;
        std::string detail;
        for (const CoverTerm& term : cert.covers) {
            if (!is_vertex_cover(g, term.cover)) {
                valid = false;
                for (auto [u, v] : g.edges()) {
                    if (!term.cover.contains(u) && !term.cover.contains(v)) {
                        detail = "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                 ") uncovered";
                        break;
                    }
                }
                break;
            }
        }
        report.add("covers.valid", valid, detail);
    }
    {
        bool corresponds = true;
        std::string detail;
        if (degenerate) {
            corresponds = cert.covers.size() == 1 && cert.covers[0].cover == cert.x_star.v1 &&
                          cert.covers[0].lambda == 1;
            if (!corresponds) detail = "expected the single cover V_1 with weight 1";
        } else if (cert.covers.size() != cert.h_coloring.classes.size()) {
            corresponds = false;
            detail = "cover count differs from class count";
        } else {
            for (std::size_t k = 0; k < cert.covers.size(); ++k) {
                const VertexSet expected = set_union(
                    set_difference(cert.x_star.v_half, cert.h_coloring.classes[k].vertices),
                    cert.x_star.v1);
                if (cert.covers[k].cover != expected) {
                    corresponds = false;
                    detail = "cover " + std::to_string(k) + " != (V_half \\ U) union V_1";
                    break;
                }
                if (cert.h_coloring.value > 0 &&
                    cert.covers[k].lambda !=
                        cert.h_coloring.classes[k].weight / cert.h_coloring.value) {
                    corresponds = false;
                    detail = "lambda_" + std::to_string(k) + " != y_U / value";
                    break;
                }
            }
        }
        report.add("covers.correspondence", corresponds, detail);
    }
    {
        Rat total = 0;
        bool nonneg = true;
        for (const CoverTerm& term : cert.covers) {
            total += term.lambda;
            if (term.lambda < 0) nonneg = false;
        }
        const bool convex = nonneg && total == 1;
        report.add("lambda.convex", convex,
                   convex ? "" : "weights sum to " + rat_str(total) +
                                     (nonneg ? "" : " with a negative entry"));
    }
    {
        const int bad = domination_violation(n, cert.rho, cert.x_star.x, cert.covers);
        report.add("domination", bad < 0,
                   bad < 0 ? "" : "rho * x_star < cover combination at vertex " +
                                      std::to_string(bad));
    }

    // -- oracle mode -------------------------------------------------------------
    if (options.oracle) {
        const ChiFResult oracle = chi_f_bruteforce(g, options.oracle_limit);
        report.add("oracle.chi_f", oracle.value == cert.chi_f,
                   oracle.value == cert.chi_f
                       ? ""
                       : "enumeration gives " + rat_str(oracle.value) + " but certificate says " +
                             rat_str(cert.chi_f));
    }

    return report;
}

Rat empirical_ratio(const Graph& g, const CostVector& c, int exact_limit) {
    require_edges(g);
    require_valid_costs(g, c);
    const HalfIntegralVC lp = solve_vc_lp(g, c);
    const MinVertexCover ip = min_vc_exact(g, c, exact_limit);
    if (lp.objective == 0) throw RatioUndefinedError(ip.cost);
    return ip.cost / lp.objective;
}

}  // namespace vcgap
