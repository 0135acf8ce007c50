#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "vcgap/errors.hpp"
#include "vcgap/gap.hpp"
#include "vcgap/instances.hpp"

using namespace vcgap;

namespace {

std::string report_failures(const Report& report) {
    std::string out;
    for (const Report::Entry& e : report.entries) {
        if (!e.pass) out += e.check + (e.detail.empty() ? "" : " (" + e.detail + ")") + "; ";
    }
    return out.empty() ? "all checks passed" : out;
}

}  // namespace

TEST_CASE("integrality gap on known families") {
    CHECK(integrality_gap(cycle_graph(4)) == Rat(1));
    CHECK(integrality_gap(complete_bipartite_graph(3, 2)) == Rat(1));
    CHECK(integrality_gap(cycle_graph(5)) == rat(6, 5));
    for (int n = 3; n <= 8; ++n) {
        CHECK(chi_f_bruteforce(complete_graph(n)).value == Rat(n));  // oracle for the formula
        CHECK(integrality_gap(complete_graph(n)) == 2 - Rat(2) / Rat(n));
    }
    CHECK_THROWS_AS(integrality_gap(Graph::from_edges(3, {})), DomainError);
}

TEST_CASE("odd cycles: gap equals (2k+2)/(2k+1)") {
    for (int k = 1; k <= 5; ++k) {
        // oracle confirms chi_f, then the closed form
        CHECK(chi_f_bruteforce(cycle_graph(2 * k + 1)).value == 2 + Rat(1) / Rat(k));
        CHECK(integrality_gap(cycle_graph(2 * k + 1)) == Rat(2 * k + 2) / Rat(2 * k + 1));
    }
}

TEST_CASE("worst-case certificate for the triangle") {
    const Graph g = complete_graph(3);
    const GapCertificate cert = worst_case_certificate(g);
    CHECK(cert.chi_f == Rat(3));
    CHECK(cert.rho == rat(4, 3));
    CHECK(cert.worst_cost == CostVector(3, Rat(1)));
    CHECK(cert.lp_value == rat(3, 2));
    CHECK(cert.ip_value == Rat(2));
    CHECK(cert.ratio == rat(4, 3));
    // oracle agreement under the constructed costs
    CHECK(testing::vc_lp_opt_by_enumeration(g, cert.worst_cost) == cert.lp_value);
    CHECK(testing::min_vc_by_enumeration(g, cert.worst_cost).first == cert.ip_value);
}

TEST_CASE("worst-case certificate for the five-cycle") {
    const Graph g = cycle_graph(5);
    const GapCertificate cert = worst_case_certificate(g);
    CHECK(cert.chi_f == rat(5, 2));
    CHECK(cert.worst_cost == CostVector(5, rat(1, 2)));
    CHECK(cert.lp_value == rat(5, 4));
    CHECK(cert.ip_value == rat(3, 2));  // minimum cover has 3 vertices at cost 1/2 each
    CHECK(cert.ratio == rat(6, 5));
    CHECK(testing::vc_lp_opt_by_enumeration(g, cert.worst_cost) == cert.lp_value);
    CHECK(testing::min_vc_by_enumeration(g, cert.worst_cost).first == cert.ip_value);
}

TEST_CASE("worst-case certificate for a single edge") {
    const GapCertificate cert = worst_case_certificate(Graph::from_edges(2, {{0, 1}}));
    CHECK(cert.chi_f == Rat(2));
    CHECK(cert.rho == Rat(1));
    CHECK(cert.worst_cost == CostVector(2, Rat(1)));
    CHECK(cert.lp_value == Rat(1));
    CHECK(cert.ip_value == Rat(1));
    CHECK(cert.ratio == Rat(1));
}

TEST_CASE("decomposition of the all-half triangle point hits equality") {
    const Graph g = complete_graph(3);
    const GapCertificate cert = worst_case_certificate(g);
    REQUIRE(cert.covers.size() == 3);
    // classes are the three singletons; covers are the three 2-element sets
    REQUIRE(cert.h_coloring.classes.size() == 3);
    CHECK(cert.h_coloring.value == Rat(3));
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(cert.covers[k].lambda == rat(1, 3));
        CHECK(cert.covers[k].cover.size() == 2);
    }
    // per-vertex combination equals rho * x exactly here: (2/3, 2/3, 2/3)
    for (int v = 0; v < 3; ++v) {
        Rat rhs = 0;
        for (const CoverTerm& term : cert.covers) {
            if (term.cover.contains(v)) rhs += term.lambda;
        }
        CHECK(rhs == rat(2, 3));
        CHECK(cert.rho * cert.x_star.x[static_cast<std::size_t>(v)] == rhs);
    }
}

TEST_CASE("decomposition of an integral point degenerates to the V1 cover") {
    // single edge: x = (1,0) is optimal under costs (1,2)
    const Graph g = Graph::from_edges(2, {{0, 1}});
    const HalfIntegralVC x = solve_vc_lp(g, CostVector{Rat(1), Rat(2)});
    REQUIRE(x.v_half.empty());
    REQUIRE(x.v1.members() == std::vector<int>{0});
    const Decomposition dec = decompose_upper(g, x);
    CHECK(dec.h_coloring.classes.empty());
    REQUIRE(dec.covers.size() == 1);
    CHECK(dec.covers[0].cover == x.v1);
    CHECK(dec.covers[0].lambda == Rat(1));
}

TEST_CASE("decomposition of the all-half five-cycle point") {
    const Graph g = cycle_graph(5);
    const GapCertificate cert = worst_case_certificate(g);
    CHECK(cert.h_coloring.value == rat(5, 2));
    REQUIRE(cert.covers.size() == 5);
    for (const CoverTerm& term : cert.covers) {
        CHECK(term.cover.size() == 3);
        CHECK(term.lambda == rat(1, 5));
        CHECK(is_vertex_cover(g, term.cover));
    }
    // rho * x_v = (6/5)(1/2) = 3/5 and each vertex sits in 3 of the 5 covers
    for (int v = 0; v < 5; ++v) {
        Rat rhs = 0;
        for (const CoverTerm& term : cert.covers) {
            if (term.cover.contains(v)) rhs += term.lambda;
        }
        CHECK(rhs == rat(3, 5));
    }
}

TEST_CASE("decompose_upper rejects junk input") {
    const Graph g = complete_graph(3);
    HalfIntegralVC bogus;
    bogus.x = {rat(1, 3), rat(1, 3), rat(1, 3)};
    CHECK_THROWS_AS(decompose_upper(g, bogus), InvariantError);

    HalfIntegralVC infeasible;
    infeasible.x = {Rat(0), Rat(0), Rat(1)};
    const NtPartition p = nt_partition(infeasible.x);
    infeasible.v0 = p.v0;
    infeasible.v_half = p.v_half;
    infeasible.v1 = p.v1;
    CHECK_THROWS_AS(decompose_upper(g, infeasible), InvariantError);
}

TEST_CASE("verification passes on untampered certificates") {
    for (const Graph& g : {complete_graph(3), complete_graph(4), cycle_graph(5), cycle_graph(7),
                           kneser_graph(5, 2), complete_bipartite_graph(2, 3)}) {
        const GapCertificate cert = worst_case_certificate(g);
        const Report report = verify_certificate(g, cert);
        INFO(report_failures(report));
        CHECK(report.ok());
        // oracle mode re-derives chi_f by enumeration
        CHECK(verify_certificate(g, cert, {true, 20}).ok());
    }
}

TEST_CASE("verification catches a perturbed lambda") {
    const Graph g = complete_graph(3);
    GapCertificate cert = worst_case_certificate(g);
    cert.covers[0].lambda = rat(1, 2);  // breaks the convex sum
    const Report report = verify_certificate(g, cert);
    CHECK_FALSE(report.ok());
    CHECK_FALSE(report.find("lambda.convex")->pass);
    CHECK(report.find("covers.valid")->pass);        // unrelated checks stay green
    CHECK(report.find("x_star.feasible")->pass);
    CHECK(report.find("ratio.equals_rho")->pass);
}

TEST_CASE("verification catches a broken cover and names an edge") {
    const Graph g = complete_graph(3);
    GapCertificate cert = worst_case_certificate(g);
    // drop one vertex from the first cover
    std::vector<int> members = cert.covers[0].cover.members();
    members.pop_back();
    cert.covers[0].cover = VertexSet(std::move(members));
    const Report report = verify_certificate(g, cert);
    CHECK_FALSE(report.ok());
    CHECK_FALSE(report.find("covers.valid")->pass);
    CHECK(report.find("covers.valid")->detail.find("edge") != std::string::npos);
    CHECK(report.find("lambda.convex")->pass);
}

TEST_CASE("verification catches tampered values") {
    const Graph g = cycle_graph(5);
    GapCertificate cert = worst_case_certificate(g);

    GapCertificate wrong_chi = cert;
    wrong_chi.chi_f = Rat(3);
    CHECK_FALSE(verify_certificate(g, wrong_chi).ok());

    GapCertificate wrong_x = cert;
    wrong_x.x_star.x[0] = rat(1, 3);
    const Report rx = verify_certificate(g, wrong_x);
    CHECK_FALSE(rx.find("x_star.half_integral")->pass);

    GapCertificate wrong_ratio = cert;
    wrong_ratio.ratio = Rat(2);
    const Report rr = verify_certificate(g, wrong_ratio);
    CHECK_FALSE(rr.find("ratio.consistent")->pass);
    CHECK_FALSE(rr.find("ratio.equals_rho")->pass);
}

TEST_CASE("empirical ratios") {
    CHECK(empirical_ratio(complete_graph(3), unit_costs(3)) == rat(4, 3));
    CHECK(empirical_ratio(cycle_graph(4), unit_costs(4)) == Rat(1));

    // skewed costs on the five-cycle: both values via enumeration, then the
    // library, and the ratio stays below the gap
    const Graph c5 = cycle_graph(5);
    const CostVector skew{Rat(1), Rat(1), Rat(1), Rat(1), Rat(100)};
    const Rat lp = testing::vc_lp_opt_by_enumeration(c5, skew);
    const Rat ip = testing::min_vc_by_enumeration(c5, skew).first;
    const Rat ratio = empirical_ratio(c5, skew);
    CHECK(ratio == ip / lp);
    CHECK(ratio <= rat(6, 5));

    CHECK_THROWS_AS(empirical_ratio(Graph::from_edges(2, {}), CostVector{}), DomainError);
}

TEST_CASE("zero LP value raises the undefined-ratio error with the IP value") {
    // star with a free center: buying the center covers everything at cost 0
    const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    const CostVector c{Rat(0), Rat(1), Rat(1), Rat(1)};
    try {
        empirical_ratio(star, c);
        FAIL("expected RatioUndefinedError");
    } catch (const RatioUndefinedError& e) {
        CHECK(e.ip_value == Rat(0));
    }
}

TEST_CASE("random costs never exceed the gap") {
    SeededRng rng(1234);
    for (const Graph& g : {complete_graph(4), cycle_graph(7), kneser_graph(5, 2),
                           complete_bipartite_graph(3, 3)}) {
        const Rat rho = integrality_gap(g);
        for (int trial = 0; trial < 25; ++trial) {
            const CostVector c = random_costs(rng, g.num_vertices());
            try {
                CHECK(empirical_ratio(g, c) <= rho);
            } catch (const RatioUndefinedError& e) {
                CHECK(e.ip_value == Rat(0));  // degenerate: both values vanish
            }
        }
    }
}

TEST_CASE("deep pipeline: double Mycielski iterate, 23 vertices") {
    // chi_f follows the recurrence twice from chi_f(C5) = 5/2:
    // 5/2 -> 29/10 -> 29/10 + 10/29 = 941/290. The certificate must then pin
    // lp = chi_f/2 and ip = chi_f - 1 exactly.
    const Graph g = mycielskian(mycielskian(cycle_graph(5)));
    REQUIRE(g.num_vertices() == 23);
    const GapCertificate cert = worst_case_certificate(g);
    CHECK(cert.chi_f == rat(941, 290));
    CHECK(cert.rho == rat(1302, 941));
    CHECK(cert.lp_value == rat(941, 580));
    CHECK(cert.ip_value == rat(651, 290));
    CHECK(cert.ratio == cert.rho);
    const Report report = verify_certificate(g, cert);
    INFO(report_failures(report));
    CHECK(report.ok());
}

TEST_CASE("deep pipeline: kneser(6,2), 15 vertices") {
    const Graph g = kneser_graph(6, 2);
    REQUIRE(g.num_vertices() == 15);
    const GapCertificate cert = worst_case_certificate(g);
    CHECK(cert.chi_f == Rat(3));  // n/k
    CHECK(cert.rho == rat(4, 3));
    CHECK(cert.lp_value == rat(3, 2));
    CHECK(cert.ip_value == Rat(2));
    CHECK(verify_certificate(g, cert).ok());
}

TEST_CASE("achieved ratio equals the gap across the corpus") {
    for (const auto& [name, g] : testing::corpus()) {
        if (g.num_vertices() > 11) continue;  // the full sweep lives in acceptance
        INFO(name);
        const GapCertificate cert = worst_case_certificate(g);
        CHECK(cert.ratio == cert.rho);
        CHECK(cert.ratio == integrality_gap(g));
    }
}
