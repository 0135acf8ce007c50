#include <doctest.h>

#include "oracles.hpp"
#include "vcgap/errors.hpp"
#include "vcgap/instances.hpp"
#include "vcgap/vc_lp.hpp"

using namespace vcgap;

TEST_CASE("single edge: integral optimum") {
    const Graph g = Graph::from_edges(2, {{0, 1}});
    const HalfIntegralVC sol = solve_vc_lp(g, unit_costs(2));
    CHECK(sol.objective == Rat(1));
    CHECK(sol.v_half.empty());
    CHECK(sol.v0.size() == 1);
    CHECK(sol.v1.size() == 1);
}

TEST_CASE("triangle with unit costs: the all-half point") {
    const Graph g = complete_graph(3);
    const CostVector c = unit_costs(3);
    CHECK(testing::vc_lp_opt_by_enumeration(g, c) == rat(3, 2));  // oracle first
    const HalfIntegralVC sol = solve_vc_lp(g, c);
    CHECK(sol.objective == rat(3, 2));
    CHECK(sol.x == std::vector<Rat>(3, rat(1, 2)));  // unique optimum
    CHECK(sol.v_half == VertexSet::full(3));
}

TEST_CASE("five-cycle with unit costs") {
    const Graph g = cycle_graph(5);
    const CostVector c = unit_costs(5);
    CHECK(testing::vc_lp_opt_by_enumeration(g, c) == rat(5, 2));  // oracle first
    const HalfIntegralVC sol = solve_vc_lp(g, c);
    CHECK(sol.objective == rat(5, 2));
    CHECK(sol.x == std::vector<Rat>(5, rat(1, 2)));
    CHECK(sol.v0.empty());
    CHECK(sol.v1.empty());
}

TEST_CASE("triangle with costs (0,1,1): optimum value 1") {
    const Graph g = complete_graph(3);
    const CostVector c{Rat(0), Rat(1), Rat(1)};
    // brute force over {0,1/2,1}^3 resolves the expected objective
    CHECK(testing::vc_lp_opt_by_enumeration(g, c) == Rat(1));
    const HalfIntegralVC sol = solve_vc_lp(g, c);
    CHECK(sol.objective == Rat(1));
    // partition must mirror x exactly
    for (int v = 0; v < 3; ++v) {
        if (sol.x[static_cast<std::size_t>(v)] == 0) CHECK(sol.v0.contains(v));
        if (sol.x[static_cast<std::size_t>(v)] == rat(1, 2)) CHECK(sol.v_half.contains(v));
        if (sol.x[static_cast<std::size_t>(v)] == 1) CHECK(sol.v1.contains(v));
    }
}

TEST_CASE("cost validation") {
    const Graph g = complete_graph(3);
    CHECK_THROWS_AS(solve_vc_lp(g, CostVector{Rat(1), Rat(1)}), DomainError);
    CHECK_THROWS_AS(solve_vc_lp(g, CostVector{Rat(1), Rat(-1), Rat(1)}), DomainError);
    CHECK_THROWS_AS(solve_vc_lp_bipartite_double(g, CostVector{Rat(1)}), DomainError);
    CHECK_THROWS_AS(min_vc_exact(g, CostVector{Rat(-1), Rat(0), Rat(0)}), DomainError);
}

TEST_CASE("nt_partition splits by value and rejects other values") {
    const NtPartition p = nt_partition({Rat(0), rat(1, 2), Rat(1), rat(1, 2)});
    CHECK(p.v0.members() == std::vector<int>{0});
    CHECK(p.v_half.members() == std::vector<int>{1, 3});
    CHECK(p.v1.members() == std::vector<int>{2});
    CHECK_THROWS_AS(nt_partition({rat(1, 3)}), InvariantError);
    CHECK_THROWS_AS(nt_partition({Rat(2)}), InvariantError);
}

TEST_CASE("doubling route matches the simplex route on hand-checked shapes") {
    const Graph k3 = complete_graph(3);
    CHECK(solve_vc_lp_bipartite_double(k3, unit_costs(3)).objective == rat(3, 2));

    const Graph c4 = cycle_graph(4);
    const HalfIntegralVC sol = solve_vc_lp_bipartite_double(c4, unit_costs(4));
    CHECK(sol.objective == Rat(2));
    // bipartite: LP objective equals the exact IP objective
    CHECK(testing::min_vc_by_enumeration(c4, unit_costs(4)).first == sol.objective);
    // the simplex route lands on an extreme point, hence integral here
    const HalfIntegralVC extreme = solve_vc_lp(c4, unit_costs(4));
    CHECK(extreme.v_half.empty());
    CHECK(extreme.objective == Rat(2));

    const Graph lone = Graph::from_edges(1, {});
    const HalfIntegralVC single = solve_vc_lp_bipartite_double(lone, CostVector{Rat(7)});
    CHECK(single.objective == Rat(0));
    CHECK(single.x == std::vector<Rat>{Rat(0)});
}

TEST_CASE("min_vc_exact agrees with subset enumeration") {
    CHECK(min_vc_exact(complete_graph(3), unit_costs(3)).cost == Rat(2));
    CHECK(min_vc_exact(cycle_graph(5), unit_costs(5)).cost == Rat(3));

    const MinVertexCover empty = min_vc_exact(Graph::from_edges(4, {}), unit_costs(4));
    CHECK(empty.cover.empty());
    CHECK(empty.cost == Rat(0));
}

TEST_CASE("min_vc_exact enforces the size limit") {
    CHECK_THROWS_WITH_AS(min_vc_exact(cycle_graph(7), unit_costs(7), 5),
                         doctest::Contains("--limit-exact"), DomainError);
}

TEST_CASE("randomized cross-checks against both oracles") {
    SeededRng rng(90210);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(rng, 8);
        const CostVector c = random_costs(rng, g.num_vertices());

        const HalfIntegralVC lp = solve_vc_lp(g, c);  // construction asserts half-integrality
        CHECK(lp.objective == testing::vc_lp_opt_by_enumeration(g, c));

        const HalfIntegralVC doubled = solve_vc_lp_bipartite_double(g, c);
        CHECK(doubled.objective == lp.objective);

        const MinVertexCover ip = min_vc_exact(g, c);
        const auto [oracle_cost, oracle_cover] = testing::min_vc_by_enumeration(g, c);
        CHECK(ip.cost == oracle_cost);
        CHECK(is_vertex_cover(g, ip.cover));

        // sandwich: lp <= ip <= 2 lp
        CHECK(lp.objective <= ip.cost);
        CHECK(ip.cost <= 2 * lp.objective);
    }
}

TEST_CASE("half-integrality and V0-V1 pairing on larger random instances") {
    SeededRng rng(31337);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(rng, 10);
        const CostVector c = random_costs(rng, g.num_vertices());
        const HalfIntegralVC sol = solve_vc_lp(g, c);  // throws if not half-integral
        for (auto [u, v] : g.edges()) {
            if (sol.v0.contains(u)) CHECK(sol.v1.contains(v));
            if (sol.v0.contains(v)) CHECK(sol.v1.contains(u));
        }
    }
}

TEST_CASE("half-integrality: 50 random cost vectors per fixed graph") {
    SeededRng rng(64);
    for (const Graph& g : {kneser_graph(5, 2), cycle_graph(9), mycielskian(cycle_graph(3)),
                           complete_graph(7)}) {
        for (int trial = 0; trial < 50; ++trial) {
            const CostVector c = random_costs(rng, g.num_vertices());
            const HalfIntegralVC sol = solve_vc_lp(g, c);  // constructor enforces {0,1/2,1}
            CHECK(static_cast<int>(sol.x.size()) ==
                  sol.v0.size() + sol.v_half.size() + sol.v1.size());
        }
    }
}

TEST_CASE("bipartite graphs have integral relaxations") {
    SeededRng rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = random_bipartite_graph(rng, 12);
        const CostVector c = random_costs(rng, g.num_vertices());
        const HalfIntegralVC lp = solve_vc_lp(g, c);
        const MinVertexCover ip = min_vc_exact(g, c);
        CHECK(lp.objective == ip.cost);
    }
}

TEST_CASE("branch-and-bound is deterministic") {
    SeededRng rng(5);
    const Graph g = random_graph(rng, 9);
    const CostVector c = random_costs(rng, g.num_vertices());
    const MinVertexCover a = min_vc_exact(g, c);
    const MinVertexCover b = min_vc_exact(g, c);
    CHECK(a.cover == b.cover);
    CHECK(a.cost == b.cost);
}
