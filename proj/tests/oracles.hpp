#pragma once

// Brute-force reference implementations used only by tests. Each one is a
// direct enumeration, independent of the solver code paths it checks.

#include <utility>
#include <vector>

#include "vcgap/graph.hpp"
#include "vcgap/vc_lp.hpp"

namespace vcgap::testing {

// Minimum of c.x over all half-integral feasible points of the vertex cover
// relaxation (3^n enumeration). Extreme points of the relaxation are
// half-integral, so this equals the LP optimum. Keep n small (<= 10).
inline Rat vc_lp_opt_by_enumeration(const Graph& g, const CostVector& c) {
    const int n = g.num_vertices();
    std::vector<int> halves(static_cast<std::size_t>(n), 0);  // x_v in {0, 1/2, 1} as 0,1,2
    bool first = true;
    Rat best = 0;
    for (;;) {
        bool feasible = true;
        for (auto [u, v] : g.edges()) {
            if (halves[static_cast<std::size_t>(u)] + halves[static_cast<std::size_t>(v)] < 2) {
                feasible = false;
                break;
            }
        }
        if (feasible) {
            Rat cost = 0;
            for (int v = 0; v < n; ++v) {
                cost += c[static_cast<std::size_t>(v)] * Rat(halves[static_cast<std::size_t>(v)]);
            }
            cost /= 2;
            if (first || cost < best) {
                best = cost;
                first = false;
            }
        }
        int k = 0;
        while (k < n && halves[static_cast<std::size_t>(k)] == 2) {
            halves[static_cast<std::size_t>(k)] = 0;
            ++k;
        }
        if (k == n) break;
        ++halves[static_cast<std::size_t>(k)];
    }
    return best;
}

// Minimum-cost vertex cover over all 2^n subsets; returns cost and the first
// (lowest bitmask) optimal cover. Keep n <= 20.
inline std::pair<Rat, VertexSet> min_vc_by_enumeration(const Graph& g, const CostVector& c) {
    const int n = g.num_vertices();
    bool first = true;
    Rat best = 0;
    unsigned long best_mask = 0;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        bool covers = true;
        for (auto [u, v] : g.edges()) {
            if (!((mask >> u) & 1ul) && !((mask >> v) & 1ul)) {
                covers = false;
                break;
            }
        }
        if (!covers) continue;
        Rat cost = 0;
        for (int v = 0; v < n; ++v) {
            if ((mask >> v) & 1ul) cost += c[static_cast<std::size_t>(v)];
        }
        if (first || cost < best) {
            best = cost;
            best_mask = mask;
            first = false;
        }
    }
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
        if ((best_mask >> v) & 1ul) members.push_back(v);
    }
    return {best, VertexSet(std::move(members))};
}

// All independent sets of g (not only maximal ones), by subset enumeration.
inline std::vector<VertexSet> independent_sets_by_enumeration(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<VertexSet> sets;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v) {
            if ((mask >> v) & 1ul) members.push_back(v);
        }
        VertexSet s(std::move(members));
        if (is_independent(g, s)) sets.push_back(std::move(s));
    }
    return sets;
}

}  // namespace vcgap::testing
