#include "vcgap/instances.hpp"

namespace vcgap {

Rat random_cost_entry(SeededRng& rng) {
    const long num = static_cast<long>(bounded(rng, 21));
    const long den = static_cast<long>(1 + bounded(rng, 4));
    return rat(num, den);
}

CostVector random_costs(SeededRng& rng, int n) {
    CostVector c;
    c.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) c.push_back(random_cost_entry(rng));
    return c;
}

Graph random_graph(SeededRng& rng, int max_n) {
    const int n = static_cast<int>(1 + bounded(rng, static_cast<std::uint64_t>(max_n)));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (bounded(rng, 2) == 1) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph random_bipartite_graph(SeededRng& rng, int max_n) {
    const int half = std::max(1, max_n / 2);
    const int a = static_cast<int>(1 + bounded(rng, static_cast<std::uint64_t>(half)));
    const int b = static_cast<int>(1 + bounded(rng, static_cast<std::uint64_t>(half)));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u) {
        for (int v = 0; v < b; ++v) {
            if (bounded(rng, 2) == 1) edges.emplace_back(u, a + v);
        }
    }
    if (edges.empty()) edges.emplace_back(0, a);
    return Graph::from_edges(a + b, std::move(edges));
}

}  // namespace vcgap
