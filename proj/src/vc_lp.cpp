#include "vcgap/vc_lp.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <string>

#include "vcgap/errors.hpp"
#include "vcgap/lp.hpp"

namespace vcgap {

CostVector unit_costs(int n) { return CostVector(static_cast<std::size_t>(n), Rat(1)); }

void require_valid_costs(const Graph& g, const CostVector& c) {
    if (static_cast<int>(c.size()) != g.num_vertices()) {
        throw DomainError("cost vector has " + std::to_string(c.size()) + " entries, graph has " +
                          std::to_string(g.num_vertices()) + " vertices");
    }
    for (std::size_t v = 0; v < c.size(); ++v) {
        if (c[v] < 0) {
            throw DomainError("negative cost " + rat_str(c[v]) + " at vertex " + std::to_string(v));
        }
    }
}

NtPartition nt_partition(const std::vector<Rat>& x) {
    const Rat half(1, 2);
    std::vector<int> v0, vh, v1;
    for (std::size_t v = 0; v < x.size(); ++v) {
        if (x[v] == 0) v0.push_back(static_cast<int>(v));
        else if (x[v] == half) vh.push_back(static_cast<int>(v));
        else if (x[v] == 1) v1.push_back(static_cast<int>(v));
        else {
            throw InvariantError("not half-integral: x_" + std::to_string(v) + " = " +
                                 rat_str(x[v]));
        }
    }
    return {VertexSet(std::move(v0)), VertexSet(std::move(vh)), VertexSet(std::move(v1))};
}

namespace {

LpProblem vc_lp_problem(const Graph& g, const CostVector& c) {
    LpProblem p;
    p.num_vars = g.num_vertices();
    p.objective = c;
    p.rows.reserve(static_cast<std::size_t>(g.num_edges()));
    p.rhs.assign(static_cast<std::size_t>(g.num_edges()), Rat(1));
    for (auto [u, v] : g.edges()) {
        std::vector<Rat> row(static_cast<std::size_t>(p.num_vars), Rat(0));
        row[static_cast<std::size_t>(u)] = 1;
        row[static_cast<std::size_t>(v)] = 1;
        p.rows.push_back(std::move(row));
    }
    return p;
}

HalfIntegralVC wrap_half_integral(const Graph& g, std::vector<Rat> x, Rat objective) {
    for (auto [u, v] : g.edges()) {
        if (x[static_cast<std::size_t>(u)] + x[static_cast<std::size_t>(v)] < 1) {
            throw InvariantError("vertex cover LP solution violates edge (" + std::to_string(u) +
                                 ", " + std::to_string(v) + ")");
        }
    }
    NtPartition part = nt_partition(x);
    return {std::move(x), std::move(objective), std::move(part.v0), std::move(part.v_half),
            std::move(part.v1)};
}

// --- Edmonds-Karp max flow with exact rational capacities -------------------

class MaxFlow {
public:
    explicit MaxFlow(int n) : adj_(static_cast<std::size_t>(n)) {}

    void add_edge(int u, int v, const Rat& cap) {
        adj_[static_cast<std::size_t>(u)].push_back(
            {v, cap, static_cast<int>(adj_[static_cast<std::size_t>(v)].size())});
        adj_[static_cast<std::size_t>(v)].push_back(
            {u, Rat(0), static_cast<int>(adj_[static_cast<std::size_t>(u)].size()) - 1});
    }

    Rat run(int s, int t) {
        Rat total = 0;
        for (;;) {
            // BFS for a shortest augmenting path.
            std::vector<std::pair<int, int>> pred(adj_.size(), {-1, -1});  // (node, edge idx)
            pred[static_cast<std::size_t>(s)] = {s, -1};
            std::deque<int> queue{s};
            while (!queue.empty() && pred[static_cast<std::size_t>(t)].first < 0) {
                const int u = queue.front();
                queue.pop_front();
                const auto& edges = adj_[static_cast<std::size_t>(u)];
                for (std::size_t k = 0; k < edges.size(); ++k) {
                    const Edge& e = edges[k];
                    if (e.residual > 0 && pred[static_cast<std::size_t>(e.to)].first < 0) {
                        pred[static_cast<std::size_t>(e.to)] = {u, static_cast<int>(k)};
                        queue.push_back(e.to);
                    }
                }
            }
            if (pred[static_cast<std::size_t>(t)].first < 0) break;

            std::optional<Rat> bottleneck;
            for (int v = t; v != s;) {
                auto [u, k] = pred[static_cast<std::size_t>(v)];
                const Rat& res = adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)].residual;
                if (!bottleneck || res < *bottleneck) bottleneck = res;
                v = u;
            }
            for (int v = t; v != s;) {
                auto [u, k] = pred[static_cast<std::size_t>(v)];
                Edge& e = adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)];
                e.residual -= *bottleneck;
                adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(e.rev)].residual += *bottleneck;
                v = u;
            }
            total += *bottleneck;
        }
        return total;
    }

    // Residual reachability from s; defines the minimum cut after run().
    std::vector<bool> reachable(int s) const {
        std::vector<bool> seen(adj_.size(), false);
        seen[static_cast<std::size_t>(s)] = true;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (const Edge& e : adj_[static_cast<std::size_t>(u)]) {
                if (e.residual > 0 && !seen[static_cast<std::size_t>(e.to)]) {
                    seen[static_cast<std::size_t>(e.to)] = true;
                    queue.push_back(e.to);
                }
            }
        }
        return seen;
    }

private:
    struct Edge {
        int to;
        Rat residual;
        int rev;
    };
    std::vector<std::vector<Edge>> adj_;
};

// LP value only, via the doubling construction (the cover itself is not
// extracted). Used as the branch-and-bound lower bound.
Rat vc_lp_value_flow(int n, const std::vector<std::pair<int, int>>& edges, const CostVector& c) {
    // Nodes: left copies 0..n-1, right copies n..2n-1, source 2n, sink 2n+1.
    MaxFlow net(2 * n + 2);
    const int source = 2 * n;
    const int sink = 2 * n + 1;
    Rat inf = 1;
    for (int v = 0; v < n; ++v) inf += c[static_cast<std::size_t>(v)];
    for (int v = 0; v < n; ++v) {
        net.add_edge(source, v, c[static_cast<std::size_t>(v)]);
        net.add_edge(n + v, sink, c[static_cast<std::size_t>(v)]);
    }
    for (auto [u, v] : edges) {
        net.add_edge(u, n + v, inf);
        net.add_edge(v, n + u, inf);
    }
    return net.run(source, sink) / 2;
}

}  // namespace

HalfIntegralVC solve_vc_lp(const Graph& g, const CostVector& c) {
    require_valid_costs(g, c);
    const LpSolution s = solve(vc_lp_problem(g, c));
    if (s.status != LpStatus::Optimal) {
        throw InvariantError("vertex cover LP must be feasible and bounded, got status " +
                             std::string(to_string(s.status)));
    }
    return wrap_half_integral(g, s.primal, s.objective);
}

HalfIntegralVC solve_vc_lp_bipartite_double(const Graph& g, const CostVector& c) {
    require_valid_costs(g, c);
    const int n = g.num_vertices();

    MaxFlow net(2 * n + 2);
    const int source = 2 * n;
    const int sink = 2 * n + 1;
    Rat inf = 1;
    for (int v = 0; v < n; ++v) inf += c[static_cast<std::size_t>(v)];
    for (int v = 0; v < n; ++v) {
        net.add_edge(source, v, c[static_cast<std::size_t>(v)]);
        net.add_edge(n + v, sink, c[static_cast<std::size_t>(v)]);
    }
    for (auto [u, v] : g.edges()) {
        net.add_edge(u, n + v, inf);
        net.add_edge(v, n + u, inf);
    }

    const Rat flow = net.run(source, sink);
    const std::vector<bool> reach = net.reachable(source);

    // Cut edges: source->left for unreachable left copies, right->sink for
    // reachable right copies. Those copies form a minimum-weight cover of the
    // doubled graph; averaging the copies yields the LP optimum.
    std::vector<Rat> x(static_cast<std::size_t>(n));
    Rat cover_weight = 0;
    for (int v = 0; v < n; ++v) {
        const int in_left = reach[static_cast<std::size_t>(v)] ? 0 : 1;
        const int in_right = reach[static_cast<std::size_t>(n + v)] ? 1 : 0;
        x[static_cast<std::size_t>(v)] = Rat(in_left + in_right, 2);
        x[static_cast<std::size_t>(v)].canonicalize();
        cover_weight += Rat(in_left + in_right) * c[static_cast<std::size_t>(v)];
    }
    if (cover_weight != flow) {
        throw InvariantError("doubling path: cut cover weight " + rat_str(cover_weight) +
                             " differs from max-flow value " + rat_str(flow));
    }
    return wrap_half_integral(g, std::move(x), flow / 2);
}

namespace {

class CoverSearch {
public:
    CoverSearch(const Graph& g, const CostVector& c) : g_(g), c_(c) {
        state_.assign(static_cast<std::size_t>(g.num_vertices()), 0);
    }

    MinVertexCover run() {
        dfs();
        // Every graph has the trivial cover V, so the search always lands.
        return std::move(*best_);
    }

private:
    enum : int8_t { kFree = 0, kIncluded = 1, kExcluded = -1 };

    const Graph& g_;
    const CostVector& c_;
    std::vector<int8_t> state_;
    Rat current_cost_ = 0;
    std::optional<MinVertexCover> best_;

    void set_state(int v, int8_t value, std::vector<int>& trail) {
        trail.push_back(v);
        state_[static_cast<std::size_t>(v)] = value;
        if (value == kIncluded) current_cost_ += c_[static_cast<std::size_t>(v)];
    }

    void undo(const std::vector<int>& trail) {
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
            if (state_[static_cast<std::size_t>(*it)] == kIncluded) {
                current_cost_ -= c_[static_cast<std::size_t>(*it)];
            }
            state_[static_cast<std::size_t>(*it)] = kFree;
        }
    }

    // An excluded endpoint forces the other endpoint of every edge it touches.
    bool propagate(std::vector<int>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto [u, v] : g_.edges()) {
                const int8_t su = state_[static_cast<std::size_t>(u)];
                const int8_t sv = state_[static_cast<std::size_t>(v)];
                if (su == kIncluded || sv == kIncluded) continue;
                if (su == kExcluded && sv == kExcluded) return false;
                if (su == kExcluded) {
                    set_state(v, kIncluded, trail);
                    changed = true;
                } else if (sv == kExcluded) {
                    set_state(u, kIncluded, trail);
                    changed = true;
                }
            }
        }
        return true;
    }

    void dfs() {
        std::vector<int> trail;
        if (!propagate(trail)) {
            undo(trail);
            return;
        }

        int branch_u = -1;
        std::vector<std::pair<int, int>> uncovered;
        for (auto [u, v] : g_.edges()) {
            if (state_[static_cast<std::size_t>(u)] != kIncluded &&
                state_[static_cast<std::size_t>(v)] != kIncluded) {
                if (branch_u < 0) branch_u = u;
                uncovered.emplace_back(u, v);
            }
        }

        if (branch_u < 0) {
            if (!best_ || current_cost_ < best_->cost) {
                std::vector<int> members;
                for (int v = 0; v < g_.num_vertices(); ++v) {
                    if (state_[static_cast<std::size_t>(v)] == kIncluded) members.push_back(v);
                }
                best_ = MinVertexCover{VertexSet(std::move(members)), current_cost_};
            }
            undo(trail);
            return;
        }

        if (best_) {
            if (current_cost_ >= best_->cost) {
                undo(trail);
                return;
            }
            const Rat bound = current_cost_ + vc_lp_value_flow(g_.num_vertices(), uncovered, c_);
            if (bound >= best_->cost) {
                undo(trail);
                return;
            }
        }

        {
            std::vector<int> sub;
            set_state(branch_u, kIncluded, sub);
            dfs();
            undo(sub);
        }
        {
            std::vector<int> sub;
            set_state(branch_u, kExcluded, sub);
            dfs();
            undo(sub);
        }
        undo(trail);
    }
};

}  // namespace

MinVertexCover min_vc_exact(const Graph& g, const CostVector& c, int size_limit) {
    require_valid_costs(g, c);
    if (g.num_vertices() > size_limit) {
        throw DomainError("graph has " + std::to_string(g.num_vertices()) +
                          " vertices, above the exact-solver limit " + std::to_string(size_limit) +
                          "; raise it with --limit-exact");
    }
    return CoverSearch(g, c).run();
}

}  // namespace vcgap
