#include "vcgap/frac_chromatic.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "vcgap/errors.hpp"
#include "vcgap/lp.hpp"

namespace vcgap {

namespace {

// --- Max-weight independent set search --------------------------------------

class Pricer {
public:
    Pricer(const Graph& g, const std::vector<Rat>& z) : g_(g), z_(z) {
        const int n = g.num_vertices();
        order_.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) order_[static_cast<std::size_t>(v)] = v;
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            const int cmp = cmp_rats(z[static_cast<std::size_t>(a)], z[static_cast<std::size_t>(b)]);
            if (cmp != 0) return cmp > 0;  // larger weight first
            return a < b;
        });
        suffix_positive_.assign(static_cast<std::size_t>(n) + 1, Rat(0));
        for (int k = n - 1; k >= 0; --k) {
            const Rat& w = z[static_cast<std::size_t>(order_[static_cast<std::size_t>(k)])];
            suffix_positive_[static_cast<std::size_t>(k)] =
                suffix_positive_[static_cast<std::size_t>(k) + 1] + (w > 0 ? w : Rat(0));
        }
        conflicts_.assign(static_cast<std::size_t>(n), 0);
    }

    Rat max_weight() {
        best_ = 0;
        search(0, Rat(0));
        return best_;
    }

    // True iff some independent set containing `chosen` plus vertices > from
    // (none of them conflicting) reaches total weight >= target.
    bool reachable(const Rat& base, int from, const Rat& target) {
        if (base >= target) return true;
        std::vector<int> cand;
        for (int v : order_) {
            if (v > from && conflicts_[static_cast<std::size_t>(v)] == 0) cand.push_back(v);
        }
        std::vector<Rat> suffix(cand.size() + 1, Rat(0));
        for (std::size_t k = cand.size(); k-- > 0;) {
            const Rat& w = z_[static_cast<std::size_t>(cand[k])];
            suffix[k] = suffix[k + 1] + (w > 0 ? w : Rat(0));
        }
        return decide(cand, suffix, 0, base, target);
    }

    void mark(int v) {
        for (int w : g_.neighbors(v)) ++conflicts_[static_cast<std::size_t>(w)];
    }
    void unmark(int v) {
        for (int w : g_.neighbors(v)) --conflicts_[static_cast<std::size_t>(w)];
    }
    bool conflicted(int v) const { return conflicts_[static_cast<std::size_t>(v)] != 0; }

private:
    static int cmp_rats(const Rat& a, const Rat& b) { return cmp(a, b); }

    void search(std::size_t k, Rat weight) {
        if (weight > best_) best_ = weight;
        if (k == order_.size()) return;
        if (weight + suffix_positive_[k] <= best_) return;  // cannot exceed the incumbent
        const int v = order_[k];
        const Rat& w = z_[static_cast<std::size_t>(v)];
        if (w > 0 && conflicts_[static_cast<std::size_t>(v)] == 0) {
            mark(v);
            search(k + 1, weight + w);
            unmark(v);
        }
        search(k + 1, weight);
    }

    bool decide(const std::vector<int>& cand, const std::vector<Rat>& suffix, std::size_t k,
                Rat weight, const Rat& target) {
        if (weight >= target) return true;
        if (weight + suffix[k] < target) return false;
        if (k == cand.size()) return false;
        const int v = cand[k];
        const Rat& w = z_[static_cast<std::size_t>(v)];
        if (w > 0 && conflicts_[static_cast<std::size_t>(v)] == 0) {
            mark(v);
            const bool hit = decide(cand, suffix, k + 1, weight + w, target);
            unmark(v);
            if (hit) return true;
        }
        return decide(cand, suffix, k + 1, weight, target);
    }

    const Graph& g_;
    const std::vector<Rat>& z_;
    std::vector<int> order_;          // by weight descending, index ascending
    std::vector<Rat> suffix_positive_;
    std::vector<int> conflicts_;      // chosen-neighbor counters
    Rat best_;
};

}  // namespace

PricedColumn price_column(const Graph& g, const std::vector<Rat>& z) {
    const int n = g.num_vertices();
    if (static_cast<int>(z.size()) != n) {
        throw InvariantError("price_column: weight vector length mismatch");
    }
    for (std::size_t v = 0; v < z.size(); ++v) {
        if (z[v] < 0) {
            throw InvariantError("price_column: negative weight at vertex " + std::to_string(v));
        }
    }

    Pricer pricer(g, z);
    const Rat target = pricer.max_weight();
    if (target == 0) return {VertexSet{}, Rat(0)};

    // Lexicographically smallest maximizer: decide vertex membership in
    // ascending order; stop as soon as the chosen prefix already attains the
    // maximum (a shorter sequence precedes all its extensions).
    std::vector<int> chosen;
    Rat weight = 0;
    for (int v = 0; v < n && weight < target; ++v) {
        if (pricer.conflicted(v)) continue;
        pricer.mark(v);  // tentatively: extensions must avoid v's neighbors
        if (pricer.reachable(weight + z[static_cast<std::size_t>(v)], v, target)) {
            chosen.push_back(v);
            weight += z[static_cast<std::size_t>(v)];
        } else {
            pricer.unmark(v);
        }
    }
    if (weight != target) {
        throw InvariantError("price_column: lex reconstruction missed the optimum");
    }
    return {VertexSet(std::move(chosen)), target};
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    const int n = g.num_vertices();

    // Bron-Kerbosch with pivoting on the complement graph: cliques of the
    // complement are exactly the independent sets of g.
    std::vector<std::vector<bool>> compat(static_cast<std::size_t>(n),
                                          std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !g.adjacent(u, v)) compat[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;

    std::vector<std::vector<int>> found;
    std::vector<int> current;

    auto expand = [&](auto&& self, std::vector<int> candidates, std::vector<int> excluded) -> void {
        if (candidates.empty() && excluded.empty()) {
            std::vector<int> s = current;
            std::sort(s.begin(), s.end());
            found.push_back(std::move(s));
            return;
        }
        int pivot = -1, pivot_score = -1;
        for (const auto* pool : {&candidates, &excluded}) {
            for (int u : *pool) {
                int score = 0;
                for (int v : candidates)
                    if (compat[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) ++score;
                if (score > pivot_score) {
                    pivot_score = score;
                    pivot = u;
                }
            }
        }
        std::vector<int> branch;
        for (int v : candidates)
            if (!compat[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(v)]) branch.push_back(v);
        for (int v : branch) {
            std::vector<int> next_cand, next_excl;
            for (int w : candidates)
                if (compat[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) next_cand.push_back(w);
            for (int w : excluded)
                if (compat[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) next_excl.push_back(w);
            current.push_back(v);
            self(self, std::move(next_cand), std::move(next_excl));
            current.pop_back();
            candidates.erase(std::find(candidates.begin(), candidates.end(), v));
            excluded.push_back(v);
        }
    };

    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    expand(expand, std::move(all), {});

    std::sort(found.begin(), found.end());
    std::vector<VertexSet> out;
    out.reserve(found.size());
    for (auto& s : found) out.push_back(VertexSet(std::move(s)));
    return out;
}

std::vector<VertexSet> greedy_coloring_classes(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    int num_colors = 0;
    for (int v = 0; v < n; ++v) {
        std::vector<bool> used(static_cast<std::size_t>(num_colors) + 1, false);
        for (int w : g.neighbors(v)) {
            if (w < v && color[static_cast<std::size_t>(w)] < static_cast<int>(used.size())) {
                used[static_cast<std::size_t>(color[static_cast<std::size_t>(w)])] = true;
            }
        }
        int c = 0;
        while (used[static_cast<std::size_t>(c)]) ++c;
        color[static_cast<std::size_t>(v)] = c;
        num_colors = std::max(num_colors, c + 1);
    }
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(num_colors));
    for (int v = 0; v < n; ++v) classes[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);
    std::vector<VertexSet> out;
    out.reserve(classes.size());
    for (auto& members : classes) out.push_back(VertexSet(std::move(members)));
    return out;
}

VertexSet maximalize_independent(const Graph& g, const VertexSet& s) {
    std::vector<bool> in_set(static_cast<std::size_t>(g.num_vertices()), false);
    for (int v : s) in_set[static_cast<std::size_t>(v)] = true;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (in_set[static_cast<std::size_t>(v)]) continue;
        bool clash = false;
        for (int w : g.neighbors(v)) {
            if (in_set[static_cast<std::size_t>(w)]) {
                clash = true;
                break;
            }
        }
        if (!clash) in_set[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> members;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (in_set[static_cast<std::size_t>(v)]) members.push_back(v);
    }
    return VertexSet(std::move(members));
}

namespace {

LpProblem coloring_master(int n, const std::vector<VertexSet>& columns) {
    LpProblem master;
    master.num_vars = static_cast<int>(columns.size());
    master.objective.assign(columns.size(), Rat(1));
    master.rows.assign(static_cast<std::size_t>(n),
                       std::vector<Rat>(columns.size(), Rat(0)));
    master.rhs.assign(static_cast<std::size_t>(n), Rat(1));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (int v : columns[j]) master.rows[static_cast<std::size_t>(v)][j] = 1;
    }
    return master;
}

ChiFResult finish(const std::vector<VertexSet>& columns, const LpSolution& sol) {
    ChiFResult result;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (sol.primal[j] > 0) result.coloring.classes.push_back({columns[j], sol.primal[j]});
    }
    result.coloring.value = sol.objective;
    result.duals.z = sol.dual;
    Rat dual_total = 0;
    for (const Rat& zv : sol.dual) dual_total += zv;
    result.duals.value = dual_total;
    result.value = sol.objective;
    if (dual_total != sol.objective) {
        throw InvariantError("chi_f: dual total " + rat_str(dual_total) +
                             " differs from primal value " + rat_str(sol.objective));
    }
    return result;
}

}  // namespace

ChiFResult solve_chi_f(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) return {};

    std::vector<VertexSet> columns;
    std::set<std::vector<int>> seen;
    auto add_column = [&](VertexSet s) {
        if (seen.insert(s.members()).second) {
            columns.push_back(std::move(s));
            return true;
        }
        return false;
    };
    for (int v = 0; v < n; ++v) add_column(VertexSet({v}));
    for (VertexSet& cls : greedy_coloring_classes(g)) add_column(std::move(cls));

    for (;;) {
        const LpSolution sol = solve(coloring_master(n, columns));
        if (sol.status != LpStatus::Optimal) {
            throw InvariantError("chi_f: restricted master not optimal");
        }
        const PricedColumn priced = price_column(g, sol.dual);
        if (priced.weight <= 1) {
            // Pricing certifies dual feasibility over every independent set,
            // so the restricted optimum is the true optimum.
            return finish(columns, sol);
        }
        if (!add_column(maximalize_independent(g, priced.vertices))) {
            throw InvariantError("chi_f: column generation produced a duplicate column");
        }
    }
}

ChiFResult chi_f_bruteforce(const Graph& g, int size_limit) {
    const int n = g.num_vertices();
    if (n > size_limit) {
        throw DomainError("graph has " + std::to_string(n) +
                          " vertices, above the enumeration limit " + std::to_string(size_limit) +
                          "; raise it with --limit-oracle");
    }
    if (n == 0) return {};

    const std::vector<VertexSet> columns = maximal_independent_sets(g);
    const LpSolution sol = solve(coloring_master(n, columns));
    if (sol.status != LpStatus::Optimal) {
        throw InvariantError("chi_f oracle: full master not optimal");
    }
    ChiFResult result = finish(columns, sol);

    // Full-enumeration dual check: every maximal independent set (hence every
    // independent set, weights being nonnegative) carries weight at most 1.
    for (const VertexSet& u : columns) {
        Rat total = 0;
        for (int v : u) total += sol.dual[static_cast<std::size_t>(v)];
        if (total > 1) throw InvariantError("chi_f oracle: dual infeasible on an enumerated set");
    }
    return result;
}

}  // namespace vcgap
