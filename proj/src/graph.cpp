#include "vcgap/graph.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <sstream>

#include "vcgap/errors.hpp"

namespace vcgap {

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::full(int n) {
    std::vector<int> all(static_cast<std::size_t>(std::max(n, 0)));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    VertexSet s;
    s.members_ = std::move(all);
    return s;
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw DomainError("vertex count must be nonnegative");
    for (auto& [u, v] : edges) {
        if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw DomainError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                              std::to_string(v) + ") with n=" + std::to_string(n));
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : g.edges_) {
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

// --- DIMACS ----------------------------------------------------------------

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

int parse_int_token(const std::string& tok, int line_no, const char* what) {
    try {
        std::size_t pos = 0;
        int value = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed " + what + " '" + tok +
                         "'");
    }
}

}  // namespace

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        if (tokens[0] == "c") continue;

        if (tokens[0] == "p") {
            if (have_header) {
                throw ParseError("line " + std::to_string(line_no) + ": duplicate problem line");
            }
            if (tokens.size() != 4 || tokens[1] != "edge") {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'p edge <n> <m>'");
            }
            n = parse_int_token(tokens[2], line_no, "vertex count");
            parse_int_token(tokens[3], line_no, "edge count");
            if (n < 0) {
                throw ParseError("line " + std::to_string(line_no) + ": negative vertex count");
            }
            have_header = true;
            continue;
        }

        if (tokens[0] == "e") {
            if (!have_header) {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": edge before 'p edge' line");
            }
            if (tokens.size() != 3) {
                throw ParseError("line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
            }
            const int u = parse_int_token(tokens[1], line_no, "vertex index");
            const int v = parse_int_token(tokens[2], line_no, "vertex index");
            if (u < 1 || u > n || v < 1 || v > n) {
                throw ParseError("line " + std::to_string(line_no) + ": vertex index out of range 1.." +
                                 std::to_string(n));
            }
            if (u == v) {
                throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                                 std::to_string(u));
            }
            edges.emplace_back(u - 1, v - 1);
            continue;
        }

        throw ParseError("line " + std::to_string(line_no) + ": unrecognized line '" + line + "'");
    }

    if (!have_header) throw ParseError("missing 'p edge' line");
    return Graph::from_edges(n, std::move(edges));
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

void write_adjacency(std::ostream& out, const Graph& g) {
    for (int v = 0; v < g.num_vertices(); ++v) {
        out << v << ":";
        for (int w : g.neighbors(v)) out << " " << w;
        out << "\n";
    }
}

// --- Generators -------------------------------------------------------------

Graph complete_graph(int n) {
    if (n < 0) throw ParseError("complete: vertex count must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw ParseError("cycle: need at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 0 || b < 0) throw ParseError("complete_bipartite: side sizes must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::from_edges(a + b, std::move(edges));
}

Graph kneser_graph(int n, int k) {
    if (k < 1 || n < 2 * k) throw ParseError("kneser: requires k >= 1 and n >= 2k");

    std::vector<std::vector<int>> subsets;
    std::vector<int> current;
    // k-subsets of {0..n-1} in lexicographic order
    auto gen = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.size()) == k) {
            subsets.push_back(current);
            return;
        }
        for (int v = next; v < n; ++v) {
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    gen(gen, 0);

    auto disjoint = [](const std::vector<int>& x, const std::vector<int>& y) {
        std::size_t i = 0, j = 0;
        while (i < x.size() && j < y.size()) {
            if (x[i] == y[j]) return false;
            if (x[i] < y[j]) ++i;
            else ++j;
        }
        return true;
    };

    const int num = static_cast<int>(subsets.size());
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < num; ++u)
        for (int v = u + 1; v < num; ++v)
            if (disjoint(subsets[static_cast<std::size_t>(u)], subsets[static_cast<std::size_t>(v)]))
                edges.emplace_back(u, v);
    return Graph::from_edges(num, std::move(edges));
}

Graph mycielskian(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, n + v);
        edges.emplace_back(v, n + u);
    }
    const int apex = 2 * n;
    for (int v = 0; v < n; ++v) edges.emplace_back(n + v, apex);
    return Graph::from_edges(2 * n + 1, std::move(edges));
}

namespace {

int family_param(const std::vector<std::string>& tokens, std::size_t i) {
    if (i >= tokens.size()) throw ParseError("family spec: missing parameter");
    try {
        std::size_t pos = 0;
        int value = std::stoi(tokens[i], &pos);
        if (pos != tokens[i].size()) throw std::invalid_argument(tokens[i]);
        return value;
    } catch (const std::exception&) {
        throw ParseError("family spec: malformed integer parameter '" + tokens[i] + "'");
    }
}

void expect_params(const std::vector<std::string>& tokens, std::size_t count) {
    if (tokens.size() != count + 1) {
        throw ParseError("family spec: '" + tokens[0] + "' takes " + std::to_string(count) +
                         " parameter(s)");
    }
}

}  // namespace

Graph parse_family_spec(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw ParseError("family spec: empty");
    const std::string& name = tokens[0];
    if (name == "complete") {
        expect_params(tokens, 1);
        return complete_graph(family_param(tokens, 1));
    }
    if (name == "cycle") {
        expect_params(tokens, 1);
        return cycle_graph(family_param(tokens, 1));
    }
    if (name == "complete_bipartite") {
        expect_params(tokens, 2);
        return complete_bipartite_graph(family_param(tokens, 1), family_param(tokens, 2));
    }
    if (name == "kneser") {
        expect_params(tokens, 2);
        return kneser_graph(family_param(tokens, 1), family_param(tokens, 2));
    }
    if (name == "mycielskian_of") {
        if (tokens.size() < 2) throw ParseError("family spec: mycielskian_of needs a base family");
        return mycielskian(parse_family_spec({tokens.begin() + 1, tokens.end()}));
    }
    throw ParseError("family spec: unknown family '" + name + "'");
}

// --- Predicates ---------------------------------------------------------------

bool is_independent(const Graph& g, const VertexSet& s) {
    for (auto [u, v] : g.edges())
        if (s.contains(u) && s.contains(v)) return false;
    return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    for (auto [u, v] : g.edges())
        if (!s.contains(u) && !s.contains(v)) return false;
    return true;
}

bool is_bipartite(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (color[static_cast<std::size_t>(start)] != -1) continue;
        color[static_cast<std::size_t>(start)] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
                    queue.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] ==
                           color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> to_original = s.members();
    std::vector<int> to_new(static_cast<std::size_t>(g.num_vertices()), -1);
    for (std::size_t i = 0; i < to_original.size(); ++i) {
        const int old = to_original[i];
        if (old < 0 || old >= g.num_vertices()) {
            throw DomainError("induced_subgraph: vertex " + std::to_string(old) + " out of range");
        }
        to_new[static_cast<std::size_t>(old)] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        const int nu = to_new[static_cast<std::size_t>(u)];
        const int nv = to_new[static_cast<std::size_t>(v)];
        if (nu != -1 && nv != -1) edges.emplace_back(nu, nv);
    }
    return {Graph::from_edges(s.size(), std::move(edges)), std::move(to_original)};
}

}  // namespace vcgap
