#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace vcgap {

/// Sorted, deduplicated set of vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> members);

    static VertexSet full(int n);

    bool contains(int v) const;
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    const std::vector<int>& members() const { return members_; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<int> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// edges are stored as sorted (u, v) pairs with u < v, and the per-vertex
/// adjacency lists are derived from them.
class Graph {
public:
    Graph() = default;

    // Validates: endpoints in range, no self-loops. Duplicate edges collapse.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// --- DIMACS edge format ---------------------------------------------------

// Accepts `c` comment lines, one `p edge <n> <m>` line, and `e <u> <v>` lines
// with 1-indexed endpoints. Duplicate edges collapse silently; self-loops and
// out-of-range endpoints are rejected with the offending line number.
Graph parse_dimacs(const std::string& text);

std::string write_dimacs(const Graph& g);

// Debug writer: one line per vertex, `v: n1 n2 ...`.
void write_adjacency(std::ostream& out, const Graph& g);

// --- Generators -----------------------------------------------------------

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite_graph(int a, int b);
// Vertices are the k-subsets of {0..n-1} in lexicographic order; edges join
// disjoint subsets. Requires n >= 2k, k >= 1.
Graph kneser_graph(int n, int k);
// Mycielski construction: on input with n vertices and m edges the result has
// 2n+1 vertices and 3m+n edges. Vertex layout: originals 0..n-1, shadow of v
// at n+v, apex at 2n.
Graph mycielskian(const Graph& g);

// Builds a graph from a token list such as {"cycle","5"} or
// {"mycielskian_of","cycle","5"} (the latter recurses on the tail).
// Families: complete N | cycle N | complete_bipartite A B | kneser N K |
// mycielskian_of <family...>. Throws ParseError on unknown names or bad
// parameters.
Graph parse_family_spec(const std::vector<std::string>& tokens);

// --- Predicates -----------------------------------------------------------

bool is_independent(const Graph& g, const VertexSet& s);
bool is_vertex_cover(const Graph& g, const VertexSet& s);
bool is_bipartite(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;  // new index -> original index
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace vcgap
