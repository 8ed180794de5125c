#pragma once

#include <boost/dynamic_bitset.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace atfree {

using VertexSet = boost::dynamic_bitset<>;

// Everything downstream builds n^2 or n^3 bit tables, so keep n bounded.
inline constexpr int kMaxVertices = 2048;

inline VertexSet empty_set(int n) { return VertexSet(n); }

inline VertexSet full_set(int n) {
    VertexSet s(n);
    s.set();
    return s;
}

inline VertexSet singleton(int n, int v) {
    VertexSet s(n);
    s.set(v);
    return s;
}

template <class F>
void for_each_in(const VertexSet& s, F f) {
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
        f(static_cast<int>(v));
}

inline int first_in(const VertexSet& s) {
    auto v = s.find_first();
    return v == VertexSet::npos ? -1 : static_cast<int>(v);
}

// Simple undirected graph on dense ids 0..n-1; immutable once built.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    long edge_count() const { return edge_count_; }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    // N[v] = N(v) + v
    const VertexSet& closed_neighborhood(int v) const { return nclosed_[v]; }

private:
    int n_;
    long edge_count_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<VertexSet> nclosed_;
};

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line(line) {}
    int line;
};

// Parsed graph plus the input's vertex tokens (decimal ids when the input
// was numeric); names[id] renders results in the caller's vocabulary.
struct NamedGraph {
    Graph graph;
    std::vector<std::string> names;
};

// Edge-list format: header "n m", then m lines "u v"; '#' starts a comment
// line, blank lines are skipped.  Tokens may be arbitrary names; they map to
// ids in first-appearance order unless every token is an integer in [0,n).
NamedGraph parse_graph(std::string_view text);

// Canonical renderer: header plus edges sorted by (min,max) id, one per line.
std::string render_graph(const Graph& g);

// Connected components of the subgraph induced on V minus `removed`,
// ordered by least member id.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);

// For each x, the components of G - N[x]; label(x,v) is -1 for v in N[x],
// otherwise a component index (equal labels <=> same component).
class ComponentTable {
public:
    explicit ComponentTable(const Graph& g);

    int label(int x, int v) const { return labels_[x][v]; }
    bool same_component(int x, int u, int v) const {
        int a = labels_[x][u];
        return a >= 0 && a == labels_[x][v];
    }
    int component_count(int x) const { return static_cast<int>(sizes_[x].size()); }
    int component_size(int x, int c) const { return sizes_[x][c]; }
    // size of the biggest component of G - N[x]; 0 if none remain
    int largest_component_size(int x) const;

private:
    std::vector<std::vector<int>> labels_;
    std::vector<std::vector<int>> sizes_;
};

inline ComponentTable component_table(const Graph& g) { return ComponentTable(g); }

// Subgraph induced on `verts`, renumbered 0..|verts|-1 in ascending id
// order; back_map (if given) receives local -> original ids.
Graph induced_subgraph(const Graph& g, const VertexSet& verts,
                       std::vector<int>* back_map = nullptr);

// X is a module: every outside vertex sees all of X or none of it.
bool is_module(const Graph& g, const VertexSet& X);

bool is_clique(const Graph& g, const VertexSet& X);

// ascending-id members, e.g. "{0,2,5}" with names applied when given
std::string format_set(const VertexSet& s,
                       const std::vector<std::string>* names = nullptr);

}  // namespace atfree
