#pragma once

#include "atfree/graph.hpp"

#include <array>
#include <optional>

namespace atfree {

// z is between x and y when z reaches x avoiding N[y] and reaches y avoiding
// N[x] (components of G-N[y] resp. G-N[x]).  Adjacent pairs and the diagonal
// get empty intervals.
class IntervalTable {
public:
    IntervalTable(const Graph& g, const ComponentTable& tbl);

    int n() const { return n_; }
    bool member(int x, int y, int z) const { return rows_[x * n_ + y].test(z); }
    // I(x,y) as the set of z; symmetric in x,y
    const VertexSet& row(int x, int y) const { return rows_[x * n_ + y]; }

private:
    int n_;
    std::vector<VertexSet> rows_;
};

inline IntervalTable interval_table(const Graph& g) {
    return IntervalTable(g, ComponentTable(g));
}

// Single interval I(x,y); x == y is a usage error.
VertexSet interval(const Graph& g, const ComponentTable& tbl, int x, int y);

// Least (x,y,z) pairwise nonadjacent with each pair connected outside the
// closed neighborhood of the third; nullopt iff the graph is AT-free.
std::optional<std::array<int, 3>> find_asteroidal_triple(const Graph& g,
                                                         const ComponentTable& tbl);

bool is_at_free(const Graph& g);

// z in I(x,y) must rule out x in I(z,y); least violating (x,y,z) otherwise.
// Violations exist exactly on graphs with an asteroidal triple.
std::optional<std::array<int, 3>> check_betweenness_axiom(const IntervalTable& tbl);

// Betweenness composes: u in I(v,x) and v in I(u,y) force u in I(x,y)
// (x == y included).  Least violating (u,v,x,y) otherwise.
std::optional<std::array<int, 4>> check_betweenness_composition(const IntervalTable& tbl);

// Relay through a nested interval: a in I(x,b) and b in I(y,z) forbid
// a from N[y] ∩ N[z], and when a avoids both closed neighborhoods entirely it
// must land in I(x,y), I(x,z), or I(y,z).  Least violating (a,b,x,y,z).
std::optional<std::array<int, 5>> check_betweenness_relay(const Graph& g,
                                                          const IntervalTable& tbl);

}  // namespace atfree
