#pragma once

#include "atfree/betweenness.hpp"

#include <cstdint>
#include <optional>

namespace atfree {

struct LinearOrder {
    std::vector<int> perm;  // perm[i] = vertex at position i
    std::vector<int> pos;   // pos[v]  = position of v

    explicit LinearOrder(std::vector<int> p);
};

// W(x,y) = {z : x in I(y,z)} — the pairs that pin x down.  x is extreme in a
// remaining set R iff W(x,y) misses R for every y in R.
class WitnessTable {
public:
    explicit WitnessTable(const IntervalTable& tbl);

    int n() const { return n_; }
    const VertexSet& row(int x, int y) const { return w_[x * n_ + y]; }

private:
    int n_;
    std::vector<VertexSet> w_;
};

// Least (x,y,z) with z between x and y but placed before both; nullopt when
// the order is AT-free.
std::optional<std::array<int, 3>> order_violation(const IntervalTable& tbl,
                                                  const LinearOrder& o);

inline bool is_at_free_order(const IntervalTable& tbl, const LinearOrder& o) {
    return !order_violation(tbl, o).has_value();
}

// x may follow the placed set: no two still-unplaced vertices trap it.
bool appendable(const WitnessTable& w, const VertexSet& placed, int x);

// all appendable members of rem, with placed = complement of rem
VertexSet extremes(const WitnessTable& w, const VertexSet& rem);

// Lexicographic backtracking over appendable vertices; refuses n > 10.
std::vector<std::vector<int>> enumerate_at_free_orders(const Graph& g,
                                                       const IntervalTable& tbl);

// The prefix language of extreme-removal words, checked against the four
// antimatroid language axioms.  Refuses n > 8.
struct AntimatroidReport {
    int n = 0;
    size_t words = 0;  // prefix language size, empty word included
    // axiom 1: every vertex occurs in some word; least absentee otherwise
    std::optional<int> missing_symbol;
    // axioms 2 and 3 hold by construction of the walk; they are asserted
    // during it and reported here for completeness
    bool repetition_free = true;
    bool prefix_closed = true;
    // axiom 4 (exchange): word t and support A of another word with
    // A ⊈ supp(t) but no extension of t by any symbol of A ∖ supp(t)
    std::optional<std::pair<std::vector<int>, std::uint32_t>> exchange;

    bool pass() const {
        return !missing_symbol && repetition_free && prefix_closed && !exchange;
    }
};

AntimatroidReport verify_antimatroid_language(const Graph& g,
                                              const IntervalTable& tbl);

// numbad[x][y] = #{z : x in I(y,z), z placed after x}; a swap of adjacent
// positions j,j+1 keeps the order AT-free exactly when
// numbad[perm[j+1]][perm[j]] is zero.
struct NumbadState {
    LinearOrder order;
    int n = 0;
    std::vector<int> counters;  // n*n, row-major [x][y]

    int at(int x, int y) const { return counters[x * n + y]; }
};

NumbadState compute_numbad(const WitnessTable& w, LinearOrder o);

bool swap_valid(const NumbadState& st, int j);

// Transpose positions j,j+1 and patch the two affected counter rows in O(n);
// requires swap_valid(st, j).
void apply_swap(NumbadState& st, const WitnessTable& w, int j);

// h(x) = numbad[x][omega]
int h_value(const NumbadState& st, int omega, int x);

}  // namespace atfree
