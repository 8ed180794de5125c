#pragma once

#include "atfree/orders.hpp"

#include <functional>

namespace atfree {

// omega maximizes the largest component of G - N[omega]; C is that
// component, S its neighborhood, Omega the rest (a module containing omega).
struct Decomposition {
    int omega = -1;
    VertexSet C, S, Omega;
};

// Throws on a disconnected graph; ties broken toward the least id.
int choose_omega(const Graph& g, const ComponentTable& tbl);

// Throws on cliques and disconnected graphs; validates the structural
// invariants (partition, module, Omega-S completeness, convex parts).
Decomposition decompose(const Graph& g, const ComponentTable& tbl);

// Lexicographically least AT-free order: repeatedly append the least
// still-appendable vertex (always possible — feasible prefixes extend).
// Throws when an AT exists.
std::vector<int> canonical_order(const Graph& g);

// The split characterization of a full order: both restrictions are AT-free
// orders of their induced subgraphs, and for every o in Omega and x,y in
// C ∪ S with x in I(o,y) and x placed before y, o must precede x.  Agrees
// with direct validation.
bool check_order_split(const Graph& g, const Decomposition& d, const LinearOrder& o);

// One element of the generation stream: the first step carries the starting
// order, every later step one or two adjacent-swap positions (applied left
// to right) that lead to the next order.
struct GrayStep {
    std::vector<int> init;
    int swaps[2] = {-1, -1};
    int swap_count = 0;

    bool is_init() const { return swap_count == 0; }
};

// Stream every AT-free order exactly once, starting from canonical_order(g),
// each successive order one or two adjacent transpositions away.  Work per
// order is amortized constant in the output count (polynomial in n only).
// Throws for n = 0, n > 64, or a graph with an asteroidal triple.
void generate_gray(const Graph& g, const std::function<void(const GrayStep&)>& sink);

struct BenchStats {
    long long orders = 0;
    long long preprocess_ns = 0;  // tables + canonical order, excluded from the rate
    long long total_ns = 0;       // streaming portion only
    double ns_per_order = 0.0;
    long peak_mem_kb = 0;
    bool cyclic = false;  // last order within two adjacent swaps of the first
};

// Drive the stream to exhaustion (delta consumption only) and time it;
// runs `warmup` unmeasured passes first.
BenchStats bench_cat(const Graph& g, int warmup = 1);

}  // namespace atfree
