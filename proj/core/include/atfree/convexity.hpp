#pragma once

#include "atfree/betweenness.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace atfree {

// Abstract set systems stay small (exhaustive sweeps are 2^|E|-bounded), so
// members are plain 32-bit masks.
inline constexpr int kMaxUniverse = 20;

struct SetSystem {
    int universe = 0;
    std::vector<std::uint32_t> family;  // ascending, deduplicated
};

// a SetSystem built from a graph's interval-closed vertex sets
using ConvexFamily = SetSystem;

// X is convex when it traps every interval between its members.
bool is_convex(const IntervalTable& tbl, const VertexSet& X);

// Least convex superset of U: add interval members to a fixpoint.
VertexSet closure(const IntervalTable& tbl, const VertexSet& U);

// All convex subsets as a SetSystem; refuses n > cap (cap itself <= 20).
ConvexFamily enumerate_convex_sets(const Graph& g, const IntervalTable& tbl,
                                   int cap = 16);

// contains the empty set and the universe, closed under intersection
bool is_alignment(const SetSystem& s);

// Hull in an abstract alignment: intersection of all members containing U.
// Throws when s is not an alignment.
std::uint32_t sigma_abstract(const SetSystem& s, std::uint32_t U);

// y is extreme in sigma(C + y): dropping y from that hull stays in the family.
// C must be a member and y outside it.
bool is_extreme(const SetSystem& s, std::uint32_t C, int y);

// Y = (y_1..y_k), k >= 2 distinct: each y_{i+1} lies in sigma(y_i + X),
// wrapping around at the end.
bool induces_cycle(const SetSystem& s, const std::vector<int>& Y, std::uint32_t X);

// Three equivalent convex-geometry characterizations, each swept
// independently; on every alignment the three verdicts must agree.
struct GeometryReport {
    bool alignment = false;
    // z in sigma(X+x) and x in sigma(X+z) for a member X and x,z outside it
    std::optional<std::array<std::uint32_t, 3>> anti_exchange;  // X, x, z
    // a proper member X that no outside element can extend to a member
    std::optional<std::uint32_t> augmentation;
    // a cycle whose elements escape sigma(X); any longer offending cycle
    // forces a 2-cycle, so sweeping lengths 2 and 3 decides the property
    std::optional<std::pair<std::uint32_t, std::vector<int>>> cycle;

    bool pass() const {
        return alignment && !anti_exchange && !augmentation && !cycle;
    }
};

GeometryReport verify_convex_geometry(const SetSystem& s);

// Least member pair whose union escapes the family; nullopt when closed
// under unions.
std::optional<std::pair<std::uint32_t, std::uint32_t>> is_union_closed(
    const SetSystem& s);

// Text format: header "|E| k", then k subset lines of space-separated ids,
// a lone "-" denoting the empty set.
SetSystem parse_set_system(std::string_view text);
std::string render_set_system(const SetSystem& s);

std::uint32_t mask_of(const VertexSet& s);
VertexSet set_of(std::uint32_t mask, int n);

}  // namespace atfree
