#include "atfree/betweenness.hpp"

namespace atfree {

IntervalTable::IntervalTable(const Graph& g, const ComponentTable& tbl) : n_(g.n()) {
    rows_.assign(static_cast<size_t>(n_) * n_, VertexSet(n_));
    for (int x = 0; x < n_; ++x) {
        for (int y = x + 1; y < n_; ++y) {
            if (g.adjacent(x, y)) continue;
            VertexSet& row = rows_[x * n_ + y];
            for (int z = 0; z < n_; ++z)
                if (tbl.same_component(y, z, x) && tbl.same_component(x, z, y))
                    row.set(z);
            rows_[y * n_ + x] = row;
        }
    }
}

VertexSet interval(const Graph& g, const ComponentTable& tbl, int x, int y) {
    if (x == y) throw std::invalid_argument("interval endpoints must differ");
    VertexSet out(g.n());
    if (g.adjacent(x, y)) return out;
    for (int z = 0; z < g.n(); ++z)
        if (tbl.same_component(y, z, x) && tbl.same_component(x, z, y))
            out.set(z);
    return out;
}

std::optional<std::array<int, 3>> find_asteroidal_triple(const Graph& g,
                                                         const ComponentTable& tbl) {
    int n = g.n();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (g.adjacent(x, y)) continue;
            for (int z = y + 1; z < n; ++z) {
                if (g.adjacent(x, z) || g.adjacent(y, z)) continue;
                if (tbl.same_component(z, x, y) && tbl.same_component(x, y, z) &&
                    tbl.same_component(y, x, z))
                    return std::array<int, 3>{x, y, z};
            }
        }
    return std::nullopt;
}

bool is_at_free(const Graph& g) {
    return !find_asteroidal_triple(g, ComponentTable(g)).has_value();
}

std::optional<std::array<int, 3>> check_betweenness_axiom(const IntervalTable& tbl) {
    int n = tbl.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            for (int z = 0; z < n; ++z)
                if (tbl.member(x, y, z) && tbl.member(z, y, x))
                    return std::array<int, 3>{x, y, z};
        }
    return std::nullopt;
}

std::optional<std::array<int, 4>> check_betweenness_composition(const IntervalTable& tbl) {
    int n = tbl.n();
    // empty rows make the degenerate index combinations fail the antecedent,
    // so the sweep can stay unguarded; x == y is deliberately included
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            for (int x = 0; x < n; ++x) {
                if (!tbl.member(v, x, u)) continue;
                for (int y = 0; y < n; ++y)
                    if (tbl.member(u, y, v) && !tbl.member(x, y, u))
                        return std::array<int, 4>{u, v, x, y};
            }
        }
    return std::nullopt;
}

std::optional<std::array<int, 5>> check_betweenness_relay(const Graph& g,
                                                          const IntervalTable& tbl) {
    int n = tbl.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            for (int x = 0; x < n; ++x) {
                if (!tbl.member(x, b, a)) continue;
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z) {
                        if (!tbl.member(y, z, b)) continue;
                        bool in_ny = g.closed_neighborhood(y).test(a);
                        bool in_nz = g.closed_neighborhood(z).test(a);
                        if (in_ny && in_nz)
                            return std::array<int, 5>{a, b, x, y, z};
                        if (!in_ny && !in_nz && !tbl.member(x, y, a) &&
                            !tbl.member(x, z, a) && !tbl.member(y, z, a))
                            return std::array<int, 5>{a, b, x, y, z};
                    }
            }
        }
    return std::nullopt;
}

}  // namespace atfree
