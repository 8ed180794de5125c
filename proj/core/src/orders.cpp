#include "atfree/orders.hpp"

#include <algorithm>
#include <unordered_set>

namespace atfree {

LinearOrder::LinearOrder(std::vector<int> p) : perm(std::move(p)) {
    int n = static_cast<int>(perm.size());
    pos.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = perm[i];
        if (v < 0 || v >= n || pos[v] != -1)
            throw std::invalid_argument("not a permutation of 0..n-1");
        pos[v] = i;
    }
}

WitnessTable::WitnessTable(const IntervalTable& tbl) : n_(tbl.n()) {
    w_.assign(static_cast<size_t>(n_) * n_, VertexSet(n_));
    for (int y = 0; y < n_; ++y)
        for (int z = 0; z < n_; ++z) {
            if (y == z) continue;
            const VertexSet& between = tbl.row(y, z);
            for_each_in(between, [&](int x) { w_[x * n_ + y].set(z); });
        }
}

std::optional<std::array<int, 3>> order_violation(const IntervalTable& tbl,
                                                  const LinearOrder& o) {
    int n = tbl.n();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const VertexSet& between = tbl.row(x, y);
            for (auto z = between.find_first(); z != VertexSet::npos;
                 z = between.find_next(z)) {
                int zi = static_cast<int>(z);
                if (o.pos[zi] < o.pos[x] && o.pos[zi] < o.pos[y])
                    return std::array<int, 3>{x, y, zi};
            }
        }
    return std::nullopt;
}

bool appendable(const WitnessTable& w, const VertexSet& placed, int x) {
    VertexSet rem = ~placed;
    rem.reset(x);
    for (auto y = rem.find_first(); y != VertexSet::npos; y = rem.find_next(y))
        if (w.row(x, static_cast<int>(y)).intersects(rem)) return false;
    return true;
}

VertexSet extremes(const WitnessTable& w, const VertexSet& rem) {
    VertexSet out(rem.size());
    for (auto x = rem.find_first(); x != VertexSet::npos; x = rem.find_next(x)) {
        VertexSet others = rem;
        others.reset(x);
        bool free = true;
        for (auto y = others.find_first(); free && y != VertexSet::npos;
             y = others.find_next(y))
            if (w.row(static_cast<int>(x), static_cast<int>(y)).intersects(others))
                free = false;
        if (free) out.set(x);
    }
    return out;
}

namespace {

void enumerate_rec(const WitnessTable& w, VertexSet& rem, std::vector<int>& word,
                   std::vector<std::vector<int>>& out) {
    if (rem.none()) {
        out.push_back(word);
        return;
    }
    VertexSet ext = extremes(w, rem);
    for (auto x = ext.find_first(); x != VertexSet::npos; x = ext.find_next(x)) {
        rem.reset(x);
        word.push_back(static_cast<int>(x));
        enumerate_rec(w, rem, word, out);
        word.pop_back();
        rem.set(x);
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_at_free_orders(const Graph& g,
                                                       const IntervalTable& tbl) {
    if (g.n() > 10)
        throw std::invalid_argument("enumeration capped at n <= 10");
    WitnessTable w(tbl);
    VertexSet rem = full_set(g.n());
    std::vector<int> word;
    std::vector<std::vector<int>> out;
    enumerate_rec(w, rem, word, out);
    return out;
}

AntimatroidReport verify_antimatroid_language(const Graph& g,
                                              const IntervalTable& tbl) {
    int n = g.n();
    if (n > 8) throw std::invalid_argument("language verification capped at n <= 8");
    WitnessTable w(tbl);
    AntimatroidReport rep;
    rep.n = n;

    // walk the prefix language once, keeping per word its support and the
    // set of symbols that may extend it
    struct Node {
        std::vector<int> word;
        std::uint32_t supp;
        std::uint32_t ext;
    };
    std::vector<Node> lang;
    std::unordered_set<std::uint32_t> supports;
    std::uint32_t occurring = 0;

    std::vector<int> word;
    VertexSet rem = full_set(n);
    auto walk = [&](auto&& self) -> void {
        std::uint32_t supp = 0;
        for (int v : word) supp |= 1u << v;
        VertexSet ext = extremes(w, rem);
        std::uint32_t ext_mask = 0;
        for_each_in(ext, [&](int v) { ext_mask |= 1u << v; });
        lang.push_back({word, supp, ext_mask});
        supports.insert(supp);
        occurring |= supp;
        for_each_in(ext, [&](int x) {
            rem.reset(x);
            word.push_back(x);
            self(self);
            word.pop_back();
            rem.set(x);
        });
    };
    walk(walk);
    rep.words = lang.size();

    for (int v = 0; v < n && !rep.missing_symbol; ++v)
        if (!(occurring >> v & 1)) rep.missing_symbol = v;

    // exchange: a word's failure depends only on the other word's support,
    // so quantify over the distinct supports
    std::vector<std::uint32_t> supp_list(supports.begin(), supports.end());
    std::sort(supp_list.begin(), supp_list.end());
    for (const Node& t : lang) {
        for (std::uint32_t A : supp_list) {
            if ((A & ~t.supp) == 0) continue;
            if (((A & ~t.supp) & t.ext) == 0) {
                if (!rep.exchange) rep.exchange = {t.word, A};
            }
        }
        if (rep.exchange) break;
    }
    return rep;
}

NumbadState compute_numbad(const WitnessTable& w, LinearOrder o) {
    int n = w.n();
    NumbadState st{std::move(o), n, std::vector<int>(static_cast<size_t>(n) * n, 0)};
    VertexSet after(n);  // vertices placed after the current position
    for (int i = n - 1; i >= 0; --i) {
        int x = st.order.perm[i];
        for (int y = 0; y < n; ++y)
            if (y != x)
                st.counters[x * n + y] =
                    static_cast<int>((w.row(x, y) & after).count());
        after.set(x);
    }
    return st;
}

bool swap_valid(const NumbadState& st, int j) {
    if (j < 0 || j + 1 >= st.n) throw std::out_of_range("swap position");
    return st.at(st.order.perm[j + 1], st.order.perm[j]) == 0;
}

void apply_swap(NumbadState& st, const WitnessTable& w, int j) {
    if (!swap_valid(st, j)) throw std::invalid_argument("swap breaks the order");
    int n = st.n;
    int a = st.order.perm[j], b = st.order.perm[j + 1];
    // b moves in front of a: pairs (y,b) no longer sit after a; pairs (y,a)
    // now sit after b; nothing else changes relative position
    for (int y = 0; y < n; ++y) {
        st.counters[a * n + y] -= w.row(a, y).test(b) ? 1 : 0;
        st.counters[b * n + y] += w.row(b, y).test(a) ? 1 : 0;
    }
    st.order.perm[j] = b;
    st.order.perm[j + 1] = a;
    st.order.pos[a] = j + 1;
    st.order.pos[b] = j;
}

int h_value(const NumbadState& st, int omega, int x) {
    if (x == omega) throw std::invalid_argument("h is defined away from omega");
    return st.at(x, omega);
}

}  // namespace atfree
