#include "atfree/gray.hpp"

#include "atfree/betweenness.hpp"
#include "atfree/convexity.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <bit>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace atfree {

namespace {

uint64_t bit64(int v) { return uint64_t{1} << v; }

int pop64(uint64_t m) { return std::popcount(m); }

int low64(uint64_t m) { return std::countr_zero(m); }

int largest_within(const std::vector<VertexSet>& comps) {
    size_t best = 0;
    for (const auto& c : comps) best = std::max(best, c.count());
    return static_cast<int>(best);
}

// Least vertex appendable at each step.  Works for every AT-free graph: a
// valid prefix always extends (the orders are the basic words of an
// antimatroid), and the result is the lexicographically least AT-free order.
// The once-natural alternative — recursing on the induced subgraphs G[Omega]
// and G[C+S] and concatenating — can emit an invalid order: an interval of a
// C+S pair may be realized only by paths through Omega, which the induced
// subgraph cannot see.
std::vector<int> least_order(const Graph& g, const IntervalTable& tbl) {
    WitnessTable w(tbl);
    std::vector<int> out;
    out.reserve(g.n());
    VertexSet rem = full_set(g.n());
    for (int i = 0; i < g.n(); ++i) {
        int x = first_in(extremes(w, rem));
        if (x < 0) throw std::logic_error("canonical_order: no appendable vertex");
        out.push_back(x);
        rem.reset(x);
    }
    return out;
}

}  // namespace

int choose_omega(const Graph& g, const ComponentTable& tbl) {
    if (g.n() == 0 || components(g, empty_set(g.n())).size() != 1)
        throw std::invalid_argument("choose_omega: graph must be connected");
    int omega = -1, best = -1;
    for (int x = 0; x < g.n(); ++x) {
        int sz = tbl.largest_component_size(x);
        if (sz > best) {
            best = sz;
            omega = x;
        }
    }
    return omega;
}

Decomposition decompose(const Graph& g, const ComponentTable& tbl) {
    if (is_clique(g, full_set(g.n())))
        throw std::invalid_argument("decompose: clique input (no decomposition)");
    Decomposition d;
    d.omega = choose_omega(g, tbl);
    auto comps = components(g, g.closed_neighborhood(d.omega));
    int best = largest_within(comps);
    for (const auto& c : comps)  // first of maximum size = least-id tie-break
        if (static_cast<int>(c.count()) == best) {
            d.C = c;
            break;
        }
    d.S = empty_set(g.n());
    for_each_in(d.C, [&](int v) { d.S |= g.neighbors(v); });
    d.S -= d.C;
    d.Omega = full_set(g.n()) - d.C - d.S;

    if (!d.Omega.test(d.omega))
        throw std::logic_error("decompose: omega fell outside Omega");
    bool complete = true;
    for_each_in(d.Omega, [&](int o) {
        if ((d.S - g.neighbors(o)).any()) complete = false;
    });
    if (!complete)
        throw std::logic_error("decompose: Omega-S adjacency is not complete");
    if (!is_module(g, d.Omega))
        throw std::logic_error("decompose: Omega is not a module");
    IntervalTable itbl = interval_table(g);
    if (!is_convex(itbl, d.Omega))
        throw std::logic_error("decompose: Omega is not convex");
    if (!is_convex(itbl, d.C | d.S))
        throw std::logic_error("decompose: C+S is not convex");
    return d;
}

std::vector<int> canonical_order(const Graph& g) {
    ComponentTable ctbl(g);
    if (find_asteroidal_triple(g, ctbl))
        throw std::invalid_argument("canonical_order: graph has an asteroidal triple");
    return least_order(g, IntervalTable(g, ctbl));
}

bool check_order_split(const Graph& g, const Decomposition& d, const LinearOrder& o) {
    IntervalTable tbl = interval_table(g);
    VertexSet CS = d.C | d.S;
    // Part restrictions are judged against the whole graph's intervals (the
    // parts are convex, so interval members of a pair inside a part stay in
    // that part) — the induced subgraph would miss intervals realized by
    // paths through the other part.
    auto part_ok = [&](const VertexSet& part) {
        bool ok = true;
        for_each_in(part, [&](int x) {
            for_each_in(part, [&](int y) {
                if (y <= x) return;
                for_each_in(tbl.row(x, y) & part, [&](int z) {
                    if (o.pos[z] < o.pos[x] && o.pos[z] < o.pos[y]) ok = false;
                });
            });
        });
        return ok;
    };
    if (!part_ok(d.Omega) || !part_ok(CS)) return false;

    // linking rule: x in I(omega', y) placed before y forces omega' before x
    bool ok = true;
    for_each_in(d.Omega, [&](int om) {
        for_each_in(CS, [&](int y) {
            for_each_in(tbl.row(om, y) & CS, [&](int x) {
                if (o.pos[x] < o.pos[y] && o.pos[om] >= o.pos[x]) ok = false;
            });
        });
    });
    return ok;
}

namespace {

// ---- the Gray-stream engine ----
//
// Orders form the words of an antimatroid (a vertex may be appended when it
// lies in no interval of two unplaced vertices), so the orders sharing a
// prefix form a "block".  The engine walks blocks recursively: a frame
// covers every completion of cur[:l] except those in `skip`ped top blocks
// (covered by the caller) and except one pre-visited word m, and finishes
// with tau at offset 0 of the suffix (exit 'A') or offset 1 (exit 'B').
// Sibling blocks are bridged by one adjacent swap at l, or two when a
// collision with m must be dodged; the dodge's intermediate word is emitted
// later at its own turn, which is what keeps every order visited exactly
// once.  All state lives in cur plus the witness masks; per emitted order
// the work is bounded by a constant number of frame operations.
class Engine {
public:
    Engine(const Graph& g, const IntervalTable& tbl, std::vector<int> init,
           const std::function<void(const GrayStep&)>& sink)
        : n_(g.n()), cur_(std::move(init)), sink_(sink) {
        if (n_ > 64)
            throw std::invalid_argument("generate_gray: supports at most 64 vertices");
        full_ = (n_ == 64) ? ~uint64_t{0} : bit64(n_) - 1;
        wit_.assign(static_cast<size_t>(n_) * n_, 0);
        for (int y = 0; y < n_; ++y)
            for (int z = y + 1; z < n_; ++z)
                for_each_in(tbl.row(y, z), [&](int x) {
                    wit_[static_cast<size_t>(x) * n_ + y] |= bit64(z);
                    wit_[static_cast<size_t>(x) * n_ + z] |= bit64(y);
                });
        if (!word_valid(cur_))
            throw std::logic_error("generator: initial order is not valid");
    }

    void run() {
        GrayStep s;
        s.init = cur_;
        sink_(s);
        if (n_ >= 2) cover_excl(0, 0, nullptr, -1);
    }

    const std::vector<int>& word() const { return cur_; }

private:
    using Word = std::vector<int>;

    [[noreturn]] static void stuck(const char* what) {
        throw std::logic_error(std::string("generator stuck: ") + what);
    }

    void emit(int a, int b) {
        GrayStep s;
        s.swaps[0] = a;
        s.swaps[1] = b;
        s.swap_count = b < 0 ? 1 : 2;
        sink_(s);
    }

    void step1(int j) {
        std::swap(cur_[j], cur_[j + 1]);
        emit(j, -1);
    }

    // two swaps as one output step, applied left to right
    void step2(int j, int k) {
        std::swap(cur_[j], cur_[j + 1]);
        std::swap(cur_[k], cur_[k + 1]);
        emit(j, k);
    }

    const Word& sim(int a, int b = -1) {
        scratch_ = cur_;
        std::swap(scratch_[a], scratch_[a + 1]);
        if (b >= 0) std::swap(scratch_[b], scratch_[b + 1]);
        return scratch_;
    }

    bool word_valid(const Word& w) const {
        uint64_t rem = full_;
        for (int i = 0; i < n_; ++i) {
            int x = w[i];
            uint64_t others = rem & ~bit64(x);
            const uint64_t* row = &wit_[static_cast<size_t>(x) * n_];
            for (uint64_t ys = others; ys; ys &= ys - 1)
                if (row[low64(ys)] & others) return false;
            rem = others;
        }
        return true;
    }

    uint64_t suffix_mask(int l) const {
        uint64_t m = 0;
        for (int i = l; i < n_; ++i) m |= bit64(cur_[i]);
        return m;
    }

    // vertices of rem appendable now: in no interval of two other rem members
    uint64_t ext(uint64_t rem) const {
        uint64_t out = 0;
        for (uint64_t xs = rem; xs; xs &= xs - 1) {
            int x = low64(xs);
            uint64_t others = rem & ~bit64(x);
            const uint64_t* row = &wit_[static_cast<size_t>(x) * n_];
            bool free = true;
            for (uint64_t ys = others; ys; ys &= ys - 1)
                if (row[low64(ys)] & others) {
                    free = false;
                    break;
                }
            if (free) out |= bit64(x);
        }
        return out;
    }

    // does cur[:l] + k start exactly one completion?
    bool forced_singleton(int l, int k) const {
        uint64_t rem = suffix_mask(l) & ~bit64(k);
        while (rem) {
            uint64_t e = ext(rem);
            if (pop64(e) != 1) return false;
            rem &= ~e;
        }
        return true;
    }

    // For the deliberate nested BAD cover of the xi top-block (tau = x1, no
    // exclusion): if it would take the micro exit, the unique (xi,xi')-sub
    // word M it ends on; otherwise nullopt.
    std::optional<Word> micro_predict(int l, int x1, int xi) const {
        uint64_t remset = suffix_mask(l);
        uint64_t A2 = ext(remset & ~bit64(xi));
        uint64_t Y2 = A2 & ~bit64(x1);
        if (pop64(Y2) != 1) return std::nullopt;
        int xip = low64(Y2);
        uint64_t rem3 = remset & ~bit64(xi) & ~bit64(xip);
        Word M(cur_.begin(), cur_.begin() + l);
        M.push_back(xi);
        M.push_back(xip);
        while (rem3) {
            uint64_t e = ext(rem3);
            if (pop64(e) != 1) return std::nullopt;
            int t = low64(e);
            M.push_back(t);
            rem3 &= ~e;
        }
        assert(M[l + 2] == x1 && "micro shape must put x1 third");
        return M;
    }

    // Deterministic chain order: first fixed, optional last fixed, middles
    // ascending except two local preferences — the block right after first
    // should not be second_avoid (keeps the first sub-frame good when
    // avoidable), and mu must not directly follow mu_pred_avoid (keeps the
    // crossing into mu's block away from the excluded word).
    std::vector<int> plan_chain(uint64_t keys, int first, int last = -1,
                                int second_avoid = -1, int mu = -1,
                                int mu_pred_avoid = -1) const {
        assert(keys & bit64(first));
        if (last >= 0 && last == first) {
            assert(keys == bit64(first));
            return {first};
        }
        std::vector<int> pool;
        for (uint64_t ms = keys & ~bit64(first) & ~(last >= 0 ? bit64(last) : 0); ms;
             ms &= ms - 1)
            pool.push_back(low64(ms));
        std::vector<int> order{first};
        while (!pool.empty()) {
            size_t at = pool.size();
            for (size_t i = 0; i < pool.size(); ++i) {
                int c = pool[i];
                if (mu >= 0 && c == mu && order.back() == mu_pred_avoid) continue;
                if (order.size() == 1 && second_avoid >= 0 && c == second_avoid &&
                    pool.size() > 1)
                    continue;
                at = i;
                break;
            }
            if (at == pool.size()) at = 0;
            order.push_back(pool[at]);
            pool.erase(pool.begin() + static_cast<long>(at));
        }
        if (last >= 0) order.push_back(last);
        if (mu >= 0 && mu_pred_avoid >= 0) {
            auto it = std::find(order.begin() + 1, order.end(), mu);
            if (it != order.end() && *(it - 1) == mu_pred_avoid) {
                size_t i = static_cast<size_t>(it - order.begin());
                size_t j = i + 1;
                size_t limit = order.size() - (last >= 0 ? 1 : 0);
                // try pushing mu one slot later among the middles
                if (j < limit && order[j] != mu_pred_avoid)
                    std::swap(order[i], order[j]);
            }
        }
        return order;
    }

    // Cross from the block of cur[l] to the sibling whose key sits at l+1
    // (sub_exit 'A') or l+2 (sub_exit 'B').
    void cross(int l, char sub_exit, const Word* m) {
        if (sub_exit == 'A') {
            if (m && sim(l) == *m)
                step2(l, l + 1);  // dodge: through m as a middle, to a neighbour
            else
                step1(l);
        } else {
            if (m && sim(l + 1, l) == *m) stuck("B-cross collision");
            step2(l + 1, l);
        }
    }

    // Cover the blocks of `order` in sequence; block i is covered while
    // positioning order[i+1] for the crossing; the last block is covered
    // with last_subtau (-1 = free).
    char run_chain(int l, const std::vector<int>& order, const Word* m,
                   int last_subtau = -1) {
        char se = 'A';
        for (size_t i = 0; i < order.size(); ++i) {
            int k = order[i];
            assert(cur_[l] == k);
            (void)k;
            int subtau = i + 1 < order.size() ? order[i + 1] : last_subtau;
            const Word* sub_m = (m && (*m)[l] == order[i]) ? m : nullptr;
            se = cover_excl(l + 1, 0, sub_m, subtau);
            if (i + 1 < order.size()) cross(l, se, m);
        }
        return se;
    }

    char cover_excl(int l, uint64_t skip, const Word* m, int tau) {
        if (m && (skip & bit64((*m)[l]))) m = nullptr;
        if (l == n_ - 1) {
            assert(!skip && !m);
            assert(tau < 0 || tau == cur_[l]);
            return 'A';
        }
        uint64_t remset = suffix_mask(l);
        uint64_t A = ext(remset);
        int x1 = cur_[l];
        assert((A & bit64(x1)) && !(skip & bit64(x1)));
        assert(tau < 0 || ((A & bit64(tau)) && !(skip & bit64(tau))));
        uint64_t keys = A & ~skip;
        int sing_mu = -1;
        if (m) {
            int mu = (*m)[l];
            assert(keys & bit64(mu));
            if (forced_singleton(l, mu)) {
                sing_mu = mu;
                keys &= ~bit64(mu);
                m = nullptr;
            }
        }
        if (pop64(keys) == 1) {
            assert(keys == bit64(x1));
            if (tau < 0 || tau == x1) {
                cover_excl(l + 1, 0, m, -1);
                return 'A';
            }
            assert(tau == sing_mu);
            char se = cover_excl(l + 1, 0, m, tau);
            if (se != 'A') stuck("single-key tau-sing sub exited B");
            return 'B';
        }
        // multi-key
        if (tau >= 0 && tau == sing_mu) {
            // tau's block is the skipped singleton {m}: end beside it
            int last = 63 - std::countl_zero(keys & ~bit64(x1));
            auto order = plan_chain(keys, x1, last, cur_[l + 1],
                                    m ? (*m)[l] : -1, m ? (*m)[l + 1] : -1);
            char se = run_chain(l, order, m, tau);
            if (se != 'A') stuck("tau-sing last block exited B");
            return 'B';
        }
        if (tau < 0 || tau != x1) {
            auto order = plan_chain(keys, x1, tau, cur_[l + 1],
                                    m ? (*m)[l] : -1, m ? (*m)[l + 1] : -1);
            run_chain(l, order, m);
            return 'A';
        }
        // ---- tau == x1: the frame must end in its own entry block ----
        uint64_t Y = keys & ~bit64(x1);
        assert(Y);
        int t0 = cur_[l + 1];
        if (pop64(Y) >= 2) return split(l, m, Y, t0);
        int xi = low64(Y);
        if (forced_singleton(l, xi)) {
            // micro: the xi block is one word
            if (m && (*m)[l] == xi) {
                // that word is m, pre-visited: just finish the x1 block
                cover_excl(l + 1, 0, nullptr, -1);
                return 'A';
            }
            char se = cover_excl(l + 1, 0, (m && (*m)[l] == x1) ? m : nullptr, xi);
            cross(l, se, m);  // lands on the unique xi-word
            return 'B';
        }
        // general |Y| = 1
        const Word* m_x1 = (m && (*m)[l] == x1) ? m : nullptr;
        const Word* m_xi = (m && (*m)[l] == xi) ? m : nullptr;
        if (t0 != xi) {
            // Cover the (x1,t0) sub fully with xi steered to the far end, then
            // leave the x1 block without ever visiting the (x1,xi) sub: the
            // cross-back landing lives there, so it is fresh by construction.
            const Word* sub_m = (m_x1 && (*m_x1)[l + 1] == t0) ? m_x1 : nullptr;
            char se = cover_excl(l + 2, 0, sub_m, xi);
            bool have_w2 = false;
            Word w2;
            if (se == 'A') {
                // end = x1 t0 xi u; out via a double swap whose middle
                // x1 xi t0 u is a fresh (x1,xi)-sub word, emitted later by
                // the closing arc
                if (m_xi && sim(l + 1, l) == *m_xi) stuck("y1 direct-out hits m");
                step2(l + 1, l);
            } else {
                // end = x1 t0 y xi u; hop within the x1 block into the (x1,xi)
                // sub (middle in the just-covered t0 sub), then a plain swap out
                if (m_x1 && sim(l + 2, l + 1) == *m_x1) stuck("y1 B-inner lands on m");
                step2(l + 2, l + 1);
                w2 = cur_;
                have_w2 = true;
                if (m_xi && sim(l) == *m_xi)
                    step2(l, l + 1);  // dodge through m
                else
                    step1(l);
                if (m_x1 && (*m_x1)[l + 1] != t0) stuck("double exclusion in tail frame");
            }
            char se2 = cover_excl(l + 1, 0, m_xi, x1);  // deliberate nested cover
            const Word& land = se2 == 'A' ? sim(l) : sim(l + 1, l);
            if ((have_w2 && land == w2) || (m && land == *m))
                stuck("cross-back collision");
            if (se2 == 'A')
                step1(l);
            else
                step2(l + 1, l);
            const Word* excl = have_w2 ? &w2 : nullptr;
            if (!excl && m_x1 && (*m_x1)[l + 1] != t0) excl = m_x1;
            cover_excl(l + 1, bit64(t0), excl, -1);
            return 'A';
        }
        // t0 == xi: the entry word w already sits in the (x1,xi) sub
        Word w = cur_;
        if (m_x1) stuck("double exclusion in entry sub");
        if (!m_xi) {
            auto M = micro_predict(l, x1, xi);
            if (M) {
                Word lm = *M;
                std::swap(lm[l + 1], lm[l + 2]);
                std::swap(lm[l], lm[l + 1]);
                if (lm == w) {
                    // The nested micro exit would cross back onto w itself.
                    // Go around the other way: double swap straight onto M
                    // through the fresh middle xi x1 ..., then walk the
                    // (xi,x1) sub.
                    step2(l, l + 1);  // -> M
                    step1(l + 1);     // -> e1 = xi x1 ...
                    bool sub_rest = !forced_singleton(l + 1, x1);
                    if (sub_rest) cover_excl(l + 2, 0, nullptr, -1);
                    if (forced_singleton(l, x1)) return 'B';  // x1 block was just {w}
                    if (!sub_rest) {
                        // xi top done but the x1 block is not, and the plain
                        // cross-back from e1 would land on w: squeeze out the
                        // other side, through w as a visited middle
                        if (!word_valid(sim(l, l + 1))) stuck("dance dead corner");
                        step2(l, l + 1);  // -> x1 xi' xi u, fresh
                        cover_excl(l + 1, 0, &w, -1);
                        return 'A';
                    }
                    step1(l);  // cross back; fresh since the end differs from e1
                    cover_excl(l + 1, 0, &w, -1);
                    return 'A';
                }
            }
        }
        // safe: plain swap out, cover the xi top-block, cross back beside w
        if (m_xi && sim(l) == *m_xi)
            step2(l, l + 1);  // dodge through m
        else
            step1(l);
        char se2 = cover_excl(l + 1, 0, m_xi, x1);  // deliberate nested cover
        const Word& land = se2 == 'A' ? sim(l) : sim(l + 1, l);
        if (land == w || (m && land == *m)) stuck("cross-back collision");
        if (se2 == 'A')
            step1(l);
        else
            step2(l + 1, l);
        cover_excl(l + 1, 0, &w, -1);
        return 'A';
    }

    // tau == x1 with two or more sibling keys: enter a sibling chain and
    // come back, leaving the covered top blocks skipped for the final arc.
    char split(int l, const Word* m, uint64_t Y, int t0) {
        int x1 = cur_[l];
        int mu = m ? (*m)[l] : -1;
        const Word* m_in_x1 = (m && mu == x1) ? m : nullptr;
        auto blocked = [&](int v) { return m_in_x1 && (*m_in_x1)[l + 1] == v; };
        if (Y & bit64(t0)) {
            // the entry sub-key is itself a sibling key
            int z = -1, z_any = -1;
            for (uint64_t ms = Y & ~bit64(t0); ms; ms &= ms - 1) {
                int c = low64(ms);
                z_any = c;
                if (!blocked(c)) z = c;  // last preferred
            }
            if (z < 0) z = z_any;
            cover_excl(l + 2, 0, blocked(t0) ? m_in_x1 : nullptr, -1);
            cross(l, 'A', mu == t0 ? m : nullptr);  // into the t0 top-block
            auto order = plan_chain(Y, t0, z, -1, (mu >= 0 && (Y & bit64(mu))) ? mu : -1,
                                    m ? (*m)[l + 1] : -1);
            run_chain(l, order, m, x1);
            if (m_in_x1 && sim(l) == *m_in_x1) stuck("split cross-back collision");
            step1(l);
            cover_excl(l + 1, bit64(t0), !blocked(t0) ? m_in_x1 : nullptr, -1);
            return 'A';
        }
        // entry sub-key t0 is not a sibling key: route through a chosen
        // sibling sub (x1,yp) instead
        int yp = -1, yp_any = -1;
        for (uint64_t ms = Y; ms; ms &= ms - 1) {
            int c = low64(ms);
            if (yp_any < 0) yp_any = c;
            if (yp < 0 && !blocked(c)) yp = c;  // first preferred
        }
        if (yp < 0) yp = yp_any;
        int z = -1, z_any = -1;
        for (uint64_t ms = Y & ~bit64(yp); ms; ms &= ms - 1) {
            int c = low64(ms);
            z_any = c;
            if (!blocked(c)) z = c;  // last preferred
        }
        if (z < 0) z = z_any;
        char se = cover_excl(l + 2, 0, blocked(t0) ? m_in_x1 : nullptr, yp);
        const Word* mm = blocked(yp) ? m_in_x1 : nullptr;
        cross(l + 1, se, mm);
        // cover the rest of the (x1,yp) sub-block, then leave from it
        cover_excl(l + 2, 0, mm, -1);
        cross(l, 'A', mu == yp ? m : nullptr);
        auto order = plan_chain(Y, yp, z, -1, (mu >= 0 && (Y & bit64(mu))) ? mu : -1,
                                m ? (*m)[l + 1] : -1);
        run_chain(l, order, m, x1);
        if (m_in_x1 && sim(l) == *m_in_x1) stuck("split cross-back collision");
        step1(l);
        cover_excl(l + 1, bit64(t0) | bit64(yp),
                   (m_in_x1 && (*m_in_x1)[l + 1] != t0 && (*m_in_x1)[l + 1] != yp)
                       ? m_in_x1
                       : nullptr,
                   -1);
        return 'A';
    }

    int n_;
    uint64_t full_;
    std::vector<uint64_t> wit_;  // wit_[x*n+y] = {z : x in I(y,z)} as a mask
    std::vector<int> cur_;
    std::vector<int> scratch_;
    const std::function<void(const GrayStep&)>& sink_;
};

}  // namespace

void generate_gray(const Graph& g, const std::function<void(const GrayStep&)>& sink) {
    if (g.n() == 0) throw std::invalid_argument("generate_gray: empty graph");
    ComponentTable ctbl(g);
    if (find_asteroidal_triple(g, ctbl))
        throw std::invalid_argument("generate_gray: graph has an asteroidal triple");
    IntervalTable tbl(g, ctbl);
    Engine eng(g, tbl, least_order(g, tbl), sink);
    eng.run();
}

namespace {

// can `from` reach `to` with one or two adjacent transpositions?
bool within_two_swaps(const std::vector<int>& from, const std::vector<int>& to) {
    int n = static_cast<int>(from.size());
    if (from == to) return true;
    std::vector<int> w;
    for (int j = 0; j + 1 < n; ++j) {
        w = from;
        std::swap(w[j], w[j + 1]);
        if (w == to) return true;
        for (int k = 0; k + 1 < n; ++k) {
            std::vector<int> w2 = w;
            std::swap(w2[k], w2[k + 1]);
            if (w2 == to) return true;
        }
    }
    return false;
}

}  // namespace

BenchStats bench_cat(const Graph& g, int warmup) {
    using clock = std::chrono::steady_clock;
    auto ns = [](clock::duration d) {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(d).count();
    };
    for (int i = 0; i < warmup; ++i) {
        long long count = 0;
        generate_gray(g, [&](const GrayStep&) { ++count; });
    }
    BenchStats st;
    std::function<void(const GrayStep&)> sink = [&](const GrayStep&) { ++st.orders; };
    auto t0 = clock::now();
    ComponentTable ctbl(g);
    if (find_asteroidal_triple(g, ctbl))
        throw std::invalid_argument("bench_cat: graph has an asteroidal triple");
    IntervalTable tbl(g, ctbl);
    Engine eng(g, tbl, least_order(g, tbl), sink);
    auto t1 = clock::now();
    std::vector<int> init = eng.word();
    eng.run();
    auto t2 = clock::now();
    st.preprocess_ns = ns(t1 - t0);
    st.total_ns = ns(t2 - t1);
    st.ns_per_order = st.orders ? static_cast<double>(st.total_ns) / st.orders : 0.0;
    st.cyclic = within_two_swaps(eng.word(), init);
    rusage ru{};
    getrusage(RUSAGE_SELF, &ru);
    st.peak_mem_kb = ru.ru_maxrss;
    return st;
}

}  // namespace atfree
