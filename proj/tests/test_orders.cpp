#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "atfree/convexity.hpp"
#include "atfree/gray.hpp"
#include "atfree/orders.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

#include <numeric>
#include <random>
#include <set>

using namespace atfree;

namespace {

// a valid starting order built greedily from the feasibility rule
std::vector<int> greedy_order(const Graph& g, const WitnessTable& w) {
    std::vector<int> out;
    VertexSet rem = full_set(g.n());
    while (rem.any()) {
        int x = first_in(extremes(w, rem));
        REQUIRE(x >= 0);
        out.push_back(x);
        rem.reset(x);
    }
    return out;
}

}  // namespace

TEST_CASE("violation reporting on pinned path orders") {
    Graph p5 = path_graph(5);
    IntervalTable tbl = interval_table(p5);
    // vertex 2 leads although it lies between 0 and 4
    auto v = order_violation(tbl, LinearOrder({2, 0, 1, 3, 4}));
    REQUIRE(v.has_value());
    CHECK(*v == std::array<int, 3>{0, 4, 2});
    CHECK(is_at_free_order(tbl, LinearOrder({0, 1, 2, 3, 4})));

    Graph k5 = complete_graph(5);
    IntervalTable ktbl = interval_table(k5);
    std::vector<int> perm{4, 2, 0, 3, 1};
    CHECK(is_at_free_order(ktbl, LinearOrder(perm)));
}

TEST_CASE("an order is AT-free exactly when every suffix is convex") {
    auto agree = [](const Graph& g) {
        IntervalTable tbl = interval_table(g);
        int n = g.n();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            LinearOrder o(perm);
            bool all_convex = true;
            VertexSet suffix = full_set(n);
            for (int i = 0; i < n && all_convex; ++i) {
                all_convex = is_convex(tbl, suffix);
                suffix.reset(perm[i]);
            }
            CHECK(is_at_free_order(tbl, o) == all_convex);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    for_all_graphs(4, agree);
    std::mt19937 rng(67);
    for (int trial = 0; trial < 25; ++trial) agree(random_graph(6, 0.4, rng));
}

TEST_CASE("enumeration equals the permutation-filter oracle") {
    SUBCASE("every graph on up to 5 vertices") {
        for (int n = 1; n <= 5; ++n)
            for_all_graphs(n, [](const Graph& g) {
                CHECK(enumerate_at_free_orders(g, interval_table(g)) ==
                      oracle_orders(g));
            });
    }
    SUBCASE("corpus graphs at 6 and 7 vertices") {
        for (const Graph& g : {path_graph(7), cycle_graph(6), complete_graph(6),
                               star_graph(6), f7_graph().graph, spider_graph(),
                               complete_split_graph(3, 4), caterpillar_graph(3, 1)})
            CHECK(enumerate_at_free_orders(g, interval_table(g)) ==
                  oracle_orders(g));
    }
}

TEST_CASE("pinned enumeration counts") {
    auto count = [](const Graph& g) {
        return enumerate_at_free_orders(g, interval_table(g)).size();
    };
    CHECK(count(path_graph(3)) == 6);
    CHECK(count(path_graph(5)) == 80);
    CHECK(count(complete_graph(4)) == 24);
    CHECK(count(cycle_graph(6)) == 0);
    CHECK_THROWS_AS(count(path_graph(11)), std::invalid_argument);
}

TEST_CASE("orders exist exactly for AT-free graphs") {
    for_all_graphs(5, [](const Graph& g) {
        bool any = !enumerate_at_free_orders(g, interval_table(g)).empty();
        CHECK(any == !oracle_find_at(g).has_value());
    });
}

TEST_CASE("appendable tracks extension by a full order") {
    auto check_graph = [](const Graph& g) {
        int n = g.n();
        IntervalTable tbl = interval_table(g);
        WitnessTable w(tbl);
        auto orders = enumerate_at_free_orders(g, tbl);
        REQUIRE(!orders.empty());
        // the language: every prefix of every order
        std::set<std::vector<int>> language;
        for (const auto& ord : orders)
            for (size_t len = 0; len <= ord.size(); ++len)
                language.insert(std::vector<int>(ord.begin(), ord.begin() + len));
        for (const auto& word : language) {
            VertexSet placed(n);
            for (int v : word) placed.set(v);
            for (int x = 0; x < n; ++x) {
                if (placed.test(x)) continue;
                auto extended = word;
                extended.push_back(x);
                CHECK(appendable(w, placed, x) == (language.count(extended) > 0));
            }
        }
    };
    for_all_graphs(5, [&](const Graph& g) {
        if (!oracle_find_at(g)) check_graph(g);
    });
    std::mt19937 rng(71);
    for (int trial = 0; trial < 8; ++trial)
        check_graph(random_at_free_graph(6, rng));
}

TEST_CASE("language axioms on pinned graphs") {
    Graph p5 = path_graph(5);
    CHECK(verify_antimatroid_language(p5, interval_table(p5)).pass());
    Graph k2 = complete_graph(2);
    CHECK(verify_antimatroid_language(k2, interval_table(k2)).pass());

    Graph c6 = cycle_graph(6);
    AntimatroidReport rep = verify_antimatroid_language(c6, interval_table(c6));
    CHECK_FALSE(rep.pass());
    REQUIRE(rep.missing_symbol.has_value());
    CHECK(*rep.missing_symbol == 0);
    CHECK(rep.words == 1);  // only the empty word

    CHECK_THROWS_AS(
        verify_antimatroid_language(path_graph(9), interval_table(path_graph(9))),
        std::invalid_argument);
}

TEST_CASE("language axioms across the AT-free corpus") {
    for (const Graph& g : {path_graph(7), cycle_graph(5), complete_graph(6),
                           star_graph(6), f7_graph().graph, two_k2(),
                           complete_split_graph(3, 4), caterpillar_graph(2, 2)})
        CHECK(verify_antimatroid_language(g, interval_table(g)).pass());
    std::mt19937 rng(73);
    for (int trial = 0; trial < 6; ++trial) {
        Graph g = random_at_free_graph(7, rng);
        CHECK(verify_antimatroid_language(g, interval_table(g)).pass());
    }
}

TEST_CASE("counter table from scratch matches the definition") {
    SUBCASE("pinned path values") {
        Graph p5 = path_graph(5);
        IntervalTable tbl = interval_table(p5);
        WitnessTable w(tbl);
        // order (0,2,1,3,4): vertex 2 still precedes 4, so numbad[2][0] = 1
        NumbadState st = compute_numbad(w, LinearOrder({0, 2, 1, 3, 4}));
        CHECK(st.at(2, 0) == 1);
        NumbadState st2 = compute_numbad(w, LinearOrder({0, 1, 2, 3, 4}));
        CHECK(st2.at(2, 0) == 1);  // witness 4 after 2
        CHECK(st2.at(2, 4) == 0);  // witness 0 sits before 2
    }
    SUBCASE("all-zero on cliques") {
        Graph k6 = complete_graph(6);
        WitnessTable w(interval_table(k6));
        NumbadState st = compute_numbad(w, LinearOrder({3, 1, 5, 0, 2, 4}));
        for (int c : st.counters) CHECK(c == 0);
    }
    SUBCASE("random graphs against the oracle") {
        std::mt19937 rng(79);
        for (int trial = 0; trial < 20; ++trial) {
            Graph g = random_graph(8, 0.4, rng);
            WitnessTable w(interval_table(g));
            auto ref_tbl = oracle_interval_table(g);
            std::vector<int> perm(8);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            NumbadState st = compute_numbad(w, LinearOrder(perm));
            CHECK(st.counters == oracle_numbad(ref_tbl, perm));
        }
    }
}

TEST_CASE("swap legality coincides with revalidating the swapped order") {
    auto sweep = [](const Graph& g) {
        IntervalTable tbl = interval_table(g);
        WitnessTable w(tbl);
        for (const auto& ord : enumerate_at_free_orders(g, tbl)) {
            NumbadState st = compute_numbad(w, LinearOrder(ord));
            for (int j = 0; j + 1 < g.n(); ++j) {
                auto swapped = ord;
                std::swap(swapped[j], swapped[j + 1]);
                CHECK(swap_valid(st, j) ==
                      is_at_free_order(tbl, LinearOrder(swapped)));
            }
        }
    };
    for_all_graphs(5, [&](const Graph& g) {
        if (!oracle_find_at(g)) sweep(g);
    });
    std::mt19937 rng(83);
    for (int trial = 0; trial < 5; ++trial) sweep(random_at_free_graph(6, rng));
}

TEST_CASE("incremental counters survive a long random walk") {
    std::mt19937 rng(89);
    Graph g = random_connected_at_free_graph(9, rng);
    IntervalTable tbl = interval_table(g);
    WitnessTable w(tbl);
    NumbadState st = compute_numbad(w, LinearOrder(greedy_order(g, w)));
    REQUIRE(is_at_free_order(tbl, st.order));
    std::uniform_int_distribution<int> pos(0, g.n() - 2);
    int applied = 0;
    for (int step = 0; step < 10000; ++step) {
        int j = pos(rng);
        if (!swap_valid(st, j)) continue;
        apply_swap(st, w, j);
        ++applied;
        if (step % 500 == 0) {
            CHECK(is_at_free_order(tbl, st.order));
            NumbadState fresh = compute_numbad(w, LinearOrder(st.order.perm));
            REQUIRE(st.counters == fresh.counters);
        }
    }
    CHECK(applied > 1000);
    NumbadState fresh = compute_numbad(w, LinearOrder(st.order.perm));
    CHECK(st.counters == fresh.counters);
    CHECK(is_at_free_order(tbl, st.order));
}

TEST_CASE("swap of a doubled position is an involution") {
    Graph p6 = path_graph(6);
    WitnessTable w(interval_table(p6));
    NumbadState st = compute_numbad(w, LinearOrder({0, 1, 2, 3, 4, 5}));
    NumbadState before = st;
    REQUIRE(swap_valid(st, 2));
    apply_swap(st, w, 2);
    REQUIRE(swap_valid(st, 2));
    apply_swap(st, w, 2);
    CHECK(st.order.perm == before.order.perm);
    CHECK(st.counters == before.counters);
    CHECK_THROWS_AS(apply_swap(st, w, 9), std::out_of_range);
}

TEST_CASE("h specializes the counters at omega") {
    Graph p5 = path_graph(5);
    WitnessTable w(interval_table(p5));
    NumbadState st = compute_numbad(w, LinearOrder({0, 1, 2, 3, 4}));
    CHECK(h_value(st, 0, 2) == 1);  // z = 4 after 2
    CHECK_THROWS_AS(h_value(st, 0, 0), std::invalid_argument);

    // fixture sweep: h equals the direct count over the decomposition's C,
    // and restricting z to C loses nothing
    NamedGraph ng = f7_graph();
    const Graph& g = ng.graph;
    ComponentTable ctbl(g);
    IntervalTable tbl(g, ctbl);
    Decomposition d = decompose(g, ctbl);
    WitnessTable wf(tbl);
    NumbadState stf = compute_numbad(wf, LinearOrder(canonical_order(g)));
    for (int x = 0; x < g.n(); ++x) {
        if (x == d.omega) continue;
        int direct_c = 0, direct_all = 0;
        for (int z = 0; z < g.n(); ++z) {
            if (!tbl.member(d.omega, z, x)) continue;
            if (stf.order.pos[x] < stf.order.pos[z]) {
                ++direct_all;
                if (d.C.test(z)) ++direct_c;
            }
        }
        CHECK(h_value(stf, d.omega, x) == direct_all);
        CHECK(direct_all == direct_c);
    }
}
