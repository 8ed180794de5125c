#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "atfree/graph.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

#include <random>
#include <set>

using namespace atfree;

TEST_CASE("parser accepts numeric ids, comments and blank lines") {
    NamedGraph ng = parse_graph("# path on three vertices\n\n3 2\n0 1\n\n1 2\n");
    CHECK(ng.graph.n() == 3);
    CHECK(ng.graph.edge_count() == 2);
    CHECK(ng.graph.adjacent(0, 1));
    CHECK(ng.graph.adjacent(1, 2));
    CHECK_FALSE(ng.graph.adjacent(0, 2));
    CHECK(ng.names == std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("parser maps arbitrary tokens in first-appearance order") {
    NamedGraph ng = parse_graph("3 2\nalpha beta\nbeta gamma\n");
    CHECK(ng.names == std::vector<std::string>{"alpha", "beta", "gamma"});
    CHECK(ng.graph.adjacent(0, 1));
    CHECK(ng.graph.adjacent(1, 2));
}

TEST_CASE("parser treats out-of-range numerals as names") {
    // '5' exceeds n-1, so tokens fall back to name resolution
    NamedGraph ng = parse_graph("2 1\n5 7\n");
    CHECK(ng.names == std::vector<std::string>{"5", "7"});
    CHECK(ng.graph.adjacent(0, 1));
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 2\n0 1\n"), ParseError);      // missing edge
    CHECK_THROWS_AS(parse_graph("2 1\n0 0\n"), ParseError);      // self loop
    CHECK_THROWS_AS(parse_graph("2 1\n0\n1\n"), ParseError);     // split line
    CHECK_THROWS_AS(parse_graph("1 2\na b\nb c\n"), ParseError); // too many names
}

TEST_CASE("render and reparse reproduce the graph") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(9, 0.4, rng);
        NamedGraph back = parse_graph(render_graph(g));
        REQUIRE(back.graph.n() == g.n());
        for (int u = 0; u < g.n(); ++u)
            for (int v = 0; v < g.n(); ++v)
                CHECK(back.graph.adjacent(u, v) == g.adjacent(u, v));
    }
}

TEST_CASE("components match the union-find oracle under random deletions") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(10, 0.25, rng);
        VertexSet removed(10);
        for (int v = 0; v < 10; ++v)
            if (rng() % 3 == 0) removed.set(v);
        auto lab = oracle_components(g, removed);
        auto comps = components(g, removed);
        // same partition: every oracle class appears as exactly one component
        std::set<int> seen;
        for (const auto& comp : comps) {
            int rep = first_in(comp);
            REQUIRE(rep >= 0);
            CHECK(seen.insert(lab[rep]).second);
            for (int v = 0; v < 10; ++v)
                CHECK(comp.test(v) == (lab[v] == lab[rep]));
        }
        int classes = 0;
        for (int v = 0; v < 10; ++v) classes = std::max(classes, lab[v] + 1);
        CHECK(static_cast<int>(comps.size()) == classes);
    }
}

TEST_CASE("component table agrees with per-vertex component runs") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(9, 0.35, rng);
        ComponentTable tbl(g);
        for (int x = 0; x < 9; ++x) {
            auto lab = oracle_components(g, g.closed_neighborhood(x));
            for (int u = 0; u < 9; ++u) {
                CHECK((tbl.label(x, u) < 0) == (lab[u] < 0));
                for (int v = 0; v < 9; ++v) {
                    bool same = lab[u] >= 0 && lab[u] == lab[v];
                    CHECK(tbl.same_component(x, u, v) == same);
                }
            }
            int biggest = 0;
            std::vector<int> size(9, 0);
            for (int u = 0; u < 9; ++u)
                if (lab[u] >= 0) biggest = std::max(biggest, ++size[lab[u]]);
            CHECK(tbl.largest_component_size(x) == biggest);
        }
    }
}

TEST_CASE("induced subgraph keeps exactly the internal edges") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(10, 0.4, rng);
        VertexSet keep(10);
        for (int v = 0; v < 10; ++v)
            if (rng() % 2) keep.set(v);
        std::vector<int> back;
        Graph sub = induced_subgraph(g, keep, &back);
        REQUIRE(sub.n() == static_cast<int>(keep.count()));
        REQUIRE(back.size() == keep.count());
        for (size_t i = 1; i < back.size(); ++i) CHECK(back[i - 1] < back[i]);
        for (int a = 0; a < sub.n(); ++a)
            for (int b = 0; b < sub.n(); ++b)
                CHECK(sub.adjacent(a, b) == g.adjacent(back[a], back[b]));
    }
}

TEST_CASE("module and clique predicates") {
    Graph p4 = path_graph(4);
    CHECK(is_module(p4, empty_set(4)));
    CHECK(is_module(p4, singleton(4, 2)));
    CHECK(is_module(p4, full_set(4)));
    VertexSet mid(4);
    mid.set(1);
    mid.set(2);
    CHECK_FALSE(is_module(p4, mid));  // 0 sees 1 but not 2

    Graph split = complete_split_graph(3, 2);
    VertexSet indep(5);
    indep.set(3);
    indep.set(4);
    CHECK(is_module(split, indep));
    CHECK_FALSE(is_clique(split, full_set(5)));
    VertexSet cl(5);
    cl.set(0);
    cl.set(1);
    cl.set(2);
    CHECK(is_clique(split, cl));
}

TEST_CASE("set formatting uses names when given") {
    VertexSet s(4);
    s.set(0);
    s.set(2);
    CHECK(format_set(s) == "{0,2}");
    std::vector<std::string> names{"a", "b", "c", "d"};
    CHECK(format_set(s, &names) == "{a,c}");
    CHECK(format_set(empty_set(4)) == "{}");
}
