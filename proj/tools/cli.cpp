#include "cli.hpp"

#include "atfree/betweenness.hpp"
#include "atfree/convexity.hpp"
#include "atfree/graph.hpp"
#include "atfree/gray.hpp"
#include "atfree/orders.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

namespace atfree {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

int resolve_vertex(const NamedGraph& ng, const std::string& tok) {
    for (size_t i = 0; i < ng.names.size(); ++i)
        if (ng.names[i] == tok) return static_cast<int>(i);
    throw UsageError("unknown vertex '" + tok + "'");
}

std::string join_tokens(const std::vector<int>& ids,
                        const std::vector<std::string>& names) {
    std::string line;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) line += ' ';
        line += names[ids[i]];
    }
    return line;
}

std::string join_ids(const std::vector<int>& ids) {
    std::string line;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) line += ' ';
        line += std::to_string(ids[i]);
    }
    return line;
}

void echo_names(const NamedGraph& ng, std::ostream& out) {
    for (size_t i = 0; i < ng.names.size(); ++i)
        out << "NAME " << i << ' ' << ng.names[i] << '\n';
}

VertexSet set_from_tokens(const NamedGraph& ng,
                          const std::vector<std::string>& toks) {
    VertexSet s = empty_set(ng.graph.n());
    for (const auto& t : toks) s.set(resolve_vertex(ng, t));
    return s;
}

// Geometry and union-closure run on either a graph's convex family or a
// literal set system; names travel along only in the graph case.
struct FamilyInput {
    SetSystem sys;
    std::vector<std::string> names;  // empty for --sets input
};

FamilyInput load_family(const std::string& text, bool literal_sets, int cap) {
    if (literal_sets) {
        SetSystem s = parse_set_system(text);
        if (!is_alignment(s))
            throw UsageError("set system is not an alignment");
        return {std::move(s), {}};
    }
    NamedGraph ng = parse_graph(text);
    IntervalTable tbl = interval_table(ng.graph);
    return {enumerate_convex_sets(ng.graph, tbl, cap), std::move(ng.names)};
}

std::string render_mask(std::uint32_t mask, const FamilyInput& fam) {
    VertexSet s = set_of(mask, fam.sys.universe);
    return format_set(s, fam.names.empty() ? nullptr : &fam.names);
}

int cmd_check(const NamedGraph& ng, std::ostream& out) {
    ComponentTable ctbl(ng.graph);
    auto at = find_asteroidal_triple(ng.graph, ctbl);
    if (!at) {
        out << "OK\n";
        return 0;
    }
    out << "CE " << ng.names[(*at)[0]] << ' ' << ng.names[(*at)[1]] << ' '
        << ng.names[(*at)[2]] << '\n';
    return 1;
}

int cmd_interval(const NamedGraph& ng, const std::string& xs,
                 const std::string& ys, std::ostream& out) {
    int x = resolve_vertex(ng, xs), y = resolve_vertex(ng, ys);
    VertexSet iv = interval(ng.graph, ComponentTable(ng.graph), x, y);
    std::vector<int> ids;
    for_each_in(iv, [&](int v) { ids.push_back(v); });
    out << join_tokens(ids, ng.names) << '\n';
    return 0;
}

int cmd_closure(const NamedGraph& ng, const std::vector<std::string>& toks,
                std::ostream& out) {
    IntervalTable tbl = interval_table(ng.graph);
    out << format_set(closure(tbl, set_from_tokens(ng, toks)), &ng.names) << '\n';
    return 0;
}

int cmd_convex(const NamedGraph& ng, const std::vector<std::string>& toks,
               std::ostream& out) {
    IntervalTable tbl = interval_table(ng.graph);
    VertexSet X = set_from_tokens(ng, toks);
    int n = ng.graph.n();
    // report every escaping witness, least pair first
    bool ok = true;
    for (int x = 0; x < n; ++x) {
        if (!X.test(x)) continue;
        for (int y = x + 1; y < n; ++y) {
            if (!X.test(y)) continue;
            VertexSet outside = tbl.row(x, y) - X;
            for_each_in(outside, [&](int z) {
                out << "CE " << ng.names[x] << ' ' << ng.names[y] << ' '
                    << ng.names[z] << '\n';
                ok = false;
            });
        }
    }
    if (ok) out << "OK\n";
    return ok ? 0 : 1;
}

int cmd_family(const NamedGraph& ng, int cap, std::ostream& out) {
    IntervalTable tbl = interval_table(ng.graph);
    ConvexFamily fam = enumerate_convex_sets(ng.graph, tbl, cap);
    for (std::uint32_t mask : fam.family)
        out << format_set(set_of(mask, fam.universe), &ng.names) << '\n';
    return 0;
}

int cmd_verify_geometry(const FamilyInput& fam, std::ostream& out) {
    GeometryReport rep = verify_convex_geometry(fam.sys);
    if (rep.pass()) {
        out << "OK\n";
        return 0;
    }
    if (!rep.alignment) out << "CE not-an-alignment\n";
    if (rep.anti_exchange) {
        auto [X, x, z] = *rep.anti_exchange;
        out << "CE anti-exchange X=" << render_mask(X, fam) << " x="
            << render_mask(1u << x, fam) << " z=" << render_mask(1u << z, fam)
            << '\n';
    }
    if (rep.augmentation)
        out << "CE augmentation X=" << render_mask(*rep.augmentation, fam) << '\n';
    if (rep.cycle) {
        out << "CE cycle X=" << render_mask(rep.cycle->first, fam) << " Y=(";
        const auto& Y = rep.cycle->second;
        for (size_t i = 0; i < Y.size(); ++i) {
            if (i) out << ',';
            out << render_mask(1u << Y[i], fam);
        }
        out << ")\n";
    }
    return 1;
}

int cmd_union_closed(const FamilyInput& fam, std::ostream& out) {
    auto ce = is_union_closed(fam.sys);
    if (!ce) {
        out << "OK\n";
        return 0;
    }
    out << "CE " << render_mask(ce->first, fam) << ' '
        << render_mask(ce->second, fam) << '\n';
    return 1;
}

int cmd_enumerate(const NamedGraph& ng, std::ostream& out) {
    IntervalTable tbl = interval_table(ng.graph);
    for (const auto& ord : enumerate_at_free_orders(ng.graph, tbl))
        out << join_ids(ord) << '\n';
    return 0;
}

int cmd_verify_antimatroid(const NamedGraph& ng, std::ostream& out) {
    IntervalTable tbl = interval_table(ng.graph);
    AntimatroidReport rep = verify_antimatroid_language(ng.graph, tbl);
    if (rep.pass()) {
        out << "OK\n";
        return 0;
    }
    if (rep.missing_symbol)
        out << "CE symbol " << ng.names[*rep.missing_symbol]
            << " occurs in no word\n";
    if (!rep.repetition_free) out << "CE repeated symbol in a word\n";
    if (!rep.prefix_closed) out << "CE language not prefix-closed\n";
    if (rep.exchange) {
        out << "CE exchange t=(" << join_tokens(rep.exchange->first, ng.names)
            << ") A=" << format_set(set_of(rep.exchange->second, ng.graph.n()),
                                    &ng.names)
            << '\n';
    }
    return 1;
}

int cmd_decompose(const NamedGraph& ng, std::ostream& out) {
    ComponentTable ctbl(ng.graph);
    Decomposition d = decompose(ng.graph, ctbl);
    out << "omega " << ng.names[d.omega] << '\n';
    out << "C " << format_set(d.C, &ng.names) << '\n';
    out << "S " << format_set(d.S, &ng.names) << '\n';
    out << "Omega " << format_set(d.Omega, &ng.names) << '\n';
    return 0;
}

int cmd_canonical(const NamedGraph& ng, std::ostream& out) {
    out << join_ids(canonical_order(ng.graph)) << '\n';
    return 0;
}

int cmd_gray(const NamedGraph& ng, const std::string& mode, std::ostream& out) {
    bool full = mode == "full";
    std::vector<int> cur;
    generate_gray(ng.graph, [&](const GrayStep& step) {
        if (step.is_init()) {
            cur = step.init;
            if (full)
                out << join_ids(cur) << '\n';
            else
                out << "INIT " << join_ids(cur) << '\n';
            return;
        }
        if (full) {
            for (int i = 0; i < step.swap_count; ++i)
                std::swap(cur[step.swaps[i]], cur[step.swaps[i] + 1]);
            out << join_ids(cur) << '\n';
        } else {
            out << 'T';
            for (int i = 0; i < step.swap_count; ++i) out << ' ' << step.swaps[i];
            out << '\n';
        }
    });
    return 0;
}

int cmd_bench(const NamedGraph& ng, int warmup, std::ostream& out) {
    BenchStats st = bench_cat(ng.graph, warmup);
    out << "orders=" << st.orders << " ns_per_order=" << st.ns_per_order
        << " preprocess_ns=" << st.preprocess_ns << " total_ns=" << st.total_ns
        << " peak_mem_kb=" << st.peak_mem_kb
        << " cyclic=" << (st.cyclic ? "true" : "false") << '\n';
    return 0;
}

// --- selftest ----------------------------------------------------------

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph(n, e);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, e);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return Graph(leaves + 1, e);
}

// K_{1,3} with every edge subdivided: the smallest classic asteroidal triple
Graph spider_graph() {
    return Graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

Graph f7_graph() {
    // u=0 w=1 u'=2 y1=3 y2=4 z1=5 z2=6
    return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {1, 5}, {1, 6},
                     {5, 3}, {6, 4}});
}

// two paths sharing both endpoints through a hub; exercises the case where
// the greedy start and the recursive description part ways
Graph hard8_graph() {
    return Graph(8, {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {0, 6}, {1, 3}, {1, 5},
                     {1, 6}, {1, 7}, {2, 3}, {2, 5}, {3, 5}, {3, 6}, {5, 6},
                     {5, 7}, {6, 7}, {4, 7}});
}

int cmd_selftest(std::ostream& out) {
    std::vector<std::pair<std::string, Graph>> corpus;
    corpus.emplace_back("P3", path_graph(3));
    corpus.emplace_back("P4", path_graph(4));
    corpus.emplace_back("P5", path_graph(5));
    corpus.emplace_back("P7", path_graph(7));
    corpus.emplace_back("C4", cycle_graph(4));
    corpus.emplace_back("C5", cycle_graph(5));
    corpus.emplace_back("C6", cycle_graph(6));
    corpus.emplace_back("C7", cycle_graph(7));
    corpus.emplace_back("K1", complete_graph(1));
    corpus.emplace_back("K4", complete_graph(4));
    corpus.emplace_back("star5", star_graph(5));
    corpus.emplace_back("spider", spider_graph());
    corpus.emplace_back("F7", f7_graph());
    corpus.emplace_back("hard8", hard8_graph());
    corpus.emplace_back("2xK2", Graph(4, {{0, 1}, {2, 3}}));

    int fails = 0;
    auto report = [&](const std::string& name, const std::string& what) {
        out << "CE " << name << ' ' << what << '\n';
        ++fails;
    };

    // betweenness axiom separates AT-free from the rest in both directions
    for (const auto& [name, g] : corpus) {
        ComponentTable ctbl(g);
        bool at_free = !find_asteroidal_triple(g, ctbl).has_value();
        IntervalTable tbl(g, ctbl);
        bool axiom_clean = !check_betweenness_axiom(tbl).has_value();
        if (axiom_clean != at_free)
            report(name, "betweenness axiom disagrees with the triple search");
        if (!at_free) continue;
        if (check_betweenness_composition(tbl))
            report(name, "interval composition fails");
        if (check_betweenness_relay(g, tbl))
            report(name, "interval relay fails");
    }
    out << "betweenness sweeps done\n";

    // split rule agrees with direct validation on every permutation
    for (const auto& [name, g] : corpus) {
        int n = g.n();
        ComponentTable ctbl(g);
        if (find_asteroidal_triple(g, ctbl)) continue;
        if (is_clique(g, full_set(n))) continue;
        if (components(g, empty_set(n)).size() != 1) continue;
        Decomposition d = decompose(g, ctbl);
        IntervalTable tbl(g, ctbl);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            LinearOrder o(perm);
            if (check_order_split(g, d, o) != is_at_free_order(tbl, o)) {
                report(name, "split rule disagrees on order " + join_ids(perm));
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    out << "split agreement done\n";

    if (fails) return 1;
    out << "OK\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
    CLI::App app{"AT-free graph toolkit: betweenness, convexity, order "
                 "enumeration, Gray-code generation"};
    app.require_subcommand(1);

    std::string input = "-";
    std::vector<std::string> verts;
    std::string x_tok, y_tok;
    std::string mode = "delta";
    bool names = false, literal_sets = false;
    int cap = 16, warmup = 1;

    auto add_input = [&](CLI::App* sub, bool with_names = true) {
        sub->add_option("-i,--input", input, "input file ('-' for stdin)");
        if (with_names)
            sub->add_flag("--names", names, "echo the token<->id map first");
    };

    auto* c_check = app.add_subcommand("check", "report an asteroidal triple");
    add_input(c_check);
    auto* c_interval = app.add_subcommand("interval", "vertices between x and y");
    c_interval->add_option("x", x_tok)->required();
    c_interval->add_option("y", y_tok)->required();
    add_input(c_interval);
    auto* c_closure = app.add_subcommand("closure", "convex hull of the vertices");
    c_closure->add_option("vertices", verts);
    add_input(c_closure);
    auto* c_convex = app.add_subcommand("convex", "test the vertices for convexity");
    c_convex->add_option("vertices", verts);
    add_input(c_convex);
    auto* c_family = app.add_subcommand("family", "all convex sets, one per line");
    c_family->add_option("--cap", cap, "largest n enumerated (<= 20)");
    add_input(c_family);
    auto* c_geometry =
        app.add_subcommand("verify-geometry", "anti-exchange, augmentation "
                                              "and cycle characterizations");
    c_geometry->add_flag("--sets", literal_sets,
                         "input is a set system, not a graph");
    c_geometry->add_option("--cap", cap, "largest n enumerated (<= 20)");
    add_input(c_geometry);
    auto* c_union = app.add_subcommand("union-closed",
                                       "least convex pair whose union escapes");
    c_union->add_flag("--sets", literal_sets,
                      "input is a set system, not a graph");
    c_union->add_option("--cap", cap, "largest n enumerated (<= 20)");
    add_input(c_union);
    auto* c_enum = app.add_subcommand("enumerate",
                                      "all AT-free orders, lexicographic");
    add_input(c_enum);
    auto* c_anti = app.add_subcommand("verify-antimatroid",
                                      "Crapo axioms for the order language");
    add_input(c_anti);
    auto* c_decomp = app.add_subcommand("decompose", "omega / C / S / Omega");
    add_input(c_decomp);
    auto* c_canon = app.add_subcommand("canonical", "least AT-free order");
    add_input(c_canon);
    auto* c_gray = app.add_subcommand("gray", "stream every AT-free order");
    c_gray->add_option("--mode", mode, "'delta' (default) or 'full'")
        ->check(CLI::IsMember({"delta", "full"}));
    add_input(c_gray);
    auto* c_bench = app.add_subcommand("bench", "time the generation stream");
    c_bench->add_option("--warmup", warmup, "unmeasured passes first");
    add_input(c_bench);
    app.add_subcommand("selftest", "sweep the bundled corpus");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand("selftest")) return cmd_selftest(out);
        if (app.got_subcommand(c_geometry))
            return cmd_verify_geometry(load_family(slurp(input, in), literal_sets, cap),
                                       out);
        if (app.got_subcommand(c_union))
            return cmd_union_closed(load_family(slurp(input, in), literal_sets, cap),
                                    out);

        NamedGraph ng = parse_graph(slurp(input, in));
        if (names) echo_names(ng, out);
        if (app.got_subcommand(c_check)) return cmd_check(ng, out);
        if (app.got_subcommand(c_interval)) return cmd_interval(ng, x_tok, y_tok, out);
        if (app.got_subcommand(c_closure)) return cmd_closure(ng, verts, out);
        if (app.got_subcommand(c_convex)) return cmd_convex(ng, verts, out);
        if (app.got_subcommand(c_family)) return cmd_family(ng, cap, out);
        if (app.got_subcommand(c_enum)) return cmd_enumerate(ng, out);
        if (app.got_subcommand(c_anti)) return cmd_verify_antimatroid(ng, out);
        if (app.got_subcommand(c_decomp)) return cmd_decompose(ng, out);
        if (app.got_subcommand(c_canon)) return cmd_canonical(ng, out);
        if (app.got_subcommand(c_gray)) return cmd_gray(ng, mode, out);
        if (app.got_subcommand(c_bench)) return cmd_bench(ng, warmup, out);
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace atfree
