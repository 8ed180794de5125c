#include "atfree/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace atfree {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > kMaxVertices)
        throw std::invalid_argument("vertex count exceeds cap of " +
                                    std::to_string(kMaxVertices));
    adj_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        adj_[u].set(v);
        adj_[v].set(u);
    }
    nclosed_ = adj_;
    for (int v = 0; v < n; ++v) {
        nclosed_[v].set(v);
        edge_count_ += static_cast<long>(adj_[v].count());
    }
    edge_count_ /= 2;
}

namespace {

struct Token {
    std::string text;
    int line;
};

// significant tokens with their 1-based line numbers; '#' lines and blank
// lines vanish here
std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view ln = eol == std::string_view::npos
                                  ? text.substr(pos)
                                  : text.substr(pos, eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line;
        size_t i = 0;
        auto skip_ws = [&] {
            while (i < ln.size() && std::isspace(static_cast<unsigned char>(ln[i])))
                ++i;
        };
        skip_ws();
        if (i >= ln.size() || ln[i] == '#') continue;
        while (i < ln.size()) {
            size_t j = i;
            while (j < ln.size() && !std::isspace(static_cast<unsigned char>(ln[j])))
                ++j;
            out.push_back({std::string(ln.substr(i, j - i)), line});
            i = j;
            skip_ws();
        }
    }
    return out;
}

bool parse_int(const std::string& s, long& out) {
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

NamedGraph parse_graph(std::string_view text) {
    std::vector<Token> toks = tokenize(text);
    if (toks.size() < 2) throw ParseError(1, "missing 'n m' header");
    long n, m;
    if (!parse_int(toks[0].text, n) || !parse_int(toks[1].text, m) || n < 0 || m < 0)
        throw ParseError(toks[0].line, "malformed 'n m' header");
    if (toks[0].line != toks[1].line)
        throw ParseError(toks[0].line, "malformed 'n m' header");
    if (n > kMaxVertices)
        throw ParseError(toks[0].line, "vertex count exceeds cap of " +
                                           std::to_string(kMaxVertices));
    if (static_cast<long>(toks.size()) != 2 + 2 * m) {
        int at = toks.size() > 2 ? toks.back().line : toks[1].line;
        throw ParseError(at, "expected exactly " + std::to_string(m) +
                                 " edge lines 'u v'");
    }

    // numeric reading first: every endpoint a literal id in [0,n)
    bool numeric = true;
    for (size_t i = 2; i < toks.size() && numeric; ++i) {
        long v;
        numeric = parse_int(toks[i].text, v) && 0 <= v && v < n;
    }

    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    auto resolve = [&](const Token& t) -> int {
        if (numeric) {
            long v;
            parse_int(t.text, v);
            return static_cast<int>(v);
        }
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == t.text) return static_cast<int>(i);
        if (static_cast<long>(names.size()) == n)
            throw ParseError(t.line, "more than " + std::to_string(n) +
                                         " distinct vertex names");
        names.push_back(t.text);
        return static_cast<int>(names.size() - 1);
    };
    for (long e = 0; e < m; ++e) {
        const Token& a = toks[2 + 2 * e];
        const Token& b = toks[3 + 2 * e];
        if (a.line != b.line)
            throw ParseError(a.line, "edge line must hold exactly two tokens");
        int u = resolve(a), v = resolve(b);
        if (u == v) throw ParseError(a.line, "self-loop '" + a.text + "'");
        edges.emplace_back(u, v);
    }
    if (numeric) {
        names.resize(n);
        for (long v = 0; v < n; ++v) names[v] = std::to_string(v);
    } else {
        // header may promise more vertices than the edges mention
        for (long v = static_cast<long>(names.size()); v < n; ++v)
            names.push_back(std::to_string(v));
    }
    return {Graph(static_cast<int>(n), edges), std::move(names)};
}

std::string render_graph(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u)
        for_each_in(g.neighbors(u), [&](int v) {
            if (v > u) edges.emplace_back(u, v);
        });
    std::sort(edges.begin(), edges.end());
    std::ostringstream out;
    out << g.n() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
    int n = g.n();
    std::vector<VertexSet> comps;
    VertexSet seen = removed;
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        VertexSet comp(n);
        queue.assign(1, s);
        seen.set(s);
        comp.set(s);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            VertexSet next = g.neighbors(u) - seen;
            for_each_in(next, [&](int v) {
                seen.set(v);
                comp.set(v);
                queue.push_back(v);
            });
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

ComponentTable::ComponentTable(const Graph& g) {
    int n = g.n();
    labels_.assign(n, std::vector<int>(n, -1));
    sizes_.assign(n, {});
    for (int x = 0; x < n; ++x) {
        auto comps = components(g, g.closed_neighborhood(x));
        for (size_t c = 0; c < comps.size(); ++c) {
            sizes_[x].push_back(static_cast<int>(comps[c].count()));
            for_each_in(comps[c],
                        [&](int v) { labels_[x][v] = static_cast<int>(c); });
        }
    }
}

int ComponentTable::largest_component_size(int x) const {
    int best = 0;
    for (int s : sizes_[x]) best = std::max(best, s);
    return best;
}

bool is_module(const Graph& g, const VertexSet& X) {
    VertexSet outside = ~X;
    bool ok = true;
    for_each_in(outside, [&](int v) {
        VertexSet hit = g.neighbors(v) & X;
        if (hit.any() && hit != X) ok = false;
    });
    return ok;
}

Graph induced_subgraph(const Graph& g, const VertexSet& verts,
                       std::vector<int>* back_map) {
    std::vector<int> orig;
    std::vector<int> local(g.n(), -1);
    for_each_in(verts, [&](int v) {
        local[v] = static_cast<int>(orig.size());
        orig.push_back(v);
    });
    std::vector<std::pair<int, int>> edges;
    for_each_in(verts, [&](int u) {
        for_each_in(g.neighbors(u) & verts, [&](int v) {
            if (u < v) edges.emplace_back(local[u], local[v]);
        });
    });
    if (back_map) *back_map = orig;
    return Graph(static_cast<int>(orig.size()), edges);
}

bool is_clique(const Graph& g, const VertexSet& X) {
    bool ok = true;
    for_each_in(X, [&](int u) {
        VertexSet need = X;
        need.reset(u);
        if ((need - g.neighbors(u)).any()) ok = false;
    });
    return ok;
}

std::string format_set(const VertexSet& s, const std::vector<std::string>* names) {
    std::string out = "{";
    bool first = true;
    for_each_in(s, [&](int v) {
        if (!first) out += ',';
        first = false;
        out += names ? (*names)[v] : std::to_string(v);
    });
    out += '}';
    return out;
}

}  // namespace atfree
