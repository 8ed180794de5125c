#include "atfree/convexity.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <unordered_set>

namespace atfree {

bool is_convex(const IntervalTable& tbl, const VertexSet& X) {
    for (auto x = X.find_first(); x != VertexSet::npos; x = X.find_next(x))
        for (auto y = X.find_next(x); y != VertexSet::npos; y = X.find_next(y))
            if (!tbl.row(static_cast<int>(x), static_cast<int>(y)).is_subset_of(X))
                return false;
    return true;
}

VertexSet closure(const IntervalTable& tbl, const VertexSet& U) {
    VertexSet cur = U;
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto x = cur.find_first(); x != VertexSet::npos; x = cur.find_next(x))
            for (auto y = cur.find_next(x); y != VertexSet::npos;
                 y = cur.find_next(y)) {
                const VertexSet& row =
                    tbl.row(static_cast<int>(x), static_cast<int>(y));
                if (!row.is_subset_of(cur)) {
                    cur |= row;
                    grew = true;
                }
            }
    }
    return cur;
}

ConvexFamily enumerate_convex_sets(const Graph& g, const IntervalTable& tbl, int cap) {
    if (cap > kMaxUniverse) throw std::invalid_argument("cap exceeds 20");
    int n = g.n();
    if (n > cap)
        throw std::invalid_argument("graph too large for family enumeration (n > " +
                                    std::to_string(cap) + ")");
    // flatten interval rows to masks once; the 2^n scan is then pure bit work
    std::vector<std::uint32_t> row(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) row[x * n + y] = mask_of(tbl.row(x, y));
    ConvexFamily fam;
    fam.universe = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (std::uint32_t xs = mask; ok && xs; xs &= xs - 1) {
            int x = std::countr_zero(xs);
            for (std::uint32_t ys = xs & (xs - 1); ys; ys &= ys - 1) {
                int y = std::countr_zero(ys);
                if (row[x * n + y] & ~mask) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) fam.family.push_back(mask);
    }
    return fam;
}

namespace {

std::uint32_t universe_mask(const SetSystem& s) {
    return s.universe == 32 ? ~0u : (1u << s.universe) - 1;
}

// hull without the alignment re-check, for use inside sweeps
std::uint32_t sigma_in(const SetSystem& s, std::uint32_t U) {
    std::uint32_t acc = universe_mask(s);
    for (std::uint32_t J : s.family)
        if ((J & U) == U) acc &= J;
    return acc;
}

SetSystem normalized(const SetSystem& s) {
    SetSystem t = s;
    std::sort(t.family.begin(), t.family.end());
    t.family.erase(std::unique(t.family.begin(), t.family.end()), t.family.end());
    return t;
}

}  // namespace

bool is_alignment(const SetSystem& s) {
    if (s.universe < 0 || s.universe > kMaxUniverse) return false;
    std::unordered_set<std::uint32_t> members(s.family.begin(), s.family.end());
    if (!members.count(0) || !members.count(universe_mask(s))) return false;
    for (size_t i = 0; i < s.family.size(); ++i)
        for (size_t j = i + 1; j < s.family.size(); ++j)
            if (!members.count(s.family[i] & s.family[j])) return false;
    return true;
}

std::uint32_t sigma_abstract(const SetSystem& s, std::uint32_t U) {
    if (!is_alignment(s)) throw std::invalid_argument("set system is not an alignment");
    if (U & ~universe_mask(s)) throw std::invalid_argument("subset outside universe");
    return sigma_in(s, U);
}

bool is_extreme(const SetSystem& s, std::uint32_t C, int y) {
    if (std::find(s.family.begin(), s.family.end(), C) == s.family.end())
        throw std::invalid_argument("C is not a family member");
    if (y < 0 || y >= s.universe || (C >> y & 1))
        throw std::invalid_argument("y must lie outside C");
    std::uint32_t hull = sigma_in(s, C | (1u << y));
    std::uint32_t probe = hull & ~(1u << y);
    return std::find(s.family.begin(), s.family.end(), probe) != s.family.end();
}

bool induces_cycle(const SetSystem& s, const std::vector<int>& Y, std::uint32_t X) {
    if (Y.size() < 2) throw std::invalid_argument("cycle needs at least two elements");
    std::uint32_t seen = 0;
    for (int y : Y) {
        if (y < 0 || y >= s.universe) throw std::invalid_argument("element outside universe");
        if (seen >> y & 1) throw std::invalid_argument("cycle elements must be distinct");
        seen |= 1u << y;
    }
    for (size_t i = 0; i < Y.size(); ++i) {
        int from = Y[i];
        int to = Y[(i + 1) % Y.size()];
        if (!(sigma_in(s, X | (1u << from)) >> to & 1)) return false;
    }
    return true;
}

GeometryReport verify_convex_geometry(const SetSystem& input) {
    if (input.universe > kMaxUniverse)
        throw std::invalid_argument("universe exceeds 20");
    SetSystem s = normalized(input);
    GeometryReport r;
    r.alignment = is_alignment(s);
    if (!r.alignment) return r;

    std::unordered_set<std::uint32_t> members(s.family.begin(), s.family.end());
    std::uint32_t full = universe_mask(s);
    int n = s.universe;
    std::vector<std::uint32_t> sig(n);  // sig[y] = sigma(X + y) for current X

    for (std::uint32_t X : s.family) {
        std::uint32_t outside = full & ~X;
        for (std::uint32_t ys = outside; ys; ys &= ys - 1)
            sig[std::countr_zero(ys)] = full;
        for (std::uint32_t J : s.family) {
            if ((J & X) != X) continue;
            for (std::uint32_t ys = J & outside; ys; ys &= ys - 1)
                sig[std::countr_zero(ys)] &= J;
        }

        if (!r.anti_exchange)
            for (std::uint32_t xs = outside; xs && !r.anti_exchange; xs &= xs - 1) {
                int x = std::countr_zero(xs);
                for (std::uint32_t zs = xs & (xs - 1); zs; zs &= zs - 1) {
                    int z = std::countr_zero(zs);
                    if ((sig[x] >> z & 1) && (sig[z] >> x & 1)) {
                        r.anti_exchange = {X, static_cast<std::uint32_t>(x),
                                           static_cast<std::uint32_t>(z)};
                        break;
                    }
                }
            }

        if (!r.augmentation && X != full) {
            bool extendable = false;
            for (std::uint32_t ys = outside; ys && !extendable; ys &= ys - 1)
                extendable = members.count(X | (ys & -ys)) > 0;
            if (!extendable) r.augmentation = X;
        }

        if (!r.cycle) {
            // elements of X never participate: sigma(X+y) collapses to X there
            for (std::uint32_t as = outside; as && !r.cycle; as &= as - 1) {
                int a = std::countr_zero(as);
                for (std::uint32_t bs = as & (as - 1); bs && !r.cycle; bs &= bs - 1) {
                    int b = std::countr_zero(bs);
                    if ((sig[a] >> b & 1) && (sig[b] >> a & 1))
                        r.cycle = {X, std::vector<int>{a, b}};
                }
            }
            // rotations fixed by the least first element; both orientations
            for (std::uint32_t as = outside; as && !r.cycle; as &= as - 1) {
                int a = std::countr_zero(as);
                std::uint32_t rest = outside & ~((as & -as) | ((as & -as) - 1));
                for (std::uint32_t bs = rest; bs && !r.cycle; bs &= bs - 1) {
                    int b = std::countr_zero(bs);
                    for (std::uint32_t cs = rest & ~(bs & -bs); cs; cs &= cs - 1) {
                        int c = std::countr_zero(cs);
                        if ((sig[a] >> b & 1) && (sig[b] >> c & 1) &&
                            (sig[c] >> a & 1)) {
                            r.cycle = {X, std::vector<int>{a, b, c}};
                            break;
                        }
                    }
                }
            }
        }
    }
    return r;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> is_union_closed(
    const SetSystem& input) {
    SetSystem s = normalized(input);
    std::unordered_set<std::uint32_t> members(s.family.begin(), s.family.end());
    for (size_t i = 0; i < s.family.size(); ++i)
        for (size_t j = i + 1; j < s.family.size(); ++j)
            if (!members.count(s.family[i] | s.family[j]))
                return std::make_pair(s.family[i], s.family[j]);
    return std::nullopt;
}

SetSystem parse_set_system(std::string_view text) {
    SetSystem s;
    int line_no = 0;
    long expect = -1;
    size_t pos = 0;
    auto fail = [&](const std::string& msg) { throw ParseError(line_no, msg); };
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        std::string ln(eol == std::string_view::npos ? text.substr(pos)
                                                     : text.substr(pos, eol - pos));
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;
        std::istringstream iss(ln);
        std::string tok;
        std::vector<std::string> toks;
        while (iss >> tok) toks.push_back(tok);
        if (toks.empty() || toks[0][0] == '#') continue;
        auto as_int = [&](const std::string& t) -> long {
            long v;
            auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (ec != std::errc() || p != t.data() + t.size()) fail("bad integer '" + t + "'");
            return v;
        };
        if (expect < 0) {
            if (toks.size() != 2) fail("expected '|E| k' header");
            long u = as_int(toks[0]);
            expect = as_int(toks[1]);
            if (u < 0 || u > kMaxUniverse) fail("universe size outside 0..20");
            if (expect < 0) fail("negative member count");
            s.universe = static_cast<int>(u);
            continue;
        }
        if (static_cast<long>(s.family.size()) == expect) fail("more subsets than promised");
        std::uint32_t mask = 0;
        if (!(toks.size() == 1 && toks[0] == "-")) {
            for (const std::string& t : toks) {
                long v = as_int(t);
                if (v < 0 || v >= s.universe) fail("element out of range");
                mask |= 1u << v;
            }
        }
        s.family.push_back(mask);
    }
    ++line_no;
    if (expect < 0) throw ParseError(1, "missing '|E| k' header");
    if (static_cast<long>(s.family.size()) != expect)
        throw ParseError(line_no, "fewer subsets than promised");
    return normalized(s);
}

std::string render_set_system(const SetSystem& s) {
    std::ostringstream out;
    out << s.universe << ' ' << s.family.size() << '\n';
    for (std::uint32_t m : s.family) {
        if (!m) {
            out << "-\n";
            continue;
        }
        bool first = true;
        for (std::uint32_t bits = m; bits; bits &= bits - 1) {
            out << (first ? "" : " ") << std::countr_zero(bits);
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

std::uint32_t mask_of(const VertexSet& s) {
    std::uint32_t m = 0;
    for_each_in(s, [&](int v) {
        if (v >= 32) throw std::invalid_argument("set too wide for a mask");
        m |= 1u << v;
    });
    return m;
}

VertexSet set_of(std::uint32_t mask, int n) {
    VertexSet s(n);
    for (std::uint32_t bits = mask; bits; bits &= bits - 1)
        s.set(std::countr_zero(bits));
    return s;
}

}  // namespace atfree
