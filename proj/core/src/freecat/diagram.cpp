#include "pw/freecat/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace pw::freecat {

namespace {

void canonicalize(Diagram& d) {
    for (auto& s : d.strands)
        if (s.a > s.b) std::swap(s.a, s.b);
    std::sort(d.strands.begin(), d.strands.end());
}

void check_matching(const Diagram& d, const char* what) {
    std::vector<char> seen(d.n + d.m, 0);
    for (const auto& s : d.strands) {
        if (s.a >= d.n + d.m || s.b >= d.n + d.m || s.a == s.b)
            throw FreecatError(std::string(what) + ": strand endpoint out of range");
        if (seen[s.a]++ || seen[s.b]++)
            throw FreecatError(std::string(what) + ": boundary point matched twice");
    }
    for (char c : seen)
        if (!c) throw FreecatError(std::string(what) + ": unmatched boundary point");
}

}  // namespace

Diagram identity(std::uint32_t n) {
    Diagram d{n, n, {}, 0, 0};
    for (std::uint32_t i = 0; i < n; ++i) d.strands.push_back({i, n + i, 0});
    return d;
}

Diagram rho() {
    Diagram d = identity(1);
    d.strands[0].dec = 1;
    return d;
}

Diagram sigma() {
    Diagram d{2, 2, {{0, 3, 0}, {1, 2, 0}}, 0, 0};
    return d;
}

Diagram ev() { return ev_n(1); }
Diagram coev() { return coev_n(1); }

Diagram ev_n(std::uint32_t n) {
    Diagram d{2 * n, 0, {}, 0, 0};
    for (std::uint32_t i = 0; i < n; ++i) d.strands.push_back({i, 2 * n - 1 - i, 0});
    canonicalize(d);
    return d;
}

Diagram coev_n(std::uint32_t n) {
    Diagram d{0, 2 * n, {}, 0, 0};
    for (std::uint32_t i = 0; i < n; ++i) d.strands.push_back({i, 2 * n - 1 - i, 0});
    canonicalize(d);
    return d;
}

Diagram perm_diagram(const std::vector<std::uint32_t>& s) {
    const auto n = static_cast<std::uint32_t>(s.size());
    Diagram d{n, n, {}, 0, 0};
    std::vector<char> hit(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (s[i] >= n || hit[s[i]]++) throw FreecatError("perm_diagram: not a permutation");
        d.strands.push_back({i, n + s[i], 0});
    }
    canonicalize(d);
    return d;
}

Diagram decoration_diagram(const std::vector<std::uint8_t>& phi) {
    const auto n = static_cast<std::uint32_t>(phi.size());
    Diagram d = identity(n);
    for (std::uint32_t i = 0; i < n; ++i) d.strands[i].dec = phi[i] & 1u;
    return d;
}

Diagram compose(const Diagram& g, const Diagram& f) {
    if (f.m != g.n) throw WidthMismatch("compose: inner widths disagree");
    const std::uint32_t n = f.n, k = f.m, m = g.m;
    // node universe: 0..n-1 result sources, n..n+k-1 interface, n+k.. result targets
    const std::size_t total = static_cast<std::size_t>(n) + k + m;
    struct Edge {
        std::size_t u, v;
        std::uint8_t dec;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<std::size_t>> incident(total);
    auto add_edge = [&](std::size_t a, std::size_t b, std::uint8_t dec) {
        incident[a].push_back(edges.size());
        incident[b].push_back(edges.size());
        edges.push_back({a, b, dec});
    };
    for (const auto& s : f.strands) add_edge(s.a, s.b, s.dec);  // f points line up
    for (const auto& s : g.strands) {
        auto map = [&](std::uint32_t p) -> std::size_t {
            return p < g.n ? static_cast<std::size_t>(n) + p
                           : static_cast<std::size_t>(n) + k + (p - g.n);
        };
        add_edge(map(s.a), map(s.b), s.dec);
    }

    Diagram out{n, m, {}, f.plain_loops + g.plain_loops, f.decorated_loops + g.decorated_loops};
    auto is_boundary = [&](std::size_t v) { return v < n || v >= static_cast<std::size_t>(n) + k; };
    auto out_index = [&](std::size_t v) -> std::uint32_t {
        return v < n ? static_cast<std::uint32_t>(v) : static_cast<std::uint32_t>(v - k);
    };
    // walk from node `v` along edge `e`, returning the far endpoint and the
    // accumulated decoration parity; stops at a boundary node or back at start
    std::vector<char> edge_used(edges.size(), 0);
    auto walk = [&](std::size_t start, std::size_t first_edge, std::size_t& end,
                    std::uint8_t& dec) {
        std::size_t cur = start, eid = first_edge;
        dec = 0;
        for (;;) {
            edge_used[eid] = 1;
            dec ^= edges[eid].dec;
            cur = edges[eid].u == cur ? edges[eid].v : edges[eid].u;
            if (is_boundary(cur) || cur == start) break;
            // interface nodes carry exactly two incident edges
            eid = incident[cur][0] == eid ? incident[cur][1] : incident[cur][0];
        }
        end = cur;
    };
    // open paths from each boundary point, then leftover closed loops
    for (std::size_t v = 0; v < total; ++v) {
        if (!is_boundary(v) || edge_used[incident[v][0]]) continue;
        std::size_t end;
        std::uint8_t dec;
        walk(v, incident[v][0], end, dec);
        out.strands.push_back({out_index(v), out_index(end), static_cast<std::uint8_t>(dec & 1)});
    }
    for (std::size_t eid = 0; eid < edges.size(); ++eid) {
        if (edge_used[eid]) continue;
        std::size_t end;
        std::uint8_t dec;
        walk(edges[eid].u, eid, end, dec);
        if (dec & 1)
            ++out.decorated_loops;
        else
            ++out.plain_loops;
    }
    canonicalize(out);
    return out;
}

Diagram tensor(const Diagram& f, const Diagram& g) {
    Diagram out{f.n + g.n, f.m + g.m, {}, f.plain_loops + g.plain_loops,
                f.decorated_loops + g.decorated_loops};
    auto map_f = [&](std::uint32_t p) -> std::uint32_t {
        return p < f.n ? p : p + g.n;  // f target j -> (f.n+g.n) + j
    };
    auto map_g = [&](std::uint32_t p) -> std::uint32_t {
        return p < g.n ? f.n + p : f.n + f.m + p;  // g target j -> out.n + f.m + j
    };
    for (const auto& s : f.strands) out.strands.push_back({map_f(s.a), map_f(s.b), s.dec});
    for (const auto& s : g.strands) out.strands.push_back({map_g(s.a), map_g(s.b), s.dec});
    canonicalize(out);
    return out;
}

Diagram dual(const Diagram& f) {
    Diagram out{f.m, f.n, {}, f.plain_loops, f.decorated_loops};
    auto map = [&](std::uint32_t p) -> std::uint32_t {
        // source i -> dual target (n-1-i); target j -> dual source (m-1-j)
        return p < f.n ? f.m + (f.n - 1 - p) : f.m - 1 - (p - f.n);
    };
    for (const auto& s : f.strands) out.strands.push_back({map(s.a), map(s.b), s.dec});
    canonicalize(out);
    return out;
}

Automorphism decompose_automorphism(const Diagram& f) {
    if (f.n != f.m) throw NotAutomorphism("source and target widths differ");
    if (f.plain_loops != 0 || f.decorated_loops != 0)
        throw NotAutomorphism("automorphisms carry no loops");
    Automorphism a;
    a.s.assign(f.n, 0);
    a.phi.assign(f.n, 0);
    for (const auto& s : f.strands) {
        if (s.a >= f.n || s.b < f.n) throw NotAutomorphism("diagram contains a cup or cap");
        a.s[s.a] = s.b - f.n;
        a.phi[s.a] = s.dec;
    }
    return a;
}

Diagram automorphism_diagram(const Automorphism& a) {
    const auto n = static_cast<std::uint32_t>(a.s.size());
    if (a.phi.size() != a.s.size()) throw FreecatError("automorphism data sizes disagree");
    Diagram d{n, n, {}, 0, 0};
    std::vector<char> hit(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (a.s[i] >= n || hit[a.s[i]]++) throw FreecatError("not a permutation");
        d.strands.push_back({i, n + a.s[i], static_cast<std::uint8_t>(a.phi[i] & 1u)});
    }
    canonicalize(d);
    return d;
}

Diagram inverse_automorphism(const Diagram& f) {
    Automorphism a = decompose_automorphism(f);
    const std::size_t n = a.s.size();
    Automorphism inv;
    inv.s.assign(n, 0);
    inv.phi.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) inv.s[a.s[i]] = static_cast<std::uint32_t>(i);
    // (f_s f_phi)^{-1} = f_{s^{-1}} f_{phi o s^{-1}}
    for (std::size_t i = 0; i < n; ++i) inv.phi[i] = a.phi[inv.s[i]];
    return automorphism_diagram(inv);
}

std::vector<Diagram> all_automorphisms(std::uint32_t n) {
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<Diagram> out;
    do {
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            Automorphism a;
            a.s = perm;
            a.phi.resize(n);
            for (std::uint32_t i = 0; i < n; ++i) a.phi[i] = (bits >> i) & 1u;
            out.push_back(automorphism_diagram(a));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::string to_text(const Diagram& d) {
    std::ostringstream os;
    os << d.n << ">" << d.m;
    for (const auto& s : d.strands)
        os << " (" << s.a << "-" << s.b << ")[" << static_cast<int>(s.dec) << "]";
    os << " L=(" << d.plain_loops << "," << d.decorated_loops << ")";
    return os.str();
}

namespace {

std::uint64_t parse_num(const std::string& text, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw TextParseError("expected a number at position " + std::to_string(pos));
    std::uint64_t value = 0;
    auto [p, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc() || p != text.data() + pos) throw TextParseError("bad number literal");
    return value;
}

void expect(const std::string& text, std::size_t& pos, char c) {
    if (pos >= text.size() || text[pos] != c)
        throw TextParseError(std::string("expected '") + c + "' at position " + std::to_string(pos));
    ++pos;
}

void skip_spaces(const std::string& text, std::size_t& pos) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
}

}  // namespace

Diagram from_text(const std::string& text) {
    std::size_t pos = 0;
    skip_spaces(text, pos);
    Diagram d;
    d.n = static_cast<std::uint32_t>(parse_num(text, pos));
    expect(text, pos, '>');
    d.m = static_cast<std::uint32_t>(parse_num(text, pos));
    skip_spaces(text, pos);
    while (pos < text.size() && text[pos] == '(') {
        Strand s;
        expect(text, pos, '(');
        s.a = static_cast<std::uint32_t>(parse_num(text, pos));
        expect(text, pos, '-');
        s.b = static_cast<std::uint32_t>(parse_num(text, pos));
        expect(text, pos, ')');
        expect(text, pos, '[');
        s.dec = static_cast<std::uint8_t>(parse_num(text, pos) & 1u);
        expect(text, pos, ']');
        d.strands.push_back(s);
        skip_spaces(text, pos);
    }
    expect(text, pos, 'L');
    expect(text, pos, '=');
    expect(text, pos, '(');
    d.plain_loops = parse_num(text, pos);
    expect(text, pos, ',');
    d.decorated_loops = parse_num(text, pos);
    expect(text, pos, ')');
    skip_spaces(text, pos);
    if (pos != text.size()) throw TextParseError("trailing characters after loop suffix");
    for (auto& s : d.strands)
        if (s.a > s.b) std::swap(s.a, s.b);
    std::sort(d.strands.begin(), d.strands.end());
    check_matching(d, "from_text");
    return d;
}

std::vector<std::pair<std::string, bool>> relation_checks() {
    const Diagram id1 = identity(1), id2 = identity(2);
    const Diagram r = rho(), sg = sigma(), e = ev(), c = coev();
    std::vector<std::pair<std::string, bool>> out;
    out.emplace_back("rho^2 = id", compose(r, r) == id1);
    out.emplace_back("sigma^2 = id", compose(sg, sg) == id2);
    out.emplace_back("left snake: (ev (x) id)(id (x) coev) = id",
                     compose(tensor(e, id1), tensor(id1, c)) == id1);
    out.emplace_back("right snake: (id (x) ev)(coev (x) id) = id",
                     compose(tensor(id1, e), tensor(c, id1)) == id1);
    out.emplace_back("dual(rho) = rho", dual(r) == r);
    out.emplace_back("dual(sigma) = sigma", dual(sg) == sg);
    out.emplace_back("dual(ev) = coev", dual(e) == c);
    out.emplace_back("dual(coev) = ev", dual(c) == e);
    out.emplace_back("rho self-dual under ev: ev(rho (x) id) = ev(id (x) rho)",
                     compose(e, tensor(r, id1)) == compose(e, tensor(id1, r)));
    out.emplace_back("rho natural against sigma: sigma(rho (x) id) = (id (x) rho)sigma",
                     compose(sg, tensor(r, id1)) == compose(tensor(id1, r), sg));
    out.emplace_back("rho natural against coev: (rho (x) id)coev = (id (x) rho)coev",
                     compose(tensor(r, id1), c) == compose(tensor(id1, r), c));
    out.emplace_back("sigma fixes coev: sigma coev = coev", compose(sg, c) == c);
    out.emplace_back("sigma fixes ev: ev sigma = ev", compose(e, sg) == e);
    return out;
}

}  // namespace pw::freecat
