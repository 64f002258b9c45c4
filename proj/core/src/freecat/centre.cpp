#include "pw/freecat/centre.hpp"

#include <algorithm>
#include <numeric>

namespace pw::freecat {

namespace {

// sigma_{X^n, X}: strand i runs to i+1, strand n wraps to 0.
Diagram sigma_yx(std::uint32_t n) {
    std::vector<std::uint32_t> s(n + 1);
    for (std::uint32_t i = 0; i < n; ++i) s[i] = i + 1;
    s[n] = 0;
    return perm_diagram(s);
}

Diagram base_component(const CentreObject& c) {
    // chi_{Y,X} = sigma_{Y,X} (f_s f_phi (x) rho^j)
    Diagram f = automorphism_diagram(Automorphism{c.hb.s, c.hb.phi});
    Diagram last = c.hb.j ? rho() : identity(1);
    return compose(sigma_yx(c.n), tensor(f, last));
}

}  // namespace

bool is_valid_param(const HalfBraidingParam& p) {
    if (p.s.size() != p.n || p.phi.size() != p.n) return false;
    std::vector<char> hit(p.n, 0);
    for (std::uint32_t i = 0; i < p.n; ++i) {
        if (p.s[i] >= p.n || hit[p.s[i]]++) return false;
    }
    for (std::uint32_t i = 0; i < p.n; ++i) {
        if (p.s[p.s[i]] != i) return false;
        if ((p.phi[p.s[i]] & 1) != (p.phi[i] & 1)) return false;
    }
    return (p.j & ~1u) == 0;
}

CentreObject make_centre_object(HalfBraidingParam p) {
    if (!is_valid_param(p)) throw NotInParameterFamily("invalid half-braiding parameters");
    return CentreObject{p.n, std::move(p)};
}

std::vector<CentreObject> enumerate_half_braidings(std::uint32_t n) {
    std::vector<CentreObject> out;
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<std::vector<std::uint32_t>> involutions;
    do {
        bool inv = true;
        for (std::uint32_t i = 0; i < n && inv; ++i)
            if (perm[perm[i]] != i) inv = false;
        if (inv) involutions.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& s : involutions)
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            std::vector<std::uint8_t> phi(n);
            for (std::uint32_t i = 0; i < n; ++i) phi[i] = (bits >> i) & 1u;
            bool invariant = true;
            for (std::uint32_t i = 0; i < n && invariant; ++i)
                if (phi[s[i]] != phi[i]) invariant = false;
            if (!invariant) continue;
            for (std::uint8_t j = 0; j < 2; ++j)
                out.push_back(CentreObject{n, HalfBraidingParam{n, s, phi, j}});
        }
    return out;
}

Diagram hb_component(const CentreObject& c, std::uint32_t k) {
    if (k == 0) return identity(c.n);
    Diagram chi = base_component(c);
    Diagram acc = chi;
    for (std::uint32_t t = 2; t <= k; ++t)
        acc = compose(tensor(identity(1), acc), tensor(chi, identity(t - 1)));
    return acc;
}

namespace {

// Extracts (s, phi, j) from a diagram equal to sigma_{X^N,X} (f (x) rho^j).
HalfBraidingParam extract_param(std::uint32_t N, const Diagram& d) {
    std::vector<std::uint32_t> sinv(N + 1);
    sinv[0] = N;
    for (std::uint32_t i = 1; i <= N; ++i) sinv[i] = i - 1;
    Diagram unbraided = compose(perm_diagram(sinv), d);
    Automorphism a;
    try {
        a = decompose_automorphism(unbraided);
    } catch (const NotAutomorphism&) {
        throw NotInParameterFamily("computed half-braiding is not an automorphism");
    }
    if (a.s[N] != N)
        throw NotInParameterFamily("computed half-braiding mixes the acting strand");
    HalfBraidingParam p{N, std::vector<std::uint32_t>(a.s.begin(), a.s.begin() + N),
                        std::vector<std::uint8_t>(a.phi.begin(), a.phi.begin() + N), a.phi[N]};
    if (!is_valid_param(p))
        throw NotInParameterFamily("computed half-braiding leaves the parameter family");
    return p;
}

}  // namespace

CentreObject centre_tensor(const CentreObject& c1, const CentreObject& c2) {
    const std::uint32_t N = c1.n + c2.n;
    Diagram chi = compose(tensor(hb_component(c1, 1), identity(c2.n)),
                          tensor(identity(c1.n), hb_component(c2, 1)));
    return CentreObject{N, extract_param(N, chi)};
}

CentreObject centre_dual(const CentreObject& c) {
    const std::uint32_t n = c.n;
    Diagram chi_inv = inverse_automorphism(hb_component(c, 1));  // X (x) Y -> Y (x) X
    Diagram step1 = tensor(identity(n + 1), coev_n(n));
    Diagram step2 = tensor(identity(n), tensor(chi_inv, identity(n)));
    Diagram step3 = tensor(ev_n(n), identity(n + 1));
    Diagram chi = compose(step3, compose(step2, step1));
    return CentreObject{n, extract_param(n, chi)};
}

bool is_centre_morphism(const Diagram& h, const CentreObject& c1, const CentreObject& c2) {
    if (h.n != c1.n || h.m != c2.n) throw WidthMismatch("morphism widths do not match objects");
    Diagram lhs = compose(hb_component(c2, 1), tensor(h, identity(1)));
    Diagram rhs = compose(tensor(identity(1), h), hb_component(c1, 1));
    return lhs == rhs;
}

LiftReport lift_check(const Diagram& g, const CentreObject& c1, const CentreObject& c2) {
    if (g.n != g.m) throw NotAutomorphism("lift_check expects an automorphism");
    Automorphism a = decompose_automorphism(g);  // throws NotAutomorphism
    if (g.n != c1.n || g.n != c2.n) throw WidthMismatch("automorphism width mismatch");
    LiftReport rep;
    rep.engine = is_centre_morphism(g, c1, c2);

    // Closed form: with chi_{c2} = sigma(f_s f_phi (x) rho^j) on the target
    // and chi_{c1} = sigma(f_t f_psi (x) rho^k) on the source, g = g_r
    // g_lambda lifts iff s r = r t, j = k and, reading the decoration
    // identity additively in Z2, phi_i + lambda_{s r (i)} = psi_{r(i)} +
    // lambda_{r(i)} for all i.
    const auto& s = c2.hb.s;
    const auto& phi = c2.hb.phi;
    const auto& t = c1.hb.s;
    const auto& psi = c1.hb.phi;
    const auto& r = a.s;
    const auto& lambda = a.phi;
    bool ok = c1.hb.j == c2.hb.j;
    for (std::uint32_t i = 0; i < g.n && ok; ++i)
        if (s[r[i]] != r[t[i]]) ok = false;
    for (std::uint32_t i = 0; i < g.n && ok; ++i)
        if (((phi[i] + lambda[s[r[i]]]) & 1) != ((psi[r[i]] + lambda[r[i]]) & 1)) ok = false;
    rep.formula = ok;
    return rep;
}

}  // namespace pw::freecat
