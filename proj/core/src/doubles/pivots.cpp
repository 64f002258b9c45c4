#include "pw/doubles/pivots.hpp"

namespace pw::doubles {

namespace {

using Vec = std::vector<Scalar>;

Vec pair_element(const DoubleAlgebra& d, const Vec& fpart, const Vec& hpart) {
    const std::size_t n = d.base.dim;
    Vec v(d.dim(), Scalar(0));
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) v[a * n + b] = d.alg.field.mul(fpart[a], hpart[b]);
    return v;
}

bool is_pivot(const DoubleAlgebra& d, const Vec& l) {
    if (!hopf::is_group_like(d.alg, l)) return false;
    Vec linv = exalg::apply(d.alg.antipode, l);
    if (d.alg.multiply(l, linv) != d.alg.unit) return false;
    Matrix s2 = hopf::antipode_squared(d.alg);
    for (std::uint32_t j = 0; j < d.dim(); ++j) {
        Vec col = d.alg.multiply(d.alg.multiply(l, d.alg.basis_vector(j)), linv);
        for (std::uint32_t t = 0; t < d.dim(); ++t)
            if (col[t] != s2.at(t, j)) return false;
    }
    return true;
}

}  // namespace

std::vector<Scalar> one_dim_double_character(const DoubleAlgebra& d, const hopf::GroupLike& gamma,
                                             const hopf::Character& chi) {
    return pair_element(d, gamma.element, chi.functional);
}

bool symmetric_test(const DoubleAlgebra& d, const std::vector<Scalar>& theta) {
    if (d.kind != Kind::drinfeld) throw DoubleError("symmetric test requires kind=drinfeld");
    const Field& f = d.alg.field;
    TensorSquare r21;
    for (const auto& [ij, c] : d.rmatrix) r21[{ij.second, ij.first}] = c;
    TensorSquare mono = tensor_square_mul(d, r21, d.rmatrix);
    Vec out(d.dim(), Scalar(0));
    for (const auto& [ij, c] : mono)
        out[ij.second] = f.add(out[ij.second], f.mul(theta[ij.first], c));
    return out == d.alg.unit;
}

std::vector<PivotalElement> pivotal_elements(const DoubleAlgebra& d, std::uint64_t max_scan) {
    if (d.kind != Kind::drinfeld) throw DoubleError("pivots live in the Drinfeld double");
    auto chars = hopf::enumerate_characters(d.base, max_scan);
    auto gls = hopf::enumerate_group_likes(d.base, max_scan);
    std::vector<PivotalElement> out;
    for (const auto& chi : chars)
        for (const auto& g : gls) {
            Vec l = pair_element(d, chi.functional, g.element);
            if (is_pivot(d, l)) out.push_back(PivotalElement{l});
        }
    return out;
}

PivotalElement kappa(const DoubleAlgebra& d, const hopf::PairInInvolution& pair) {
    if (d.kind != Kind::drinfeld) throw DoubleError("kappa targets the Drinfeld double");
    const HopfAlgebra& h = d.base;
    hopf::Character beta = kKappaExponents[0] == 1 ? pair.beta : hopf::character_inverse(h, pair.beta);
    hopf::GroupLike g = kKappaExponents[1] == 1 ? pair.g : hopf::group_like_inverse(h, pair.g);
    Vec l = pair_element(d, beta.functional, g.element);
    if (!is_pivot(d, l))
        throw NotPivotal("the pair does not map to a pivot under the fixed convention");
    return PivotalElement{l};
}

QuotientIotaReport quotient_and_iota_check(const HopfAlgebra& h, std::uint64_t max_scan) {
    QuotientIotaReport rep;
    DoubleAlgebra d = build_drinfeld_double(h);
    rep.ayd_classes = enumerate_one_dim_ayd(h, max_scan);

    auto chars = hopf::enumerate_characters(h, max_scan);
    auto gls = hopf::enumerate_group_likes(h, max_scan);
    for (const auto& g : gls)
        for (const auto& chi : chars) {
            Vec theta = one_dim_double_character(d, g, chi);
            if (hopf::is_character(d.alg, theta) && symmetric_test(d, theta))
                rep.symmetric_classes.emplace_back(g, chi);
        }

    auto related = [&](const hopf::PairInInvolution& p, const hopf::PairInInvolution& q) {
        hopf::Character dchi =
            hopf::character_convolve(h, q.beta, hopf::character_inverse(h, p.beta));
        hopf::GroupLike dg = hopf::group_like_mul(h, q.g, hopf::group_like_inverse(h, p.g));
        for (const auto& [sg, schi] : rep.symmetric_classes)
            if (sg == dg && schi == dchi) return true;
        return false;
    };

    const std::size_t k = rep.ayd_classes.size();
    rep.orbit_of.assign(k, 0);
    std::size_t next = 0;
    for (std::size_t i = 0; i < k; ++i) {
        bool placed = false;
        for (std::size_t j = 0; j < i && !placed; ++j)
            if (related(rep.ayd_classes[j], rep.ayd_classes[i])) {
                rep.orbit_of[i] = rep.orbit_of[j];
                placed = true;
            }
        if (!placed) rep.orbit_of[i] = next++;
    }
    rep.orbit_count = next;

    std::vector<PivotalElement> kappas;
    kappas.reserve(k);
    for (const auto& p : rep.ayd_classes) kappas.push_back(kappa(d, p));

    rep.kappa_constant_on_orbits = true;
    rep.iota_injective = true;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const bool same_orbit = rep.orbit_of[i] == rep.orbit_of[j];
            const bool same_pivot = kappas[i] == kappas[j];
            if (same_orbit && !same_pivot) rep.kappa_constant_on_orbits = false;
            if (!same_orbit && same_pivot) rep.iota_injective = false;
        }
    return rep;
}

}  // namespace pw::doubles
