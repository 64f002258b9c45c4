#include "pw/doubles/modules.hpp"

namespace pw::doubles {

namespace {

using Vec = std::vector<Scalar>;

// delta(m_j) as a dense element of H (x) M, index k*mdim + l.
Vec coaction_of(const HopfAlgebra& h, const YDModule& m, std::uint32_t j) {
    Vec v(h.dim * m.dim, Scalar(0));
    for (const auto& e : m.coaction.fiber(j)) v[e.j * m.dim + e.k] = e.c;
    return v;
}

}  // namespace

YDModule one_dim_module(const HopfAlgebra& h, const hopf::Character& beta,
                        const hopf::GroupLike& g, Flavor flavor) {
    Tensor3 action(h.field, h.dim, 1, 1), coaction(h.field, 1, h.dim, 1);
    for (std::uint32_t i = 0; i < h.dim; ++i) {
        action.add(i, 0, 0, beta.functional[i]);
        coaction.add(0, i, 0, g.element[i]);
    }
    return YDModule{1, std::move(action), std::move(coaction), flavor};
}

CompatReport yd_compat_check(const HopfAlgebra& h, const YDModule& m) {
    CompatReport rep;
    const Field& f = h.field;
    const std::size_t n = h.dim;
    const std::size_t md = m.dim;

    auto act = [&](std::uint32_t i, const Vec& v) {
        Vec out(md, Scalar(0));
        for (std::uint32_t j = 0; j < md; ++j) {
            if (v[j] == 0) continue;
            for (const auto& [k, c] : m.action.slice(i, j))
                out[k] = f.add(out[k], f.mul(v[j], c));
        }
        return out;
    };
    auto act_elt = [&](const Vec& x, const Vec& v) {
        Vec out(md, Scalar(0));
        for (std::uint32_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            Vec t = act(i, v);
            for (std::uint32_t k = 0; k < md; ++k) out[k] = f.add(out[k], f.mul(x[i], t[k]));
        }
        return out;
    };
    auto basis = [&](std::uint32_t j) {
        Vec v(md, Scalar(0));
        v[j] = Scalar(1);
        return v;
    };

    {  // module axioms
        rep.module_axioms = true;
        for (std::uint32_t j = 0; j < md && rep.module_axioms; ++j)
            if (act_elt(h.unit, basis(j)) != basis(j)) {
                rep.module_axioms = false;
                rep.witness = {j};
            }
        for (std::uint32_t i = 0; i < n && rep.module_axioms; ++i)
            for (std::uint32_t i2 = 0; i2 < n && rep.module_axioms; ++i2) {
                Vec prod(n, Scalar(0));
                for (const auto& [k, c] : h.mult.slice(i, i2)) prod[k] = c;
                for (std::uint32_t j = 0; j < md; ++j)
                    if (act_elt(prod, basis(j)) != act(i, act(i2, basis(j)))) {
                        rep.module_axioms = false;
                        rep.witness = {i, i2, j};
                        break;
                    }
            }
    }
    {  // comodule axioms: coassociativity and counitality of the coaction
        rep.comodule_axioms = true;
        for (std::uint32_t j = 0; j < md && rep.comodule_axioms; ++j) {
            // (Delta (x) id) delta vs (id (x) delta) delta, dense on H(x)H(x)M
            std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, Scalar> l, r;
            for (const auto& e : m.coaction.fiber(j)) {
                for (const auto& e2 : h.comult.fiber(e.j)) {
                    auto key = std::make_tuple(e2.j, e2.k, e.k);
                    l[key] = f.add(l.count(key) ? l[key] : Scalar(0), f.mul(e.c, e2.c));
                }
                for (const auto& e2 : m.coaction.fiber(e.k)) {
                    auto key = std::make_tuple(e.j, e2.j, e2.k);
                    r[key] = f.add(r.count(key) ? r[key] : Scalar(0), f.mul(e.c, e2.c));
                }
            }
            std::erase_if(l, [](const auto& kv) { return kv.second == 0; });
            std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
            Vec counit_leg(md, Scalar(0));
            for (const auto& e : m.coaction.fiber(j))
                counit_leg[e.k] = f.add(counit_leg[e.k], f.mul(e.c, h.counit[e.j]));
            if (l != r || counit_leg != basis(j)) {
                rep.comodule_axioms = false;
                rep.witness = {j};
            }
        }
    }
    {  // compatibility: delta(e_i . m_j) = e_i3 m_-1 P(e_i1) (x) e_i2 . m_0,
        // with P = S^{-1} for yd and its shift P = S^{-3} for ayd
        auto inv = exalg::invert(h.antipode);
        if (!inv) throw DoubleError("antipode not invertible");
        Matrix twist = *inv;
        if (m.flavor == Flavor::ayd) twist = exalg::mat_mul(twist, exalg::mat_mul(*inv, *inv));
        const Matrix* P = &twist;
        auto d2 = h.iterated_comult();
        rep.compatible = true;
        for (std::uint32_t i = 0; i < n && rep.compatible; ++i)
            for (std::uint32_t j = 0; j < md; ++j) {
                Vec lhs(n * md, Scalar(0));
                for (const auto& [k, c] : m.action.slice(i, j)) {
                    Vec d = coaction_of(h, m, k);
                    for (std::size_t t = 0; t < n * md; ++t)
                        lhs[t] = f.add(lhs[t], f.mul(c, d[t]));
                }
                Vec rhs(n * md, Scalar(0));
                for (const auto& [i1, i2, i3, ci] : d2[i])
                    for (const auto& e : m.coaction.fiber(j)) {
                        // H leg: e_{i3} e_{e.j} P(e_{i1}); M leg: e_{i2} . m_{e.k}
                        Vec hleg = h.multiply(h.basis_vector(i3), h.basis_vector(e.j));
                        Vec pcol(n);
                        for (std::size_t t = 0; t < n; ++t) pcol[t] = P->at(t, i1);
                        hleg = h.multiply(hleg, pcol);
                        Vec mleg = act(i2, basis(e.k));
                        Scalar c0 = f.mul(ci, e.c);
                        for (std::uint32_t u = 0; u < n; ++u) {
                            if (hleg[u] == 0) continue;
                            for (std::uint32_t v = 0; v < md; ++v)
                                rhs[u * md + v] =
                                    f.add(rhs[u * md + v], f.mul(c0, f.mul(hleg[u], mleg[v])));
                        }
                    }
                if (lhs != rhs) {
                    rep.compatible = false;
                    rep.witness = {i, j};
                    break;
                }
            }
    }
    return rep;
}

bool module_correspondence_check(const DoubleAlgebra& d, const YDModule& m) {
    if ((d.kind == Kind::drinfeld) != (m.flavor == Flavor::yd))
        throw ConventionMismatch("module flavor does not match the double's kind");
    const HopfAlgebra& h = d.base;
    if (m.action.dim1() != h.dim) throw ConventionMismatch("module is over a different algebra");
    const Field& f = h.field;
    const std::size_t n = h.dim;
    const std::size_t md = m.dim;
    const std::size_t N = d.dim();

    // induced action of e^a (x) e_b on m_j: sum_k act(b,j,k) coact(k,a,l) m_l
    Tensor3 dact(f, N, md, md);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t j = 0; j < md; ++j)
                for (const auto& [k, c] : m.action.slice(b, j))
                    for (const auto& e : m.coaction.fiber(k)) {
                        if (e.j != a) continue;
                        dact.add(d.index(a, b), j, e.k, f.mul(c, e.c));
                    }

    auto act = [&](std::uint32_t i, std::uint32_t j) {
        std::vector<Scalar> out(md, Scalar(0));
        for (const auto& [k, c] : dact.slice(i, j)) out[k] = c;
        return out;
    };
    auto act_vec = [&](std::uint32_t i, const std::vector<Scalar>& v) {
        std::vector<Scalar> out(md, Scalar(0));
        for (std::uint32_t j = 0; j < md; ++j) {
            if (v[j] == 0) continue;
            for (const auto& [k, c] : dact.slice(i, j)) out[k] = f.add(out[k], f.mul(v[j], c));
        }
        return out;
    };

    for (std::uint32_t j = 0; j < md; ++j) {
        std::vector<Scalar> u(md, Scalar(0));
        for (std::uint32_t i = 0; i < N; ++i) {
            if (d.alg.unit[i] == 0) continue;
            auto t = act(i, j);
            for (std::uint32_t k = 0; k < md; ++k) u[k] = f.add(u[k], f.mul(d.alg.unit[i], t[k]));
        }
        std::vector<Scalar> ej(md, Scalar(0));
        ej[j] = Scalar(1);
        if (u != ej) return false;
    }
    for (std::uint32_t x = 0; x < N; ++x)
        for (std::uint32_t y = 0; y < N; ++y)
            for (std::uint32_t j = 0; j < md; ++j) {
                std::vector<Scalar> lhs(md, Scalar(0));
                for (const auto& [z, c] : d.alg.mult.slice(x, y)) {
                    auto t = act(z, j);
                    for (std::uint32_t k = 0; k < md; ++k) lhs[k] = f.add(lhs[k], f.mul(c, t[k]));
                }
                if (lhs != act_vec(x, act(y, j))) return false;
            }
    return true;
}

std::vector<hopf::PairInInvolution> enumerate_one_dim_ayd(const HopfAlgebra& h,
                                                          std::uint64_t max_scan) {
    auto chars = hopf::enumerate_characters(h, max_scan);
    auto gls = hopf::enumerate_group_likes(h, max_scan);
    std::vector<hopf::PairInInvolution> out;
    for (const auto& beta : chars)
        for (const auto& g : gls) {
            YDModule m = one_dim_module(h, beta, g, Flavor::ayd);
            if (yd_compat_check(h, m).passed()) out.push_back({beta, g});
        }
    return out;
}

}  // namespace pw::doubles
