#include "pw/hopf/hopf.hpp"

#include <algorithm>

namespace pw::hopf {

using exalg::Tensor3;

std::vector<Scalar> HopfAlgebra::basis_vector(std::size_t i) const {
    std::vector<Scalar> v(dim, Scalar(0));
    v.at(i) = Scalar(1);
    return v;
}

std::vector<Scalar> HopfAlgebra::multiply(const std::vector<Scalar>& x,
                                          const std::vector<Scalar>& y) const {
    return mult.apply_bilinear(x, y);
}

Scalar HopfAlgebra::counit_of(const std::vector<Scalar>& x) const {
    Scalar s(0);
    for (std::size_t i = 0; i < dim; ++i) s = field.add(s, field.mul(counit[i], x[i]));
    return s;
}

Matrix HopfAlgebra::comult_matrix() const {
    Matrix m(field, dim * dim, dim);
    for (const auto& e : comult.sorted_entries()) m.at(e.j * dim + e.k, e.i) = e.c;
    return m;
}

std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, Scalar>>>
HopfAlgebra::iterated_comult() const {
    std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, Scalar>>> out(dim);
    for (std::uint32_t i = 0; i < dim; ++i) {
        std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, Scalar> acc;
        for (const auto& e1 : comult.fiber(i))          // Delta(e_i) = sum e_{e1.j} (x) e_{e1.k}
            for (const auto& e2 : comult.fiber(e1.j)) {  // expand the left leg again
                auto key = std::make_tuple(e2.j, e2.k, e1.k);
                auto it = acc.find(key);
                Scalar add = field.mul(e1.c, e2.c);
                if (it == acc.end())
                    acc.emplace(key, add);
                else
                    it->second = field.add(it->second, add);
            }
        for (const auto& [key, c] : acc)
            if (c != 0) out[i].emplace_back(std::get<0>(key), std::get<1>(key), std::get<2>(key), c);
    }
    return out;
}

namespace {

// Dense element of H (x) H, index a*dim+b.
using Vec = std::vector<Scalar>;

Vec tensor_square_zero(std::size_t dim) { return Vec(dim * dim, Scalar(0)); }

Vec comult_of_basis(const HopfAlgebra& h, std::uint32_t i) {
    Vec v = tensor_square_zero(h.dim);
    for (const auto& e : h.comult.fiber(i)) v[e.j * h.dim + e.k] = e.c;
    return v;
}

Vec comult_of(const HopfAlgebra& h, const Vec& x) {
    Vec v = tensor_square_zero(h.dim);
    for (std::uint32_t i = 0; i < h.dim; ++i) {
        if (x[i] == 0) continue;
        for (const auto& e : h.comult.fiber(i))
            v[e.j * h.dim + e.k] = h.field.add(v[e.j * h.dim + e.k], h.field.mul(x[i], e.c));
    }
    return v;
}

// Componentwise product on H (x) H.
Vec tensor_square_mul(const HopfAlgebra& h, const Vec& x, const Vec& y) {
    const std::size_t n = h.dim;
    Vec out = tensor_square_zero(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Scalar& xc = x[a * n + b];
            if (xc == 0) continue;
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    const Scalar& yc = y[c * n + d];
                    if (yc == 0) continue;
                    Scalar coeff = h.field.mul(xc, yc);
                    for (const auto& [k1, c1] : h.mult.slice(static_cast<std::uint32_t>(a),
                                                             static_cast<std::uint32_t>(c)))
                        for (const auto& [k2, c2] : h.mult.slice(static_cast<std::uint32_t>(b),
                                                                 static_cast<std::uint32_t>(d))) {
                            Scalar add = h.field.mul(coeff, h.field.mul(c1, c2));
                            out[k1 * n + k2] = h.field.add(out[k1 * n + k2], add);
                        }
                }
        }
    return out;
}

bool vec_eq(const Vec& a, const Vec& b) { return a == b; }

}  // namespace

bool AxiomReport::all_passed() const {
    return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.passed; });
}

std::vector<std::string> AxiomReport::failures() const {
    std::vector<std::string> out;
    for (const auto& i : items)
        if (!i.passed) out.push_back(i.axiom);
    return out;
}

AxiomReport check_axioms(const HopfAlgebra& h) {
    AxiomReport rep;
    const std::size_t n = h.dim;
    const Field& f = h.field;

    auto record = [&rep](std::string name, bool ok, std::vector<std::size_t> witness = {}) {
        rep.items.push_back({std::move(name), ok, ok ? std::vector<std::size_t>{} : std::move(witness)});
    };

    {  // associativity on basis triples
        bool ok = true;
        std::vector<std::size_t> w;
        for (std::uint32_t i = 0; ok && i < n; ++i)
            for (std::uint32_t j = 0; ok && j < n; ++j) {
                Vec eij(n, Scalar(0));
                for (const auto& [k, c] : h.mult.slice(i, j)) eij[k] = c;
                for (std::uint32_t k = 0; ok && k < n; ++k) {
                    Vec lhs = h.multiply(eij, h.basis_vector(k));
                    Vec rhs = h.multiply(h.basis_vector(i), h.multiply(h.basis_vector(j), h.basis_vector(k)));
                    if (lhs != rhs) {
                        ok = false;
                        w = {i, j, k};
                    }
                }
            }
        record("associativity", ok, w);
    }
    {  // two-sided unit
        bool ok = true;
        std::vector<std::size_t> w;
        for (std::uint32_t i = 0; ok && i < n; ++i) {
            if (h.multiply(h.unit, h.basis_vector(i)) != h.basis_vector(i) ||
                h.multiply(h.basis_vector(i), h.unit) != h.basis_vector(i)) {
                ok = false;
                w = {i};
            }
        }
        record("unitality", ok, w);
    }
    {  // coassociativity via iterated coproducts (both expansion orders)
        bool ok = true;
        std::vector<std::size_t> w;
        for (std::uint32_t i = 0; ok && i < n; ++i) {
            std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, Scalar> left, right;
            for (const auto& e1 : h.comult.fiber(i)) {
                for (const auto& e2 : h.comult.fiber(e1.j)) {
                    auto key = std::make_tuple(e2.j, e2.k, e1.k);
                    left[key] = f.add(left.count(key) ? left[key] : Scalar(0), f.mul(e1.c, e2.c));
                }
                for (const auto& e2 : h.comult.fiber(e1.k)) {
                    auto key = std::make_tuple(e1.j, e2.j, e2.k);
                    right[key] = f.add(right.count(key) ? right[key] : Scalar(0), f.mul(e1.c, e2.c));
                }
            }
            std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
            std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
            if (left != right) {
                ok = false;
                w = {i};
            }
        }
        record("coassociativity", ok, w);
    }
    {  // counit identities
        bool ok = true;
        std::vector<std::size_t> w;
        for (std::uint32_t i = 0; ok && i < n; ++i) {
            Vec l(n, Scalar(0)), r(n, Scalar(0));
            for (const auto& e : h.comult.fiber(i)) {
                l[e.k] = f.add(l[e.k], f.mul(e.c, h.counit[e.j]));
                r[e.j] = f.add(r[e.j], f.mul(e.c, h.counit[e.k]));
            }
            if (l != h.basis_vector(i) || r != h.basis_vector(i)) {
                ok = false;
                w = {i};
            }
        }
        record("counitality", ok, w);
    }
    {  // comultiplication is an algebra map
        bool ok = true;
        std::vector<std::size_t> w;
        if (comult_of(h, h.unit) != [&] {
                Vec v = tensor_square_zero(n);
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) v[a * n + b] = f.mul(h.unit[a], h.unit[b]);
                return v;
            }()) {
            ok = false;
        }
        for (std::uint32_t i = 0; ok && i < n; ++i)
            for (std::uint32_t j = 0; ok && j < n; ++j) {
                Vec prod(n, Scalar(0));
                for (const auto& [k, c] : h.mult.slice(i, j)) prod[k] = c;
                Vec lhs = comult_of(h, prod);
                Vec rhs = tensor_square_mul(h, comult_of_basis(h, i), comult_of_basis(h, j));
                if (!vec_eq(lhs, rhs)) {
                    ok = false;
                    w = {i, j};
                }
            }
        record("comult_is_algebra_map", ok, w);
    }
    {  // counit is an algebra map
        bool ok = h.counit_of(h.unit) == Scalar(1);
        std::vector<std::size_t> w;
        for (std::uint32_t i = 0; ok && i < n; ++i)
            for (std::uint32_t j = 0; ok && j < n; ++j) {
                Scalar lhs(0);
                for (const auto& [k, c] : h.mult.slice(i, j)) lhs = f.add(lhs, f.mul(c, h.counit[k]));
                if (lhs != f.mul(h.counit[i], h.counit[j])) {
                    ok = false;
                    w = {i, j};
                }
            }
        record("counit_is_algebra_map", ok, w);
    }
    {  // antipode identities m(S (x) id)Delta = unit . counit = m(id (x) S)Delta
        bool ok_l = true, ok_r = true;
        std::vector<std::size_t> wl, wr;
        for (std::uint32_t i = 0; i < n; ++i) {
            Vec lhs_l(n, Scalar(0)), lhs_r(n, Scalar(0));
            for (const auto& e : h.comult.fiber(i)) {
                Vec sj(n, Scalar(0)), sk(n, Scalar(0));
                for (std::size_t t = 0; t < n; ++t) {
                    sj[t] = h.antipode.at(t, e.j);
                    sk[t] = h.antipode.at(t, e.k);
                }
                Vec lj = h.multiply(sj, h.basis_vector(e.k));
                Vec rj = h.multiply(h.basis_vector(e.j), sk);
                for (std::size_t t = 0; t < n; ++t) {
                    lhs_l[t] = f.add(lhs_l[t], f.mul(e.c, lj[t]));
                    lhs_r[t] = f.add(lhs_r[t], f.mul(e.c, rj[t]));
                }
            }
            Vec target(n, Scalar(0));
            for (std::size_t t = 0; t < n; ++t) target[t] = f.mul(h.counit[i], h.unit[t]);
            if (ok_l && lhs_l != target) {
                ok_l = false;
                wl = {i};
            }
            if (ok_r && lhs_r != target) {
                ok_r = false;
                wr = {i};
            }
        }
        record("antipode_left", ok_l, wl);
        record("antipode_right", ok_r, wr);
    }
    record("antipode_invertible", exalg::invert(h.antipode).has_value());
    return rep;
}

Matrix antipode_squared(const HopfAlgebra& h) { return mat_mul(h.antipode, h.antipode); }

HopfAlgebra dual(const HopfAlgebra& h) {
    const std::size_t n = h.dim;
    Tensor3 dmult(h.field, n, n, n), dcomult(h.field, n, n, n);
    for (const auto& e : h.comult.sorted_entries()) dmult.add(e.j, e.k, e.i, e.c);
    for (const auto& e : h.mult.sorted_entries()) dcomult.add(e.k, e.i, e.j, e.c);
    return HopfAlgebra{h.name + "*", h.field,   n,        dmult,
                       h.counit,     dcomult,   h.unit,   h.antipode.transpose()};
}

bool is_group_like(const HopfAlgebra& h, const std::vector<Scalar>& g) {
    const std::size_t n = h.dim;
    Vec expected = tensor_square_zero(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) expected[a * n + b] = h.field.mul(g[a], g[b]);
    if (comult_of(h, g) != expected) return false;
    return h.counit_of(g) == Scalar(1);
}

bool is_character(const HopfAlgebra& h, const std::vector<Scalar>& beta) {
    const Field& f = h.field;
    auto value = [&](const Vec& x) {
        Scalar s(0);
        for (std::size_t i = 0; i < h.dim; ++i) s = f.add(s, f.mul(beta[i], x[i]));
        return s;
    };
    if (value(h.unit) != Scalar(1)) return false;
    for (std::uint32_t i = 0; i < h.dim; ++i)
        for (std::uint32_t j = 0; j < h.dim; ++j) {
            Scalar lhs(0);
            for (const auto& [k, c] : h.mult.slice(i, j)) lhs = f.add(lhs, f.mul(c, beta[k]));
            if (lhs != f.mul(beta[i], beta[j])) return false;
        }
    return true;
}

Matrix adjoint_action_group_like(const HopfAlgebra& h, const GroupLike& g) {
    std::vector<Scalar> ginv = exalg::apply(h.antipode, g.element);
    // sanity: g * ginv must be the unit
    if (h.multiply(g.element, ginv) != h.unit)
        throw HopfError("adjoint action: S(g) is not an inverse of g");
    Matrix ad(h.field, h.dim, h.dim);
    for (std::uint32_t j = 0; j < h.dim; ++j) {
        auto col = h.multiply(h.multiply(g.element, h.basis_vector(j)), ginv);
        for (std::size_t t = 0; t < h.dim; ++t) ad.at(t, j) = col[t];
    }
    return ad;
}

Matrix adjoint_action_character(const HopfAlgebra& h, const Character& beta) {
    const Field& f = h.field;
    // beta^{-1} = beta o S
    std::vector<Scalar> beta_s(h.dim, Scalar(0));
    for (std::size_t c = 0; c < h.dim; ++c)
        for (std::size_t t = 0; t < h.dim; ++t)
            beta_s[c] = f.add(beta_s[c], f.mul(beta.functional[t], h.antipode.at(t, c)));

    Matrix ad(h.field, h.dim, h.dim);
    auto d2 = h.iterated_comult();
    for (std::uint32_t j = 0; j < h.dim; ++j)
        for (const auto& [a, b, c, coef] : d2[j]) {
            Scalar v = f.mul(coef, f.mul(beta.functional[a], beta_s[c]));
            ad.at(b, j) = f.add(ad.at(b, j), v);
        }
    return ad;
}

Character character_convolve(const HopfAlgebra& h, const Character& a, const Character& b) {
    const Field& f = h.field;
    std::vector<Scalar> out(h.dim, Scalar(0));
    for (std::uint32_t i = 0; i < h.dim; ++i)
        for (const auto& e : h.comult.fiber(i))
            out[i] = f.add(out[i], f.mul(e.c, f.mul(a.functional[e.j], b.functional[e.k])));
    return Character{out};
}

Character character_inverse(const HopfAlgebra& h, const Character& a) {
    const Field& f = h.field;
    std::vector<Scalar> out(h.dim, Scalar(0));
    for (std::size_t c = 0; c < h.dim; ++c)
        for (std::size_t t = 0; t < h.dim; ++t)
            out[c] = f.add(out[c], f.mul(a.functional[t], h.antipode.at(t, c)));
    return Character{out};
}

GroupLike group_like_mul(const HopfAlgebra& h, const GroupLike& a, const GroupLike& b) {
    return GroupLike{h.multiply(a.element, b.element)};
}

GroupLike group_like_inverse(const HopfAlgebra& h, const GroupLike& a) {
    return GroupLike{exalg::apply(h.antipode, a.element)};
}

Character counit_character(const HopfAlgebra& h) { return Character{h.counit}; }
GroupLike unit_group_like(const HopfAlgebra& h) { return GroupLike{h.unit}; }

std::vector<PairInInvolution> find_pairs_in_involution(const HopfAlgebra& h,
                                                       std::uint64_t max_scan) {
    auto chars = enumerate_characters(h, max_scan);
    auto gls = enumerate_group_likes(h, max_scan);
    Matrix s2 = antipode_squared(h);
    std::vector<PairInInvolution> out;
    for (const auto& beta : chars) {
        Matrix ad_beta_s2 = mat_mul(adjoint_action_character(h, beta), s2);
        for (const auto& g : gls)
            if (adjoint_action_group_like(h, g) == ad_beta_s2) out.push_back({beta, g});
    }
    return out;
}

heap::FiniteHeap pii_heap(const HopfAlgebra& h, const std::vector<PairInInvolution>& pairs) {
    if (pairs.empty()) throw HopfError("pii_heap: empty pair list");
    auto find = [&](const PairInInvolution& p) -> std::size_t {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i] == p) return i;
        throw ClosureViolation("pii_heap: ternary operation leaves the pair set");
    };
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < pairs.size(); ++i) labels.push_back("pair" + std::to_string(i));
    return heap::FiniteHeap(labels, [&](std::size_t a, std::size_t b, std::size_t c) {
        const auto& pa = pairs[a];
        const auto& pb = pairs[b];
        const auto& pc = pairs[c];
        Character beta = character_convolve(
            h, character_convolve(h, pa.beta, character_inverse(h, pb.beta)), pc.beta);
        GroupLike g = group_like_mul(h, group_like_mul(h, pa.g, group_like_inverse(h, pb.g)), pc.g);
        return find(PairInInvolution{beta, g});
    });
}

}  // namespace pw::hopf
