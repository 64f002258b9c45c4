#include "pw/hopf/hopf.hpp"

#include <algorithm>
#include <deque>

namespace pw::hopf {

namespace {

using Vec = std::vector<Scalar>;

// Incrementally row-reduced basis of a subspace of F^dim.
class Subspace {
  public:
    Subspace(Field f, std::size_t dim) : field_(f), dim_(dim) {}

    std::size_t rank() const { return rows_.size(); }

    // Reduces v against the basis; inserts the remainder when nonzero.
    // The rows are kept fully reduced (each pivot column is zero in every
    // other row), so a single elimination pass is exact.
    // Returns true when the subspace grew.
    bool insert(Vec v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Scalar c = v[pivots_[r]];
            if (c == 0) continue;
            for (std::size_t t = 0; t < dim_; ++t)
                v[t] = field_.sub(v[t], field_.mul(c, rows_[r][t]));
        }
        std::size_t piv = dim_;
        for (std::size_t t = 0; t < dim_; ++t)
            if (v[t] != 0) {
                piv = t;
                break;
            }
        if (piv == dim_) return false;
        Scalar inv = field_.inv(v[piv]);
        for (std::size_t t = 0; t < dim_; ++t) v[t] = field_.mul(inv, v[t]);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Scalar c = rows_[r][piv];
            if (c == 0) continue;
            for (std::size_t t = 0; t < dim_; ++t)
                rows_[r][t] = field_.sub(rows_[r][t], field_.mul(c, v[t]));
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

    Matrix as_matrix() const {
        Matrix m(field_, rows_.size(), dim_);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (std::size_t t = 0; t < dim_; ++t) m.at(r, t) = rows_[r][t];
        return m;
    }

  private:
    Field field_;
    std::size_t dim_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

// The two-sided ideal generated by all commutators e_i e_j - e_j e_i.
Subspace commutator_ideal(const HopfAlgebra& h) {
    const std::size_t n = h.dim;
    Subspace span(h.field, n);
    std::deque<Vec> work;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < i; ++j) {
            Vec v(n, Scalar(0));
            for (const auto& [k, c] : h.mult.slice(i, j)) v[k] = h.field.add(v[k], c);
            for (const auto& [k, c] : h.mult.slice(j, i)) v[k] = h.field.sub(v[k], c);
            work.push_back(std::move(v));
        }
    while (!work.empty()) {
        Vec v = std::move(work.front());
        work.pop_front();
        if (!span.insert(v)) continue;
        for (std::uint32_t k = 0; k < n; ++k) {
            work.push_back(h.multiply(h.basis_vector(k), v));
            work.push_back(h.multiply(v, h.basis_vector(k)));
        }
    }
    return span;
}

}  // namespace

std::vector<Character> enumerate_characters(const HopfAlgebra& h, std::uint64_t max_scan) {
    if (!h.field.is_prime())
        throw FieldNotEnumerable("character enumeration requires a finite prime field");
    const std::size_t n = h.dim;
    const std::uint64_t p = h.field.p();

    // Characters kill every commutator, hence the whole commutator ideal;
    // it suffices to scan its annihilator.
    Matrix ideal = commutator_ideal(h).as_matrix();
    Matrix null_basis = [&] {
        if (ideal.rows() == 0) return Matrix::identity(h.field, n);
        return exalg::solve_linear(ideal, Matrix::zero(h.field, ideal.rows(), 1)).nullspace_basis;
    }();
    const std::size_t m = null_basis.cols();

    std::uint64_t space = 1;
    for (std::size_t t = 0; t < m; ++t) {
        if (space > max_scan / p + 1) throw SearchSpaceTooLarge("character scan exceeds max_scan");
        space *= p;
        if (space > max_scan) throw SearchSpaceTooLarge("character scan exceeds max_scan");
    }

    // Machine-word tables for the scan.
    std::vector<std::vector<std::uint64_t>> nb(m, std::vector<std::uint64_t>(n));
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t c = 0; c < n; ++c) nb[t][c] = exalg::to_u64(null_basis.at(c, t));
    std::vector<std::uint64_t> unit_u(n);
    for (std::size_t c = 0; c < n; ++c) unit_u[c] = exalg::to_u64(h.field.canon(h.unit[c]));
    struct MultEntry {
        std::uint32_t i, j;
        std::vector<std::pair<std::uint32_t, std::uint64_t>> terms;
    };
    std::vector<MultEntry> pairs;
    pairs.reserve(n * n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            MultEntry e{i, j, {}};
            for (const auto& [k, c] : h.mult.slice(i, j)) e.terms.emplace_back(k, exalg::to_u64(c));
            pairs.push_back(std::move(e));
        }

    std::vector<Character> found;
    std::vector<std::uint64_t> coeff(m, 0), beta(n);
    for (std::uint64_t step = 0;; ++step) {
        std::fill(beta.begin(), beta.end(), 0);
        for (std::size_t t = 0; t < m; ++t) {
            if (coeff[t] == 0) continue;
            for (std::size_t c = 0; c < n; ++c)
                beta[c] = (beta[c] + mul_mod(coeff[t], nb[t][c], p)) % p;
        }
        std::uint64_t on_unit = 0;
        for (std::size_t c = 0; c < n; ++c) on_unit = (on_unit + mul_mod(beta[c], unit_u[c], p)) % p;
        bool ok = on_unit == 1;
        for (const auto& e : pairs) {
            if (!ok) break;
            std::uint64_t lhs = 0;
            for (const auto& [k, c] : e.terms) lhs = (lhs + mul_mod(c, beta[k], p)) % p;
            if (lhs != mul_mod(beta[e.i], beta[e.j], p)) ok = false;
        }
        if (ok) {
            Vec f(n);
            for (std::size_t c = 0; c < n; ++c) f[c] = Scalar(beta[c]);
            found.push_back(Character{std::move(f)});
        }
        // odometer over F_p^m
        std::size_t t = 0;
        while (t < m && ++coeff[t] == p) coeff[t++] = 0;
        if (t == m) break;
    }
    std::sort(found.begin(), found.end(),
              [](const Character& a, const Character& b) { return a.functional < b.functional; });
    return found;
}

std::vector<GroupLike> enumerate_group_likes(const HopfAlgebra& h, std::uint64_t max_scan) {
    auto chars = enumerate_characters(dual(h), max_scan);
    std::vector<GroupLike> out;
    out.reserve(chars.size());
    for (auto& c : chars) {
        GroupLike g{std::move(c.functional)};
        if (!is_group_like(h, g.element))
            throw HopfError("internal: dual character is not group-like");
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace pw::hopf
