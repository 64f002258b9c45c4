#include "pw/exalg/matrix.hpp"

namespace pw::exalg {

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul: inner dimensions differ");
    const Field& f = a.field();
    Matrix c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j) == 0) continue;
                c.at(i, j) = f.add(c.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
            }
        }
    return c;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("mat_add: shapes differ");
    Matrix c(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c.at(i, j) = a.field().add(a.at(i, j), b.at(i, j));
    return c;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("mat_sub: shapes differ");
    Matrix c(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c.at(i, j) = a.field().sub(a.at(i, j), b.at(i, j));
    return c;
}

Matrix mat_scale(const Scalar& c, const Matrix& a) {
    Matrix r(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.field().mul(c, a.at(i, j));
    return r;
}

namespace {

// Row echelon form in place; returns pivot column per row.
std::vector<std::size_t> row_reduce(Matrix& m) {
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(sel, j));
        Scalar piv_inv = f.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = f.mul(piv_inv, m.at(row, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Scalar factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<Matrix> invert(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("invert: matrix is not square");
    const std::size_t n = a.rows();
    Matrix aug(a.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    auto pivots = row_reduce(aug);
    // singular iff any pivot escapes into the augmented identity block
    if (pivots.size() != n || (n > 0 && pivots.back() >= n)) return std::nullopt;
    Matrix inv(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

LinearSolution solve_linear(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve_linear: row counts differ");
    const Field& f = a.field();
    const std::size_t n = a.cols();
    Matrix aug(f, a.rows(), n + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, n + j) = b.at(i, j);
    }
    auto pivots = row_reduce(aug);

    LinearSolution sol{false, Matrix(f, n, b.cols()), Matrix(f, n, 0)};
    // Inconsistent iff a pivot falls in the augmented block.
    std::size_t rank = 0;
    for (std::size_t c : pivots) {
        if (c >= n) return sol;
        ++rank;
    }
    sol.consistent = true;
    std::vector<std::ptrdiff_t> pivot_row_of_col(n, -1);
    for (std::size_t r = 0; r < rank; ++r) pivot_row_of_col[pivots[r]] = static_cast<std::ptrdiff_t>(r);

    for (std::size_t c = 0; c < n; ++c)
        if (pivot_row_of_col[c] >= 0)
            for (std::size_t j = 0; j < b.cols(); ++j)
                sol.particular.at(c, j) = aug.at(static_cast<std::size_t>(pivot_row_of_col[c]), n + j);

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (pivot_row_of_col[c] < 0) free_cols.push_back(c);

    sol.nullspace_basis = Matrix(f, n, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        sol.nullspace_basis.at(fc, k) = Scalar(1);
        for (std::size_t c = 0; c < n; ++c)
            if (pivot_row_of_col[c] >= 0)
                sol.nullspace_basis.at(c, k) =
                    f.neg(aug.at(static_cast<std::size_t>(pivot_row_of_col[c]), fc));
    }
    return sol;
}

Matrix column(Field f, const std::vector<Scalar>& entries) {
    Matrix m(f, entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = f.canon(entries[i]);
    return m;
}

std::vector<Scalar> apply(const Matrix& m, const std::vector<Scalar>& v) {
    if (m.cols() != v.size()) throw DimensionMismatch("apply: size mismatch");
    const Field& f = m.field();
    std::vector<Scalar> out(m.rows(), Scalar(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0 && v[j] != 0) out[i] = f.add(out[i], f.mul(m.at(i, j), v[j]));
    return out;
}

}  // namespace pw::exalg
