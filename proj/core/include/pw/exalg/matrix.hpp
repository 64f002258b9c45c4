#pragma once

#include "pw/exalg/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pw::exalg {

/// Dense matrix over an exact field. Entries are kept in canonical form,
/// so equality of matrices is entrywise syntactic equality.
class Matrix {
  public:
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

    static Matrix identity(Field f, std::size_t n);
    static Matrix zero(Field f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Scalar& v) { a_[i * cols_ + j] = field_.canon(v); }

    bool operator==(const Matrix&) const = default;

    Matrix transpose() const;
    bool is_zero() const;

  private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Scalar& c, const Matrix& a);

/// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<Matrix> invert(const Matrix& a);

/// Solution set of a*x = b as particular solution plus nullspace basis.
struct LinearSolution {
    bool consistent = false;
    Matrix particular;       // cols == b.cols when consistent
    Matrix nullspace_basis;  // one basis vector per column
};

LinearSolution solve_linear(const Matrix& a, const Matrix& b);

/// Column-vector helpers.
Matrix column(Field f, const std::vector<Scalar>& entries);
std::vector<Scalar> apply(const Matrix& m, const std::vector<Scalar>& v);

}  // namespace pw::exalg
