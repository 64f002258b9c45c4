#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pw::exalg {

/// Exact scalar: a rational with arbitrary-precision numerator/denominator.
/// Prime-field elements are stored as integers reduced into [0, p).
using Scalar = boost::multiprecision::cpp_rational;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The base field of a computation: either F_p for an odd prime p, or Q.
/// All arithmetic is exact; there is no floating point anywhere.
class Field {
  public:
    enum class Kind { prime, rationals };

    static Field fp(std::uint64_t p);
    static Field rationals();

    Kind kind() const { return kind_; }
    std::uint64_t p() const { return p_; }
    bool is_prime() const { return kind_ == Kind::prime; }

    bool operator==(const Field&) const = default;

    /// Reduce a scalar to canonical form: lowest terms with positive
    /// denominator over Q, the representative in [0, p) over F_p.
    Scalar canon(const Scalar& x) const;

    Scalar add(const Scalar& a, const Scalar& b) const { return canon(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return canon(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return canon(a * b); }
    Scalar neg(const Scalar& a) const { return canon(-a); }
    Scalar inv(const Scalar& a) const;
    bool is_zero(const Scalar& a) const { return canon(a) == 0; }

    Scalar from_int(std::int64_t n) const { return canon(Scalar(n)); }

    std::string describe() const;

  private:
    Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

/// Fp element as a plain machine word; used by hot enumeration loops.
std::uint64_t to_u64(const Scalar& canonical_fp_value);

}  // namespace pw::exalg
