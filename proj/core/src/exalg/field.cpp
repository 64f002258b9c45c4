#include "pw/exalg/field.hpp"

namespace pw::exalg {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Field Field::fp(std::uint64_t p) {
    if (!is_prime_u64(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
    if (p == 2) throw FieldError("prime fields are restricted to odd characteristic");
    return Field(Kind::prime, p);
}

Field Field::rationals() { return Field(Kind::rationals, 0); }

Scalar Field::canon(const Scalar& x) const {
    if (kind_ == Kind::rationals) return x;  // cpp_rational keeps lowest terms
    using boost::multiprecision::cpp_int;
    cpp_int num = numerator(x);
    cpp_int den = denominator(x);
    cpp_int p(p_);
    num %= p;
    if (num < 0) num += p;
    den %= p;
    if (den < 0) den += p;
    if (den == 0) throw FieldError("denominator divisible by the characteristic");
    if (den != 1) {
        // invert den mod p by extended Euclid
        cpp_int t = 0, new_t = 1, r = p, new_r = den;
        while (new_r != 0) {
            cpp_int q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        if (r != 1) throw FieldError("non-invertible denominator");
        t %= p;
        if (t < 0) t += p;
        num = (num * t) % p;
    }
    return Scalar(num);
}

Scalar Field::inv(const Scalar& a) const {
    Scalar c = canon(a);
    if (c == 0) throw FieldError("division by zero");
    if (kind_ == Kind::rationals) return 1 / c;
    return canon(Scalar(1) / c);
}

std::string Field::describe() const {
    return kind_ == Kind::prime ? "F_" + std::to_string(p_) : "Q";
}

std::uint64_t to_u64(const Scalar& v) {
    return static_cast<std::uint64_t>(numerator(v));
}

}  // namespace pw::exalg
