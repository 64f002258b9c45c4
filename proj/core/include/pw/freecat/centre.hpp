#pragma once

#include "pw/freecat/diagram.hpp"

namespace pw::freecat {

struct NotInParameterFamily : FreecatError {
    using FreecatError::FreecatError;
};

/// Parameters of a half-braiding on X^n: chi_{Y,X} = sigma_{Y,X} (f_s f_phi
/// (x) rho^j) with s an involution and phi invariant under s.
struct HalfBraidingParam {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> s;
    std::vector<std::uint8_t> phi;
    std::uint8_t j = 0;
    bool operator==(const HalfBraidingParam&) const = default;
};

/// An object of the Drinfeld centre: X^n together with a half-braiding.
struct CentreObject {
    std::uint32_t n = 0;
    HalfBraidingParam hb;
    bool operator==(const CentreObject&) const = default;
};

/// Validates the parameter constraints (sizes, involution, invariance).
bool is_valid_param(const HalfBraidingParam& p);
CentreObject make_centre_object(HalfBraidingParam p);

/// The signature of a centre object is the characteristic sequence of f.
inline const std::vector<std::uint8_t>& signature(const CentreObject& c) { return c.hb.phi; }

/// All (s, phi, j) with s an involution and phi s-invariant, in a
/// deterministic order; counts are 4, 12, 40 for n = 1, 2, 3.
std::vector<CentreObject> enumerate_half_braidings(std::uint32_t n);

/// chi_{Y,X^k}: the automorphism of X^{n+k} obtained by hexagon iteration;
/// k = 0 gives the identity.
Diagram hb_component(const CentreObject& c, std::uint32_t k);

/// Tensor product and dual in the centre; the resulting half-braiding is
/// computed by the diagram engine and re-extracted into the parameter
/// family. NotInParameterFamily must never fire and doubles as a
/// consistency test of the classification.
CentreObject centre_tensor(const CentreObject& c1, const CentreObject& c2);
CentreObject centre_dual(const CentreObject& c);

/// Whether h: X^{c1.n} -> X^{c2.n} is a morphism of centre objects:
/// chi_{c2} (h (x) id_X) == (id_X (x) h) chi_{c1}.
bool is_centre_morphism(const Diagram& h, const CentreObject& c1, const CentreObject& c2);

/// Lift check for an automorphism g of X^n, with the closed index-formula
/// cross-check (permutation intertwining, the Z2 decoration identity read
/// additively, and equal rho-powers); the engine verdict is authoritative.
struct LiftReport {
    bool engine = false;
    bool formula = false;
    bool agree() const { return engine == formula; }
};
LiftReport lift_check(const Diagram& g, const CentreObject& c1, const CentreObject& c2);

}  // namespace pw::freecat
