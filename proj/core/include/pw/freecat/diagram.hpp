#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pw::freecat {

struct FreecatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WidthMismatch : FreecatError {
    using FreecatError::FreecatError;
};
struct NotAutomorphism : FreecatError {
    using FreecatError::FreecatError;
};
struct TextParseError : FreecatError {
    using FreecatError::FreecatError;
};

/// One connector of a diagram. Boundary points are numbered 0..n-1 (sources)
/// and n..n+m-1 (targets); a < b always, and dec is the Z2 count of strand
/// decorations (rho occurrences).
struct Strand {
    std::uint32_t a = 0, b = 0;
    std::uint8_t dec = 0;
    auto operator<=>(const Strand&) const = default;
};

/// Morphism X^n -> X^m in normal form: a perfect matching of the n+m
/// boundary points with Z2 decorations per strand, plus counters for the
/// two loop species (plain circles and decorated circles). Equality is
/// syntactic equality of the canonical form (strands sorted by endpoints).
struct Diagram {
    std::uint32_t n = 0, m = 0;
    std::vector<Strand> strands;
    std::uint64_t plain_loops = 0;
    std::uint64_t decorated_loops = 0;
    bool operator==(const Diagram&) const = default;
};

// Generators and basic families.
Diagram identity(std::uint32_t n);
Diagram rho();    // 1 -> 1 strand, decoration 1
Diagram sigma();  // the symmetric crossing X^2 -> X^2
Diagram ev();     // X^2 -> 1 (unit object is X^0)
Diagram coev();   // 1 -> X^2

/// Nested n-fold (co)evaluation: ev_n pairs boundary point i with 2n-1-i.
Diagram ev_n(std::uint32_t n);
Diagram coev_n(std::uint32_t n);

/// f_s for a permutation s of {0..n-1}: strand i runs to target s[i].
Diagram perm_diagram(const std::vector<std::uint32_t>& s);
/// f_phi = rho^{phi_0} (x) ... (x) rho^{phi_{n-1}}.
Diagram decoration_diagram(const std::vector<std::uint8_t>& phi);

Diagram compose(const Diagram& g, const Diagram& f);  // g after f
Diagram tensor(const Diagram& f, const Diagram& g);
/// Rotation by pi; decorations and loops are preserved.
Diagram dual(const Diagram& f);

/// The unique factorization f = f_s f_phi of an automorphism of X^n.
struct Automorphism {
    std::vector<std::uint32_t> s;
    std::vector<std::uint8_t> phi;
    bool operator==(const Automorphism&) const = default;
};
Automorphism decompose_automorphism(const Diagram& f);
Diagram automorphism_diagram(const Automorphism& a);
Diagram inverse_automorphism(const Diagram& f);

/// All 2^n n! automorphisms of X^n in a deterministic order.
std::vector<Diagram> all_automorphisms(std::uint32_t n);

/// Text literal format: width header "n>m", pair list "(a-b)[d]",
/// loop suffix "L=(p,q)"; e.g. "2>2 (0-3)[1] (1-2)[0] L=(0,0)".
std::string to_text(const Diagram& d);
Diagram from_text(const std::string& text);

/// The defining relations of the presented category, each with its engine
/// verdict: rho^2 = id, sigma^2 = id, snake identities, self-dualities and
/// the naturality of rho against sigma and coev.
std::vector<std::pair<std::string, bool>> relation_checks();

}  // namespace pw::freecat
