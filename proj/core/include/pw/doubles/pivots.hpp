#pragma once

#include "pw/doubles/modules.hpp"
#include "pw/heap/heap.hpp"

namespace pw::doubles {

struct NotPivotal : DoubleError {
    using DoubleError::DoubleError;
};

/// Group-like l of D(H) with S^2_D = Ad_l.
struct PivotalElement {
    std::vector<Scalar> element;
    bool operator==(const PivotalElement&) const = default;
};

/// A character of D(H) built from (gamma, chi) in Gr(h) x Char(h):
/// theta(e^a (x) e_b) = gamma_a chi_b.
std::vector<Scalar> one_dim_double_character(const DoubleAlgebra& d, const hopf::GroupLike& gamma,
                                             const hopf::Character& chi);

/// Monodromy test: (theta (x) id)(R21 R) == unit of D.
bool symmetric_test(const DoubleAlgebra& d, const std::vector<Scalar>& theta);

/// All pivots in the candidate set {chi (x) gamma}; completeness beyond the
/// candidate set is not claimed.
std::vector<PivotalElement> pivotal_elements(const DoubleAlgebra& d,
                                             std::uint64_t max_scan = hopf::kDefaultMaxScan);

/// Exponents (on beta, on g) of the pair-to-pivot convention l = beta (x) g;
/// pinned by machine search: the unique sign choice satisfying the pivot
/// conditions on every pair of every bundled algebra.
inline constexpr std::array<int, 2> kKappaExponents{1, 1};

/// The pivot of D(h) attached to a one-dimensional ayd class; NotPivotal
/// when the fixed convention fails the pivot conditions.
PivotalElement kappa(const DoubleAlgebra& d, const hopf::PairInInvolution& pair);

struct QuotientIotaReport {
    std::vector<hopf::PairInInvolution> ayd_classes;
    // (gamma, chi) classes of symmetric invertible one-dimensional modules
    std::vector<std::pair<hopf::GroupLike, hopf::Character>> symmetric_classes;
    std::vector<std::size_t> orbit_of;  // per ayd class
    std::size_t orbit_count = 0;
    bool kappa_constant_on_orbits = false;
    bool iota_injective = false;
    bool passed() const { return kappa_constant_on_orbits && iota_injective; }
};

/// Computes the symmetric-centre orbit quotient of the ayd class set and
/// checks that kappa factors through it injectively.
QuotientIotaReport quotient_and_iota_check(const HopfAlgebra& h,
                                           std::uint64_t max_scan = hopf::kDefaultMaxScan);

}  // namespace pw::doubles
