#pragma once

#include "pw/freecat/centre.hpp"
#include "pw/heap/heap.hpp"

#include <functional>

namespace pw::freecat {

/// A candidate pivotal structure on the centre: an automorphism of X^n
/// assigned to every centre object. Monoidality and naturality are verified
/// properties (verify_pivotal), not assumed.
struct PivotalAssignment {
    std::string name;
    std::function<Diagram(const CentreObject&)> value;
};

PivotalAssignment lift_id_assignment();   // constant identity lift
PivotalAssignment lift_rho_assignment();  // rho on every strand
PivotalAssignment zeta_assignment();      // the signature decoration

/// zeta_Y = rho^{phi_1} (x) ... (x) rho^{phi_n} on the signature of Y.
Diagram zeta(const CentreObject& c);

/// Pointwise heap composite <p, q, r>(c) = p(c) q(c)^{-1} r(c).
PivotalAssignment heap_composite(const PivotalAssignment& p, const PivotalAssignment& q,
                                 const PivotalAssignment& r);

/// Equality as maps on all centre objects of width <= bound.
bool assignments_equal(const PivotalAssignment& p, const PivotalAssignment& q,
                       std::uint32_t bound);

struct PivotalReport {
    bool automorphic = false;  // every assigned diagram is an automorphism
    bool monoidal = false;     // p(c1 (x) c2) = p(c1) (x) p(c2)
    bool natural = false;      // squares against all generator lifts commute
    std::string witness;       // first failure, as diagram text
    bool passed() const { return automorphic && monoidal && natural; }
};
/// Verification truncated at width `bound` (naturality against all
/// generator-induced centre morphisms between objects of width <= bound).
PivotalReport verify_pivotal(const PivotalAssignment& p, std::uint32_t bound);

struct ClosureViolation : FreecatError {
    ClosureViolation(std::string msg, PivotalAssignment composite)
        : FreecatError(std::move(msg)), composite(std::move(composite)) {}
    PivotalAssignment composite;  // the assignment that escaped the list
};

/// The heap of the supplied assignments under the pointwise Mal'cev law;
/// ClosureViolation if a composite is not in the list (compared at `bound`).
heap::FiniteHeap piv_heap(const std::vector<PivotalAssignment>& assignments, std::uint32_t bound);

struct NonInducednessReport {
    std::size_t pic_size = 0;       // pivotal structures of the base category
    bool lift_id_pivotal = false;   // the two induced (constant) assignments
    bool lift_rho_pivotal = false;
    bool zeta_pivotal = false;
    std::size_t distinct_verified = 0;
    bool zeta_induced = true;       // whether zeta equals a constant lift
    std::string witness;            // width-1 objects where zeta takes both values
    bool passed() const {
        return pic_size == 2 && lift_id_pivotal && lift_rho_pivotal && zeta_pivotal &&
               distinct_verified >= 3 && !zeta_induced;
    }
};
NonInducednessReport non_inducedness_report(std::uint32_t bound);

}  // namespace pw::freecat
