#pragma once

#include "pw/doubles/doubles.hpp"

namespace pw::doubles {

struct ConventionMismatch : DoubleError {
    using DoubleError::DoubleError;
};

enum class Flavor { yd, ayd };

/// An H-module-comodule: action(i,j,k) gives e_i . m_j = sum_k c m_k,
/// coaction(j,k,l) gives delta(m_j) = sum c e_k (x) m_l.
struct YDModule {
    std::size_t dim;
    Tensor3 action;    // dims (n, m, m)
    Tensor3 coaction;  // dims (m, n, m)
    Flavor flavor;
};

/// k_beta with coaction g (x) -.
YDModule one_dim_module(const HopfAlgebra& h, const hopf::Character& beta,
                        const hopf::GroupLike& g, Flavor flavor);

struct CompatReport {
    bool module_axioms = false;
    bool comodule_axioms = false;
    bool compatible = false;
    std::vector<std::size_t> witness;  // first failing (i, j) basis pair
    bool passed() const { return module_axioms && comodule_axioms && compatible; }
};

/// Verifies module/comodule axioms plus the flavor's compatibility law:
///   yd:  delta(h.m) = h_3 m_{-1} S^{-1}(h_1) (x) h_2 m_0
///   ayd: delta(h.m) = h_3 m_{-1} S^{-3}(h_1) (x) h_2 m_0
/// (the ayd law is the S^{-2}-shift of the yd law); for one-dimensional
/// modules these classify exactly the modules of D(h) resp. A(h).
CompatReport yd_compat_check(const HopfAlgebra& h, const YDModule& m);

/// Builds the induced action (f (x) a) . v = f((a.v)_{-1}) (a.v)_0 of the
/// matching double (drinfeld for yd, anti for ayd) and verifies the module
/// axioms against it. ConventionMismatch on dimension/flavor mismatch.
bool module_correspondence_check(const DoubleAlgebra& d, const YDModule& m);

/// All (beta, g) in Char(h) x Gr(h) whose one-dimensional module passes the
/// ayd compatibility check; by the theorem under test this equals
/// find_pairs_in_involution(h).
std::vector<hopf::PairInInvolution> enumerate_one_dim_ayd(
    const HopfAlgebra& h, std::uint64_t max_scan = hopf::kDefaultMaxScan);

}  // namespace pw::doubles
