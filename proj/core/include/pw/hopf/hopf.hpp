#pragma once

#include "pw/exalg/field.hpp"
#include "pw/exalg/matrix.hpp"
#include "pw/exalg/tensor3.hpp"
#include "pw/heap/heap.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pw::hopf {

using exalg::Field;
using exalg::Matrix;
using exalg::Scalar;
using exalg::Tensor3;

struct HopfError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite-dimensional Hopf algebra given by structure constants on a
/// fixed basis e_0..e_{n-1}:
///   mult:    e_i e_j            = sum_k mult(i,j,k) e_k
///   comult:  Delta(e_i)         = sum_{j,k} comult(i,j,k) e_j (x) e_k
///   unit/counit as coordinate (co)vectors, antipode as a matrix.
struct HopfAlgebra {
    std::string name;
    Field field;
    std::size_t dim;
    Tensor3 mult;
    std::vector<Scalar> unit;
    Tensor3 comult;
    std::vector<Scalar> counit;
    Matrix antipode;

    std::vector<Scalar> basis_vector(std::size_t i) const;
    std::vector<Scalar> multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
    Scalar counit_of(const std::vector<Scalar>& x) const;

    /// Delta as a dim^2 x dim matrix (row index j*dim+k).
    Matrix comult_matrix() const;
    /// Delta^2 = (Delta (x) id) Delta, entries (i -> (a,b,c)).
    std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, Scalar>>>
    iterated_comult() const;
};

struct AxiomReport {
    struct Item {
        std::string axiom;
        bool passed;
        std::vector<std::size_t> witness;  // first failing basis tuple, if any
    };
    std::vector<Item> items;
    bool all_passed() const;
    std::vector<std::string> failures() const;
};

/// Verifies (co)associativity, (co)unitality, the bialgebra conditions,
/// both antipode identities and invertibility of the antipode.
AxiomReport check_axioms(const HopfAlgebra& h);

Matrix antipode_squared(const HopfAlgebra& h);

/// Dual Hopf algebra on the dual basis: multiplication is the transpose of
/// the comultiplication and vice versa.
HopfAlgebra dual(const HopfAlgebra& h);

struct GroupLike {
    std::vector<Scalar> element;
    bool operator==(const GroupLike&) const = default;
};

struct Character {
    std::vector<Scalar> functional;
    bool operator==(const Character&) const = default;
};

struct PairInInvolution {
    Character beta;
    GroupLike g;
    bool operator==(const PairInInvolution&) const = default;
};

struct EnumerationError : HopfError {
    using HopfError::HopfError;
};
struct FieldNotEnumerable : EnumerationError {
    using EnumerationError::EnumerationError;
};
struct SearchSpaceTooLarge : EnumerationError {
    using EnumerationError::EnumerationError;
};

inline constexpr std::uint64_t kDefaultMaxScan = 1'000'000;

/// Complete lists over F_p. Characters are found by scanning the quotient
/// of the algebra by its commutator ideal (characters kill commutators, so
/// the scan space shrinks from p^dim to p^dim(quotient) with no loss);
/// group-likes are the characters of the dual. Results are returned in a
/// deterministic lexicographic order.
std::vector<Character> enumerate_characters(const HopfAlgebra& h,
                                            std::uint64_t max_scan = kDefaultMaxScan);
std::vector<GroupLike> enumerate_group_likes(const HopfAlgebra& h,
                                             std::uint64_t max_scan = kDefaultMaxScan);

bool is_group_like(const HopfAlgebra& h, const std::vector<Scalar>& g);
bool is_character(const HopfAlgebra& h, const std::vector<Scalar>& beta);

/// x -> g x g^{-1} with g^{-1} = S(g).
Matrix adjoint_action_group_like(const HopfAlgebra& h, const GroupLike& g);

/// x -> beta(x_(1)) x_(2) beta(S(x_(3))).
Matrix adjoint_action_character(const HopfAlgebra& h, const Character& beta);

/// Convolution operations on characters and products/inverses of group-likes.
Character character_convolve(const HopfAlgebra& h, const Character& a, const Character& b);
Character character_inverse(const HopfAlgebra& h, const Character& a);
GroupLike group_like_mul(const HopfAlgebra& h, const GroupLike& a, const GroupLike& b);
GroupLike group_like_inverse(const HopfAlgebra& h, const GroupLike& a);
Character counit_character(const HopfAlgebra& h);
GroupLike unit_group_like(const HopfAlgebra& h);

/// All (beta, g) with Ad_g = Ad_beta S^2 (S^2 applied first).
std::vector<PairInInvolution> find_pairs_in_involution(const HopfAlgebra& h,
                                                       std::uint64_t max_scan = kDefaultMaxScan);

struct ClosureViolation : HopfError {
    using HopfError::HopfError;
};

/// The heap <(b1,g1),(b2,g2),(b3,g3)> = (b1 b2^{-1} b3, g1 g2^{-1} g3),
/// verified to close over the supplied pair list.
heap::FiniteHeap pii_heap(const HopfAlgebra& h, const std::vector<PairInInvolution>& pairs);

}  // namespace pw::hopf
