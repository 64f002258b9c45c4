#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pw::heap {

struct HeapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Witness tuple for a failed heap/group axiom.
struct AxiomWitness {
    std::string axiom;
    std::vector<std::size_t> indices;
};

/// A finite set with a ternary operation, stored as a full table.
/// Elements are referred to by index into `carrier`.
class FiniteHeap {
  public:
    FiniteHeap(std::vector<std::string> carrier,
               std::function<std::size_t(std::size_t, std::size_t, std::size_t)> law);

    static FiniteHeap empty() { return FiniteHeap({}, {}); }

    std::size_t size() const { return carrier_.size(); }
    const std::vector<std::string>& carrier() const { return carrier_; }
    std::size_t op(std::size_t a, std::size_t b, std::size_t c) const;

    bool operator==(const FiniteHeap& o) const {
        return carrier_ == o.carrier_ && table_ == o.table_;
    }

  private:
    FiniteHeap() = default;
    std::vector<std::string> carrier_;
    std::vector<std::size_t> table_;  // size n^3, index ((a*n)+b)*n+c
    friend FiniteHeap make_raw_heap(std::vector<std::string>, std::vector<std::size_t>);
};

FiniteHeap make_raw_heap(std::vector<std::string> carrier, std::vector<std::size_t> table);

/// A finite group given by its multiplication table.
class FiniteGroup {
  public:
    FiniteGroup(std::vector<std::string> carrier, std::vector<std::size_t> mult_table,
                std::size_t unit);

    std::size_t size() const { return carrier_.size(); }
    const std::vector<std::string>& carrier() const { return carrier_; }
    std::size_t unit() const { return unit_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }
    std::size_t inverse(std::size_t a) const;

    /// nullopt when the table satisfies all group axioms; witness otherwise.
    std::optional<AxiomWitness> check() const;

  private:
    std::vector<std::string> carrier_;
    std::vector<std::size_t> table_;
    std::size_t unit_;
};

inline constexpr std::size_t kMaxExhaustiveCarrier = 64;

/// Exhaustive verification of outer associativity and the two unitality
/// identities; nullopt on success. Carriers above kMaxExhaustiveCarrier
/// are rejected (the associativity scan is O(n^5)).
std::optional<AxiomWitness> check_heap(const FiniteHeap& h);

/// Middle associativity <g,<j,i,h>,k> = <<g,h,i>,j,k>; holds automatically
/// for any verified heap, exposed so that this can be tested as a theorem.
std::optional<AxiomWitness> check_middle_associativity(const FiniteHeap& h);

/// <g,h,i> := g * h^{-1} * i.
FiniteHeap heap_from_group(const FiniteGroup& g);

/// g *_e h := <g,e,h>; inverse of g is <e,g,e>.
FiniteGroup group_from_pointed_heap(const FiniteHeap& h, std::size_t e);

/// Exhaustive check that f respects the ternary operation.
bool is_heap_morphism(const std::vector<std::size_t>& f, const FiniteHeap& a, const FiniteHeap& b);

/// Quotient by a partition (class index per element); nullopt with witness
/// when the induced law is not constant on classes.
struct QuotientResult {
    std::optional<FiniteHeap> heap;
    std::vector<std::size_t> ill_defined_witness;  // triple + clashing results when empty heap
};

QuotientResult quotient_heap(const FiniteHeap& h, const std::vector<std::size_t>& klass);

}  // namespace pw::heap
