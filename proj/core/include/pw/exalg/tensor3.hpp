#pragma once

#include "pw/exalg/field.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace pw::exalg {

/// Sparse 3-index tensor. Encodes, depending on role, a bilinear map
/// e_i (x) e_j -> sum_k c e_k or a linear map e_i -> sum_{j,k} c e_j (x) e_k.
/// Zero coefficients are never stored; keys are unique.
class Tensor3 {
  public:
    struct Entry {
        std::uint32_t i, j, k;
        Scalar c;
        bool operator==(const Entry&) const = default;
    };

    Tensor3(Field f, std::size_t d1, std::size_t d2, std::size_t d3)
        : field_(f), d1_(d1), d2_(d2), d3_(d3) {}

    const Field& field() const { return field_; }
    std::size_t dim1() const { return d1_; }
    std::size_t dim2() const { return d2_; }
    std::size_t dim3() const { return d3_; }

    /// Adds c to the (i,j,k) coefficient, dropping it if the sum is zero.
    void add(std::uint32_t i, std::uint32_t j, std::uint32_t k, const Scalar& c);
    void set(std::uint32_t i, std::uint32_t j, std::uint32_t k, const Scalar& c);
    Scalar get(std::uint32_t i, std::uint32_t j, std::uint32_t k) const;

    /// Entries sorted by (i, j, k); canonical representation.
    std::vector<Entry> sorted_entries() const;

    /// All (k, c) with key (i, j) — the bilinear-map view.
    const std::vector<std::pair<std::uint32_t, Scalar>>& slice(std::uint32_t i, std::uint32_t j) const;

    /// All (j, k, c) with first index i — the coproduct view.
    std::vector<Entry> fiber(std::uint32_t i) const;

    bool operator==(const Tensor3& o) const {
        return d1_ == o.d1_ && d2_ == o.d2_ && d3_ == o.d3_ &&
               sorted_entries() == o.sorted_entries();
    }

    /// Bilinear application: z_k = sum_{i,j} t(i,j,k) x_i y_j.
    std::vector<Scalar> apply_bilinear(const std::vector<Scalar>& x,
                                       const std::vector<Scalar>& y) const;

  private:
    Field field_;
    std::size_t d1_, d2_, d3_;
    // keyed by (i << 32) | j
    std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint32_t, Scalar>>> slices_;
    static std::uint64_t key(std::uint32_t i, std::uint32_t j) {
        return (static_cast<std::uint64_t>(i) << 32) | j;
    }
};

}  // namespace pw::exalg
