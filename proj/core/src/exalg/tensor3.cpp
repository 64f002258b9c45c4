#include "pw/exalg/tensor3.hpp"

#include <algorithm>
#include <stdexcept>

namespace pw::exalg {

void Tensor3::add(std::uint32_t i, std::uint32_t j, std::uint32_t k, const Scalar& c) {
    if (i >= d1_ || j >= d2_ || k >= d3_) throw std::out_of_range("Tensor3::add: index out of range");
    Scalar cc = field_.canon(c);
    if (cc == 0) return;
    auto& v = slices_[key(i, j)];
    for (auto it = v.begin(); it != v.end(); ++it) {
        if (it->first == k) {
            it->second = field_.add(it->second, cc);
            if (it->second == 0) v.erase(it);
            return;
        }
    }
    v.emplace_back(k, cc);
}

void Tensor3::set(std::uint32_t i, std::uint32_t j, std::uint32_t k, const Scalar& c) {
    if (i >= d1_ || j >= d2_ || k >= d3_) throw std::out_of_range("Tensor3::set: index out of range");
    auto& v = slices_[key(i, j)];
    std::erase_if(v, [k](const auto& p) { return p.first == k; });
    Scalar cc = field_.canon(c);
    if (cc != 0) v.emplace_back(k, cc);
}

Scalar Tensor3::get(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    auto it = slices_.find(key(i, j));
    if (it == slices_.end()) return Scalar(0);
    for (const auto& [kk, c] : it->second)
        if (kk == k) return c;
    return Scalar(0);
}

std::vector<Tensor3::Entry> Tensor3::sorted_entries() const {
    std::vector<Entry> out;
    for (const auto& [kij, v] : slices_) {
        auto i = static_cast<std::uint32_t>(kij >> 32);
        auto j = static_cast<std::uint32_t>(kij & 0xffffffffu);
        for (const auto& [k, c] : v) out.push_back({i, j, k, c});
    }
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    return out;
}

const std::vector<std::pair<std::uint32_t, Scalar>>& Tensor3::slice(std::uint32_t i,
                                                                    std::uint32_t j) const {
    static const std::vector<std::pair<std::uint32_t, Scalar>> empty;
    auto it = slices_.find(key(i, j));
    return it == slices_.end() ? empty : it->second;
}

std::vector<Tensor3::Entry> Tensor3::fiber(std::uint32_t i) const {
    std::vector<Entry> out;
    for (const auto& [kij, v] : slices_) {
        if (static_cast<std::uint32_t>(kij >> 32) != i) continue;
        auto j = static_cast<std::uint32_t>(kij & 0xffffffffu);
        for (const auto& [k, c] : v) out.push_back({i, j, k, c});
    }
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.j, a.k) < std::tie(b.j, b.k);
    });
    return out;
}

std::vector<Scalar> Tensor3::apply_bilinear(const std::vector<Scalar>& x,
                                            const std::vector<Scalar>& y) const {
    if (x.size() != d1_ || y.size() != d2_)
        throw std::out_of_range("Tensor3::apply_bilinear: dimension mismatch");
    std::vector<Scalar> out(d3_, Scalar(0));
    for (std::size_t i = 0; i < d1_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < d2_; ++j) {
            if (y[j] == 0) continue;
            Scalar xy = field_.mul(x[i], y[j]);
            for (const auto& [k, c] : slice(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)))
                out[k] = field_.add(out[k], field_.mul(xy, c));
        }
    }
    return out;
}

}  // namespace pw::exalg
