#include "pw/heap/heap.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pw::heap {

FiniteHeap::FiniteHeap(std::vector<std::string> carrier,
                       std::function<std::size_t(std::size_t, std::size_t, std::size_t)> law)
    : carrier_(std::move(carrier)) {
    const std::size_t n = carrier_.size();
    table_.resize(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                std::size_t r = law(a, b, c);
                if (r >= n) throw HeapError("heap law result out of carrier");
                table_[(a * n + b) * n + c] = r;
            }
}

std::size_t FiniteHeap::op(std::size_t a, std::size_t b, std::size_t c) const {
    const std::size_t n = size();
    if (a >= n || b >= n || c >= n) throw HeapError("heap op: index out of carrier");
    return table_[(a * n + b) * n + c];
}

FiniteHeap make_raw_heap(std::vector<std::string> carrier, std::vector<std::size_t> table) {
    FiniteHeap h;
    const std::size_t n = carrier.size();
    if (table.size() != n * n * n) throw HeapError("heap table has wrong size");
    for (std::size_t r : table)
        if (r >= n) throw HeapError("heap law result out of carrier");
    h.carrier_ = std::move(carrier);
    h.table_ = std::move(table);
    return h;
}

FiniteGroup::FiniteGroup(std::vector<std::string> carrier, std::vector<std::size_t> mult_table,
                         std::size_t unit)
    : carrier_(std::move(carrier)), table_(std::move(mult_table)), unit_(unit) {
    const std::size_t n = carrier_.size();
    if (table_.size() != n * n) throw HeapError("group table has wrong size");
    if (unit_ >= n) throw HeapError("group unit out of carrier");
}

std::size_t FiniteGroup::inverse(std::size_t a) const {
    for (std::size_t b = 0; b < size(); ++b)
        if (mul(a, b) == unit_ && mul(b, a) == unit_) return b;
    throw HeapError("element has no inverse");
}

std::optional<AxiomWitness> FiniteGroup::check() const {
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a) {
        if (mul(unit_, a) != a || mul(a, unit_) != a) return AxiomWitness{"unit", {a}};
        bool has_inv = false;
        for (std::size_t b = 0; b < n; ++b)
            if (mul(a, b) == unit_ && mul(b, a) == unit_) has_inv = true;
        if (!has_inv) return AxiomWitness{"inverse", {a}};
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    return AxiomWitness{"associativity", {a, b, c}};
    return std::nullopt;
}

std::optional<AxiomWitness> check_heap(const FiniteHeap& h) {
    const std::size_t n = h.size();
    if (n > kMaxExhaustiveCarrier) throw HeapError("carrier too large for exhaustive check");
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t x = 0; x < n; ++x)
            if (h.op(g, g, x) != x || h.op(x, g, g) != x)
                return AxiomWitness{"malcev", {g, x}};
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t hh = 0; hh < n; ++hh)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        if (h.op(g, hh, h.op(i, j, k)) != h.op(h.op(g, hh, i), j, k))
                            return AxiomWitness{"outer_associativity", {g, hh, i, j, k}};
    return std::nullopt;
}

std::optional<AxiomWitness> check_middle_associativity(const FiniteHeap& h) {
    const std::size_t n = h.size();
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t hh = 0; hh < n; ++hh)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        if (h.op(g, h.op(j, i, hh), k) != h.op(h.op(g, hh, i), j, k))
                            return AxiomWitness{"middle_associativity", {g, hh, i, j, k}};
    return std::nullopt;
}

FiniteHeap heap_from_group(const FiniteGroup& g) {
    return FiniteHeap(g.carrier(), [&g](std::size_t a, std::size_t b, std::size_t c) {
        return g.mul(g.mul(a, g.inverse(b)), c);
    });
}

FiniteGroup group_from_pointed_heap(const FiniteHeap& h, std::size_t e) {
    if (h.size() == 0) throw HeapError("cannot point an empty heap");
    if (e >= h.size()) throw HeapError("base point out of carrier");
    const std::size_t n = h.size();
    std::vector<std::size_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a * n + b] = h.op(a, e, b);
    return FiniteGroup(h.carrier(), std::move(table), e);
}

bool is_heap_morphism(const std::vector<std::size_t>& f, const FiniteHeap& a, const FiniteHeap& b) {
    if (f.size() != a.size()) throw HeapError("morphism map has wrong domain size");
    for (std::size_t x : f)
        if (x >= b.size()) throw HeapError("morphism value out of codomain");
    const std::size_t n = a.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (f[a.op(x, y, z)] != b.op(f[x], f[y], f[z])) return false;
    return true;
}

QuotientResult quotient_heap(const FiniteHeap& h, const std::vector<std::size_t>& klass) {
    if (klass.size() != h.size()) throw HeapError("partition has wrong size");
    const std::size_t n = h.size();
    std::size_t m = 0;
    for (std::size_t k : klass) m = std::max(m, k + 1);

    // representative per class, in first-seen order
    std::vector<std::ptrdiff_t> rep(m, -1);
    for (std::size_t x = 0; x < n; ++x)
        if (rep[klass[x]] < 0) rep[klass[x]] = static_cast<std::ptrdiff_t>(x);
    for (std::size_t k = 0; k < m; ++k)
        if (rep[k] < 0) throw HeapError("partition has an empty class");

    // well-definedness: the class of <a,b,c> may depend only on classes
    std::map<std::array<std::size_t, 3>, std::size_t> seen;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                std::array<std::size_t, 3> key{klass[a], klass[b], klass[c]};
                std::size_t r = klass[h.op(a, b, c)];
                auto [it, inserted] = seen.emplace(key, r);
                if (!inserted && it->second != r)
                    return QuotientResult{std::nullopt, {a, b, c, it->second, r}};
            }

    std::vector<std::string> carrier(m);
    for (std::size_t k = 0; k < m; ++k)
        carrier[k] = "[" + h.carrier()[static_cast<std::size_t>(rep[k])] + "]";
    FiniteHeap q(carrier, [&](std::size_t a, std::size_t b, std::size_t c) {
        return klass[h.op(static_cast<std::size_t>(rep[a]), static_cast<std::size_t>(rep[b]),
                          static_cast<std::size_t>(rep[c]))];
    });
    return QuotientResult{q, {}};
}

}  // namespace pw::heap
