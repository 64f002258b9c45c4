#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pw/heap/heap.hpp"

#include <array>

using namespace pw::heap;

namespace {

FiniteGroup cyclic(std::size_t n) {
    std::vector<std::string> names;
    std::vector<std::size_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
    return FiniteGroup(names, table, 0);
}

// S3 as permutations of {0,1,2} in lexicographic order
FiniteGroup sym3() {
    std::vector<std::array<int, 3>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                          {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const std::array<int, 3>& p) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return i;
        return perms.size();
    };
    std::vector<std::string> names;
    for (const auto& p : perms)
        names.push_back(std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]));
    std::vector<std::size_t> table(36);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            table[a * 6 + b] = index_of(c);
        }
    return FiniteGroup(names, table, 0);
}

}  // namespace

TEST_CASE("group axioms hold for the fixtures") {
    CHECK(!cyclic(2).check().has_value());
    CHECK(!cyclic(3).check().has_value());
    CHECK(!sym3().check().has_value());
}

TEST_CASE("group -> heap -> group round-trip at every base point") {
    for (const FiniteGroup& g : {cyclic(2), cyclic(3), sym3()}) {
        FiniteHeap h = heap_from_group(g);
        CHECK(!check_heap(h).has_value());
        CHECK(!check_middle_associativity(h).has_value());
        for (std::size_t e = 0; e < h.size(); ++e) {
            FiniteGroup back = group_from_pointed_heap(h, e);
            CHECK(!back.check().has_value());
            CHECK(back.unit() == e);
            CHECK(back.size() == g.size());
            // pointing at the original unit recovers the original table
            if (e == g.unit())
                for (std::size_t a = 0; a < g.size(); ++a)
                    for (std::size_t b = 0; b < g.size(); ++b)
                        CHECK(back.mul(a, b) == g.mul(a, b));
            // the heap of the re-pointed group is the original heap
            CHECK(heap_from_group(back) == h);
        }
    }
}

TEST_CASE("empty heap is accepted") {
    FiniteHeap e = FiniteHeap::empty();
    CHECK(e.size() == 0);
    CHECK(!check_heap(e).has_value());
    CHECK(!check_middle_associativity(e).has_value());
}

TEST_CASE("broken ternary tables are rejected with a witness") {
    // constant law on 2 elements: <a,b,c> = 0 violates unitality <a,a,b> = b
    FiniteHeap bad = make_raw_heap({"x", "y"}, std::vector<std::size_t>(8, 0));
    auto w = check_heap(bad);
    REQUIRE(w.has_value());
    CHECK(!w->axiom.empty());
}

TEST_CASE("heap morphisms and quotients") {
    FiniteGroup z6 = cyclic(6);
    FiniteHeap h6 = heap_from_group(z6);
    FiniteHeap h3 = heap_from_group(cyclic(3));
    FiniteHeap h2 = heap_from_group(cyclic(2));

    std::vector<std::size_t> mod3(6), mod2(6), skew(6);
    for (std::size_t i = 0; i < 6; ++i) {
        mod3[i] = i % 3;
        mod2[i] = i % 2;
        skew[i] = (i + 1) % 3;  // a translate of mod3 is still a heap morphism
    }
    CHECK(is_heap_morphism(mod3, h6, h3));
    CHECK(is_heap_morphism(mod2, h6, h2));
    CHECK(is_heap_morphism(skew, h6, h3));
    std::vector<std::size_t> not_mor{0, 0, 1, 0, 1, 1};
    CHECK(!is_heap_morphism(not_mor, h6, h2));

    QuotientResult q = quotient_heap(h6, mod3);
    REQUIRE(q.heap.has_value());
    CHECK(q.heap->size() == 3);
    CHECK(!check_heap(*q.heap).has_value());

    // partition that is not a congruence
    std::vector<std::size_t> badpart{0, 0, 0, 1, 1, 1};
    QuotientResult qb = quotient_heap(h6, badpart);
    CHECK(!qb.heap.has_value());
    CHECK(!qb.ill_defined_witness.empty());
}

TEST_CASE("middle associativity is a consequence, tested as a theorem") {
    for (const FiniteGroup& g : {cyclic(2), cyclic(3), sym3(), cyclic(6)}) {
        FiniteHeap h = heap_from_group(g);
        REQUIRE(!check_heap(h).has_value());
        CHECK(!check_middle_associativity(h).has_value());
    }
}

TEST_CASE("oversized carriers are rejected from exhaustive checking") {
    FiniteHeap big = heap_from_group(cyclic(65));
    CHECK_THROWS_AS((void)check_heap(big), HeapError);
}
