#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pw/freecat/pivotal.hpp"

#include <random>

using namespace pw::freecat;

namespace {

// random diagram of width n built from stacked generator layers
Diagram random_diagram(std::uint32_t n, std::mt19937& rng, int layers = 4) {
    Diagram d = identity(n);
    for (int layer = 0; layer < layers; ++layer) {
        std::uint32_t w = d.m;
        Diagram next = identity(0);
        std::uint32_t used = 0;
        while (used < w) {
            switch (rng() % 5) {
                case 0:
                    if (used + 2 <= w) {
                        next = tensor(next, sigma());
                        used += 2;
                        continue;
                    }
                    break;
                case 1:
                    if (used + 2 <= w) {
                        next = tensor(next, ev());
                        used += 2;
                        continue;
                    }
                    break;
                case 2:
                    next = tensor(next, rho());
                    ++used;
                    continue;
                case 3:
                    if (w <= 4) {  // widen only while the width stays small
                        next = tensor(next, coev());
                        continue;
                    }
                    break;
                default:
                    break;
            }
            next = tensor(next, identity(1));
            ++used;
        }
        d = compose(next, d);
    }
    return d;
}

// brute half-braiding oracle: naturality of the hexagon extension against
// every whiskered generator of width <= 4
bool natural_hb(const CentreObject& c) {
    std::vector<Diagram> gens{rho(), sigma(), ev(), coev()};
    for (const auto& g : gens)
        for (std::uint32_t a = 0; a <= 3; ++a)
            for (std::uint32_t b = 0; b <= 3; ++b) {
                Diagram h = tensor(identity(a), tensor(g, identity(b)));
                if (h.n > 4 || h.m > 4) continue;
                Diagram lhs = compose(hb_component(c, h.m), tensor(identity(c.n), h));
                Diagram rhs = compose(tensor(h, identity(c.n)), hb_component(c, h.n));
                if (!(lhs == rhs)) return false;
            }
    return true;
}

}  // namespace

TEST_CASE("defining relations hold in the normal-form engine") {
    for (const auto& [name, ok] : relation_checks()) {
        INFO(name);
        CHECK(ok);
    }
}

TEST_CASE("loop bookkeeping distinguishes the two circle species") {
    Diagram plain = compose(ev(), coev());
    CHECK(plain.plain_loops == 1);
    CHECK(plain.decorated_loops == 0);

    Diagram dec = compose(ev(), compose(tensor(rho(), identity(1)), coev()));
    CHECK(dec.plain_loops == 0);
    CHECK(dec.decorated_loops == 1);

    // two decorations on one circle cancel
    Diagram two = compose(ev(), compose(tensor(rho(), rho()), coev()));
    CHECK(two.plain_loops == 1);
    CHECK(two.decorated_loops == 0);

    CHECK(tensor(plain, dec).plain_loops == 1);
    CHECK(tensor(plain, dec).decorated_loops == 1);
}

TEST_CASE("snake identities and dual involution") {
    CHECK(compose(tensor(ev(), identity(1)), tensor(identity(1), coev())) == identity(1));
    CHECK(compose(tensor(identity(1), ev()), tensor(coev(), identity(1))) == identity(1));

    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        Diagram d = random_diagram(rng() % 4, rng);
        CHECK(dual(dual(d)) == d);
    }
}

TEST_CASE("1000 random interchange and associativity checks at widths <= 6") {
    std::mt19937 rng(99);
    for (int t = 0; t < 1000; ++t) {
        std::uint32_t n1 = rng() % 3, n2 = rng() % 3;
        Diagram f1 = random_diagram(n1, rng, 2);
        Diagram f2 = random_diagram(f1.m, rng, 2);
        Diagram g1 = random_diagram(n2, rng, 2);
        Diagram g2 = random_diagram(g1.m, rng, 2);
        // interchange law
        CHECK(tensor(compose(f2, f1), compose(g2, g1)) ==
              compose(tensor(f2, g2), tensor(f1, g1)));
        // associativity of tensor and unitality of the empty diagram
        Diagram h = random_diagram(rng() % 2, rng, 1);
        CHECK(tensor(tensor(f1, g1), h) == tensor(f1, tensor(g1, h)));
        CHECK(tensor(identity(0), f1) == f1);
        CHECK(tensor(f1, identity(0)) == f1);
        // identities are neutral for composition
        CHECK(compose(identity(f1.m), f1) == f1);
        CHECK(compose(f1, identity(f1.n)) == f1);
    }
}

TEST_CASE("composition is associative on random triples") {
    std::mt19937 rng(123);
    for (int t = 0; t < 300; ++t) {
        Diagram f = random_diagram(rng() % 4, rng, 2);
        Diagram g = random_diagram(f.m, rng, 2);
        Diagram h = random_diagram(g.m, rng, 2);
        CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    }
}

TEST_CASE("automorphisms of X^n are exactly Sym(n) x Z2^n for n <= 3") {
    for (std::uint32_t n = 0; n <= 3; ++n) {
        auto all = all_automorphisms(n);
        std::size_t expect = 1;
        for (std::uint32_t i = 2; i <= n; ++i) expect *= i;
        expect <<= n;
        CHECK(all.size() == expect);
        for (const auto& d : all) {
            Automorphism a = decompose_automorphism(d);
            CHECK(automorphism_diagram(a) == d);  // factorization is unique
            CHECK(compose(d, inverse_automorphism(d)) == identity(n));
            CHECK(compose(inverse_automorphism(d), d) == identity(n));
        }
        // distinctness: all normal forms differ pairwise
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(!(all[i] == all[j]));
    }
    CHECK_THROWS_AS(decompose_automorphism(compose(coev(), ev())), NotAutomorphism);
}

TEST_CASE("text round-trip") {
    std::mt19937 rng(5);
    for (int t = 0; t < 100; ++t) {
        Diagram d = random_diagram(rng() % 4, rng);
        CHECK(from_text(to_text(d)) == d);
    }
    CHECK_THROWS_AS(from_text("garbage"), TextParseError);
}

TEST_CASE("half-braiding classification: counts and brute oracle") {
    CHECK(enumerate_half_braidings(0).size() == 2);
    CHECK(enumerate_half_braidings(1).size() == 4);
    CHECK(enumerate_half_braidings(2).size() == 12);
    CHECK(enumerate_half_braidings(3).size() == 40);

    for (std::uint32_t n = 0; n <= 2; ++n) {
        for (const auto& c : enumerate_half_braidings(n)) CHECK(natural_hb(c));
        // converse: every natural candidate sigma(f (x) rho^j) is in the family
        std::size_t brute = 0;
        for (const auto& ad : all_automorphisms(n)) {
            Automorphism a = decompose_automorphism(ad);
            for (std::uint8_t j = 0; j < 2; ++j) {
                HalfBraidingParam p{n, a.s, a.phi, j};
                if (natural_hb(CentreObject{n, p})) {
                    ++brute;
                    CHECK(is_valid_param(p));
                } else {
                    CHECK(!is_valid_param(p));
                }
            }
        }
        CHECK(brute == enumerate_half_braidings(n).size());
    }
}

TEST_CASE("hexagon glue law for iterated components") {
    for (const auto& c : enumerate_half_braidings(2))
        for (std::uint32_t a = 0; a <= 2; ++a)
            for (std::uint32_t b = 0; b <= 2; ++b)
                CHECK(compose(tensor(identity(a), hb_component(c, b)),
                              tensor(hb_component(c, a), identity(b))) ==
                      hb_component(c, a + b));
}

TEST_CASE("centre tensor concatenates signatures and stays in the family") {
    for (std::uint32_t n1 = 0; n1 <= 2; ++n1)
        for (std::uint32_t n2 = 0; n2 <= 2; ++n2)
            for (const auto& c1 : enumerate_half_braidings(n1))
                for (const auto& c2 : enumerate_half_braidings(n2)) {
                    CentreObject prod = centre_tensor(c1, c2);
                    std::vector<std::uint8_t> cat = signature(c1);
                    cat.insert(cat.end(), signature(c2).begin(), signature(c2).end());
                    CHECK(signature(prod) == cat);
                    CHECK(prod.hb.j == ((c1.hb.j + c2.hb.j) & 1));
                }
}

TEST_CASE("centre dual is an involution") {
    for (std::uint32_t n = 0; n <= 3; ++n)
        for (const auto& c : enumerate_half_braidings(n)) {
            CentreObject d = centre_dual(c);
            CHECK(d.n == n);
            CHECK(centre_dual(d) == c);
        }
}

TEST_CASE("lift_check: engine agrees with the closed formula, exhaustively at n = 2") {
    auto objs = enumerate_half_braidings(2);
    std::size_t cases = 0, lifts = 0;
    for (const auto& g : all_automorphisms(2))
        for (const auto& c1 : objs)
            for (const auto& c2 : objs) {
                LiftReport rep = lift_check(g, c1, c2);
                CHECK(rep.agree());
                ++cases;
                if (rep.engine) ++lifts;
            }
    CHECK(cases == 8 * 12 * 12);
    CHECK(lifts == 96);

    for (const auto& g : all_automorphisms(1))
        for (const auto& c1 : enumerate_half_braidings(1))
            for (const auto& c2 : enumerate_half_braidings(1))
                CHECK(lift_check(g, c1, c2).agree());
}

TEST_CASE("zeta value table on the four width-1 objects") {
    for (const auto& c : enumerate_half_braidings(1)) {
        Diagram expected = c.hb.phi[0] ? rho() : identity(1);
        CHECK(zeta(c) == expected);
    }
}

TEST_CASE("the three assignments verify as pivotal at bound 3") {
    for (const PivotalAssignment& p :
         {lift_id_assignment(), lift_rho_assignment(), zeta_assignment()}) {
        PivotalReport rep = verify_pivotal(p, 3);
        INFO(p.name, ": ", rep.witness);
        CHECK(rep.automorphic);
        CHECK(rep.monoidal);
        CHECK(rep.natural);
    }
    // a broken assignment is caught
    PivotalAssignment bad{"bad",
                          [](const CentreObject& c) { return c.n == 1 ? rho() : identity(c.n); }};
    CHECK(!verify_pivotal(bad, 3).passed());
}

TEST_CASE("heap closure of the three assignments needs a fourth element") {
    PivotalAssignment pid = lift_id_assignment();
    PivotalAssignment prho = lift_rho_assignment();
    PivotalAssignment pz = zeta_assignment();

    PivotalAssignment zbar{"", {}};
    bool threw = false;
    try {
        (void)piv_heap({pid, prho, pz}, 3);
    } catch (const ClosureViolation& v) {
        threw = true;
        zbar = PivotalAssignment{"zeta_bar", v.composite.value};
    }
    REQUIRE(threw);

    // the escaping composite is the complement of the signature, verified pivotal
    CHECK(verify_pivotal(zbar, 3).passed());
    for (const auto& c : enumerate_half_braidings(1))
        CHECK(zbar.value(c) == (c.hb.phi[0] ? identity(1) : rho()));

    pw::heap::FiniteHeap hp = piv_heap({pid, prho, pz, zbar}, 3);
    CHECK(hp.size() == 4);
    CHECK(!pw::heap::check_heap(hp).has_value());
    CHECK(!pw::heap::check_middle_associativity(hp).has_value());
}

TEST_CASE("non-inducedness report") {
    NonInducednessReport rep = non_inducedness_report(3);
    CHECK(rep.pic_size == 2);
    CHECK(rep.lift_id_pivotal);
    CHECK(rep.lift_rho_pivotal);
    CHECK(rep.zeta_pivotal);
    CHECK(rep.distinct_verified >= 3);
    CHECK(!rep.zeta_induced);
    CHECK(rep.passed());
    // zeta takes both values on width-1 objects while constant lifts cannot
    bool val_id = false, val_rho = false;
    for (const auto& c : enumerate_half_braidings(1)) {
        if (zeta(c) == identity(1)) val_id = true;
        if (zeta(c) == rho()) val_rho = true;
    }
    CHECK(val_id);
    CHECK(val_rho);
}
