#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pw/doubles/doubles.hpp"
#include "pw/doubles/modules.hpp"
#include "pw/doubles/pivots.hpp"

#include <algorithm>

using namespace pw::doubles;
using pw::exalg::Matrix;
using pw::exalg::Scalar;
using pw::hopf::HopfAlgebra;

namespace {

const char* kAlgebras[] = {"kc2_f5", "kc3_f7", "s3_f7", "sweedler_f5", "taft3_f7"};

HopfAlgebra load_named(const std::string& name) {
    return pw::hopf::load_hopf(std::string(PW_DATA_DIR) + "/" + name + ".json");
}

}  // namespace

TEST_CASE("Drinfeld doubles are quasitriangular Hopf algebras") {
    for (const char* name : kAlgebras) {
        HopfAlgebra h = load_named(name);
        DoubleAlgebra d = build_drinfeld_double(h);  // construction is self-validating
        CHECK(d.dim() == h.dim * h.dim);
        INFO(name);
        // the dense axiom re-check grows as dim^3; run it below 81 dimensions
        if (d.dim() <= 36) CHECK(pw::hopf::check_axioms(d.alg).all_passed());
        RMatrixReport r = check_rmatrix(d);
        CHECK(r.intertwines_coproducts);
        CHECK(r.coproduct_left);
        CHECK(r.coproduct_right);
        CHECK(r.invertible);
    }
}

TEST_CASE("double of the 4-dimensional algebra has dimension 16") {
    DoubleAlgebra d = build_drinfeld_double(load_named("sweedler_f5"));
    CHECK(d.dim() == 16);
}

TEST_CASE("anti-double construction validates and differs from the double") {
    for (const char* name : kAlgebras) {
        HopfAlgebra h = load_named(name);
        DoubleAlgebra a = build_anti_double(h);  // validates associativity/unit
        CHECK(a.kind == Kind::anti);
        CHECK(a.dim() == h.dim * h.dim);
    }
    // on the self-dual 4-dim algebra the two multiplications differ as tensors
    HopfAlgebra sw = load_named("sweedler_f5");
    CHECK(!(build_drinfeld_double(sw).alg.mult == build_anti_double(sw).alg.mult));
}

TEST_CASE("double JSON export reloads and passes the axiom suite") {
    DoubleAlgebra d = build_drinfeld_double(load_named("kc2_f5"));
    pw::hopf::json j = double_to_json(d);
    HopfAlgebra back = pw::hopf::hopf_from_json(j);
    CHECK(back.dim == d.dim());
    CHECK(pw::hopf::check_axioms(back).all_passed());
    CHECK(j.contains("rmatrix"));
}

TEST_CASE("one-dimensional yd modules = pairs passing the yd law = D-modules") {
    for (const char* name : kAlgebras) {
        HopfAlgebra h = load_named(name);
        DoubleAlgebra dd = build_drinfeld_double(h);
        auto chars = pw::hopf::enumerate_characters(h);
        auto gls = pw::hopf::enumerate_group_likes(h);
        for (const auto& beta : chars)
            for (const auto& g : gls) {
                YDModule m = one_dim_module(h, beta, g, Flavor::yd);
                bool compat = yd_compat_check(h, m).passed();
                bool dmod = module_correspondence_check(dd, m);
                INFO(name);
                CHECK(compat == dmod);
            }
    }
}

TEST_CASE("three statements of the main equivalence agree") {
    for (const char* name : kAlgebras) {
        HopfAlgebra h = load_named(name);
        auto pairs = pw::hopf::find_pairs_in_involution(h);
        auto ayd = enumerate_one_dim_ayd(h);

        // (1) <-> (2): pairs in involution = one-dimensional ayd classes
        REQUIRE(pairs.size() == ayd.size());
        for (const auto& p : pairs) CHECK(std::find(ayd.begin(), ayd.end(), p) != ayd.end());

        // (2) <-> (3): every class yields a verified algebra iso D(h) -> A(h),
        // and each class is an A(h)-module
        DoubleAlgebra dd = build_drinfeld_double(h);
        DoubleAlgebra ad = build_anti_double(h);
        for (const auto& p : ayd) {
            Matrix f = iso_from_pair(h, p);
            CHECK(is_algebra_iso(f, dd, ad).passed);
            YDModule m = one_dim_module(h, p.beta, p.g, Flavor::ayd);
            CHECK(module_correspondence_check(ad, m));
        }
    }
}

TEST_CASE("iso twist fails off the pair set") {
    HopfAlgebra h = load_named("sweedler_f5");
    auto pairs = pw::hopf::find_pairs_in_involution(h);
    auto chars = pw::hopf::enumerate_characters(h);
    auto gls = pw::hopf::enumerate_group_likes(h);
    int non_pairs = 0;
    for (const auto& beta : chars)
        for (const auto& g : gls) {
            pw::hopf::PairInInvolution cand{beta, g};
            if (std::find(pairs.begin(), pairs.end(), cand) != pairs.end()) continue;
            ++non_pairs;
            CHECK_THROWS_AS((void)iso_from_pair(h, cand), NotAnIsomorphism);
        }
    CHECK(non_pairs == 2);
}

TEST_CASE("pivots: kappa lands in the pivot set and is a heap morphism") {
    for (const char* name : kAlgebras) {
        HopfAlgebra h = load_named(name);
        DoubleAlgebra d = build_drinfeld_double(h);
        auto pairs = pw::hopf::find_pairs_in_involution(h);
        auto pivots = pivotal_elements(d);
        CHECK(pivots.size() == pairs.size());

        std::vector<std::vector<Scalar>> k;
        for (const auto& p : pairs) {
            PivotalElement l = kappa(d, p);
            CHECK(std::find(pivots.begin(), pivots.end(), l) != pivots.end());
            k.push_back(l.element);
        }
        // exhaustive heap-morphism check over all triples
        pw::heap::FiniteHeap hp = pw::hopf::pii_heap(h, pairs);
        for (std::size_t x = 0; x < pairs.size(); ++x)
            for (std::size_t y = 0; y < pairs.size(); ++y)
                for (std::size_t z = 0; z < pairs.size(); ++z) {
                    auto inv = pw::exalg::apply(d.alg.antipode, k[y]);
                    auto t = d.alg.multiply(d.alg.multiply(k[x], inv), k[z]);
                    CHECK(k[hp.op(x, y, z)] == t);
                }
    }
}

TEST_CASE("symmetric-centre quotient: kappa constant on orbits, iota injective") {
    for (const char* name : kAlgebras) {
        HopfAlgebra h = load_named(name);
        QuotientIotaReport q = quotient_and_iota_check(h);
        INFO(name);
        CHECK(q.symmetric_classes.size() == 1);  // only the trivial class
        CHECK(q.orbit_count == q.ayd_classes.size());
        CHECK(q.kappa_constant_on_orbits);
        CHECK(q.iota_injective);
    }
}

TEST_CASE("pivot condition is exactly S^2 = Ad_l, checked directly") {
    HopfAlgebra h = load_named("taft3_f7");
    DoubleAlgebra d = build_drinfeld_double(h);
    Matrix s2 = pw::hopf::antipode_squared(d.alg);
    for (const auto& l : pivotal_elements(d)) {
        CHECK(pw::hopf::is_group_like(d.alg, l.element));
        pw::hopf::GroupLike gl{l.element};
        CHECK(adjoint_action_group_like(d.alg, gl) == s2);
    }
}
