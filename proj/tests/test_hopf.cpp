#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pw/hopf/hopf.hpp"
#include "pw/hopf/io.hpp"

#include <algorithm>
#include <random>

using namespace pw::hopf;
using pw::exalg::Scalar;

namespace {

const char* kAlgebras[] = {"kc2_f5", "kc3_f7", "s3_f7", "sweedler_f5", "taft3_f7"};

std::string data_path(const std::string& name) {
    return std::string(PW_DATA_DIR) + "/" + name + ".json";
}

HopfAlgebra load_named(const std::string& name) { return load_hopf(data_path(name)); }

// mutates one structure-constant entry of the JSON form and reloads
HopfAlgebra mutate(const json& j, std::mt19937& rng) {
    json m = j;
    std::uint64_t p = m["field"]["p"].get<std::uint64_t>();
    const char* arrays[] = {"mult", "comult", "antipode"};
    for (;;) {
        const char* key = arrays[rng() % 3];
        auto& arr = m[key];
        if (arr.empty()) continue;
        auto& entry = arr[rng() % arr.size()];
        auto& coeff = entry[entry.size() - 1];
        std::uint64_t c = coeff.get<std::uint64_t>();
        std::uint64_t delta = 1 + rng() % (p - 1);
        coeff = (c + delta) % p;
        return hopf_from_json(m);
    }
}

// brute-force oracle: scan all p^dim functionals for characters
std::vector<std::vector<Scalar>> brute_characters(const HopfAlgebra& h) {
    std::vector<std::vector<Scalar>> out;
    std::uint64_t p = h.field.p();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < h.dim; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<Scalar> beta(h.dim);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < h.dim; ++i) {
            beta[i] = Scalar(c % p);
            c /= p;
        }
        if (is_character(h, beta)) out.push_back(beta);
    }
    return out;
}

}  // namespace

TEST_CASE("all bundled algebras satisfy every Hopf axiom") {
    for (const char* name : kAlgebras) {
        HopfAlgebra h = load_named(name);
        AxiomReport rep = check_axioms(h);
        INFO(name, ": ", rep.failures().empty() ? "" : rep.failures()[0]);
        CHECK(rep.all_passed());
    }
}

TEST_CASE("json round-trip preserves the algebra") {
    for (const char* name : kAlgebras) {
        HopfAlgebra h = load_named(name);
        HopfAlgebra back = hopf_from_json(hopf_to_json(h));
        CHECK(back.name == h.name);
        CHECK(back.field == h.field);
        CHECK(back.mult == h.mult);
        CHECK(back.comult == h.comult);
        CHECK(back.antipode == h.antipode);
        CHECK(back.unit == h.unit);
        CHECK(back.counit == h.counit);
    }
}

TEST_CASE("random single-entry mutations each break an axiom") {
    std::mt19937 rng(2024);
    for (const char* name : kAlgebras) {
        json j = load_json_file(data_path(name));
        int broken = 0;
        for (int t = 0; t < 50; ++t) {
            HopfAlgebra m = mutate(j, rng);
            if (!check_axioms(m).all_passed()) ++broken;
        }
        INFO(name);
        CHECK(broken == 50);
    }
}

TEST_CASE("malformed input raises ParseError") {
    CHECK_THROWS_AS(hopf_from_json(json{{"broken", true}}), ParseError);
    CHECK_THROWS_AS(load_hopf("/nonexistent/file.json"), ParseError);
    json j = load_json_file(data_path("kc2_f5"));
    j["field"]["p"] = 6;
    CHECK_THROWS(hopf_from_json(j));
}

TEST_CASE("group-like and character counts") {
    struct Expect {
        const char* name;
        std::size_t grouplikes, characters;
    };
    // counts frozen from exhaustive scans (brute oracle below re-derives the
    // character counts for the small-dimensional algebras); the group algebra
    // of S3 has all six group elements group-like but only two characters
    for (const Expect& e : {Expect{"kc2_f5", 2, 2}, Expect{"kc3_f7", 3, 3}, Expect{"s3_f7", 6, 2},
                            Expect{"sweedler_f5", 2, 2}, Expect{"taft3_f7", 3, 3}}) {
        HopfAlgebra h = load_named(e.name);
        CHECK(enumerate_group_likes(h).size() == e.grouplikes);
        CHECK(enumerate_characters(h).size() == e.characters);
    }
}

TEST_CASE("character enumeration matches the brute p^dim oracle on small algebras") {
    for (const char* name : {"kc2_f5", "kc3_f7", "sweedler_f5"}) {
        HopfAlgebra h = load_named(name);
        auto fast = enumerate_characters(h);
        auto brute = brute_characters(h);
        REQUIRE(fast.size() == brute.size());
        for (const auto& c : fast)
            CHECK(std::find(brute.begin(), brute.end(), c.functional) != brute.end());
    }
}

TEST_CASE("noncommutative group algebra keeps its two characters") {
    // regression: the incremental span must stay fully reduced, otherwise the
    // commutator ideal of kS3 gains phantom rank and the character set empties
    HopfAlgebra h = load_named("s3_f7");
    auto chars = enumerate_characters(h);
    REQUIRE(chars.size() == 2);
    // the counit is among them
    CHECK(std::find(chars.begin(), chars.end(), counit_character(h)) != chars.end());
    // both are multiplicative and unital by construction; check the sign character
    for (const auto& c : chars) CHECK(is_character(h, c.functional));
}

TEST_CASE("characters and group-likes form groups under convolution") {
    for (const char* name : kAlgebras) {
        HopfAlgebra h = load_named(name);
        auto chars = enumerate_characters(h);
        auto gls = enumerate_group_likes(h);
        for (const auto& a : chars) {
            CHECK(character_convolve(h, a, character_inverse(h, a)) == counit_character(h));
            for (const auto& b : chars) {
                Character ab = character_convolve(h, a, b);
                CHECK(std::find(chars.begin(), chars.end(), ab) != chars.end());
            }
        }
        for (const auto& a : gls) {
            CHECK(group_like_mul(h, a, group_like_inverse(h, a)) == unit_group_like(h));
            for (const auto& b : gls) {
                GroupLike ab = group_like_mul(h, a, b);
                CHECK(std::find(gls.begin(), gls.end(), ab) != gls.end());
            }
        }
    }
}

TEST_CASE("pairs in involution: frozen witnesses") {
    HopfAlgebra sw = load_named("sweedler_f5");
    auto pairs = find_pairs_in_involution(sw);
    REQUIRE(pairs.size() == 2);
    // (counit, g) and (beta, 1): g is the group-like basis vector e_1 and
    // beta is the character with beta(g) = -1
    Character eps = counit_character(sw);
    GroupLike one = unit_group_like(sw);
    bool has_eps_g = false, has_beta_1 = false;
    for (const auto& p : pairs) {
        if (p.beta == eps && !(p.g == one)) has_eps_g = true;
        if (!(p.beta == eps) && p.g == one) has_beta_1 = true;
    }
    CHECK(has_eps_g);
    CHECK(has_beta_1);

    CHECK(find_pairs_in_involution(load_named("kc2_f5")).size() == 4);
    CHECK(find_pairs_in_involution(load_named("kc3_f7")).size() == 9);
    CHECK(find_pairs_in_involution(load_named("s3_f7")).size() == 2);
    CHECK(find_pairs_in_involution(load_named("taft3_f7")).size() == 3);
}

TEST_CASE("pair condition is the adjoint identity, verified directly") {
    for (const char* name : kAlgebras) {
        HopfAlgebra h = load_named(name);
        pw::exalg::Matrix s2 = antipode_squared(h);
        for (const auto& p : find_pairs_in_involution(h)) {
            pw::exalg::Matrix lhs = adjoint_action_group_like(h, p.g);
            pw::exalg::Matrix rhs =
                pw::exalg::mat_mul(adjoint_action_character(h, p.beta), s2);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("pair heaps close and satisfy the heap axioms") {
    for (const char* name : kAlgebras) {
        HopfAlgebra h = load_named(name);
        auto pairs = find_pairs_in_involution(h);
        REQUIRE(!pairs.empty());
        pw::heap::FiniteHeap hp = pii_heap(h, pairs);
        CHECK(hp.size() == pairs.size());
        CHECK(!pw::heap::check_heap(hp).has_value());
        CHECK(!pw::heap::check_middle_associativity(hp).has_value());
    }
}

TEST_CASE("dual algebra is a Hopf algebra and duality is involutive") {
    for (const char* name : {"kc2_f5", "sweedler_f5", "taft3_f7"}) {
        HopfAlgebra h = load_named(name);
        HopfAlgebra d = dual(h);
        CHECK(check_axioms(d).all_passed());
        HopfAlgebra dd = dual(d);
        CHECK(dd.mult == h.mult);
        CHECK(dd.comult == h.comult);
        CHECK(dd.antipode == h.antipode);
    }
}

TEST_CASE("enumeration guards") {
    HopfAlgebra h = load_named("sweedler_f5");
    CHECK_THROWS_AS(enumerate_characters(h, 2), SearchSpaceTooLarge);
    HopfAlgebra q = h;
    q.field = pw::exalg::Field::rationals();
    CHECK_THROWS_AS(enumerate_characters(q), pw::hopf::EnumerationError);
}
