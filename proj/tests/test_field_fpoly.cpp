#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "dmcode/field.hpp"
#include "dmcode/fpoly.hpp"

using namespace dmcode;

namespace {

// standalone fields for these tests; towers get their own suite
struct Fixture {
    Fq f2{2, 1};
    Fq f3{3, 1};
    ExtField F4{&f2, {1, 1, 1}, "F4"};            // w^2+w+1
    ExtField F9{&f3, {1, 0, 1}, "F9"};            // i^2+1
    ExtField F27{&f3, {1, 2, 0, 1}, "F27"};       // a^3-a+1
    ExtField L3{&f3, {0, 1}, "F3"};               // degree-1 shell over F3
    ExtField L2{&f2, {0, 1}, "F2"};
};

FFElem el(const ExtField& F, std::initializer_list<uint8_t> coords) {
    return {&F, ExtField::Vec(coords)};
}

} // namespace

TEST_CASE("cubic extension of F3 realizes a^3 = a - 1") {
    Fixture fx;
    FFElem a = {&fx.F27, fx.F27.gen()};
    FFElem lhs = a.pow(3);
    FFElem rhs = a - el(fx.F27, {1, 0, 0});
    CHECK(lhs == rhs);
    CHECK(fx.F27.card() == 27);
}

TEST_CASE("F4 generator cubes to one and inverts to its square") {
    Fixture fx;
    FFElem w = {&fx.F4, fx.F4.gen()};
    CHECK(w.pow(3) == el(fx.F4, {1, 0}));
    CHECK(w.inv() == w * w);
    CHECK(w.frobenius(1) == w * w);
    CHECK(w.frobenius(2) == w);       // full orbit
    CHECK(w.frobenius(-1) == w * w);  // negative exponents wrap
}

TEST_CASE("every nonzero element of F27 inverts") {
    Fixture fx;
    for (uint64_t i = 1; i < 27; ++i) {
        FFElem x = {&fx.F27, fx.F27.from_index(i)};
        CHECK(x * x.inv() == el(fx.F27, {1, 0, 0}));
    }
}

TEST_CASE("frobenius is the q-power map and respects products") {
    Fixture fx;
    for (uint64_t i = 0; i < 27; ++i) {
        FFElem x = {&fx.F27, fx.F27.from_index(i)};
        CHECK(x.frobenius(1) == x.pow(3));
        CHECK(x.frobenius(3) == x);
    }
    FFElem a = {&fx.F9, fx.F9.from_index(5)};
    FFElem b = {&fx.F9, fx.F9.from_index(7)};
    CHECK((a * b).frobenius(1) == a.frobenius(1) * b.frobenius(1));
    CHECK((a + b).frobenius(1) == a.frobenius(1) + b.frobenius(1));
}

TEST_CASE("index round trip covers the whole field") {
    Fixture fx;
    std::set<std::vector<uint8_t>> seen;
    for (uint64_t i = 0; i < 9; ++i) {
        auto v = fx.F9.from_index(i);
        CHECK(fx.F9.to_index(v) == i);
        seen.insert(v);
    }
    CHECK(seen.size() == 9);
    CHECK_THROWS(fx.F9.from_index(9));
}

TEST_CASE("mixed-field element operations are rejected") {
    Fixture fx;
    FFElem a = {&fx.F4, fx.F4.gen()};
    FFElem b = {&fx.F9, fx.F9.gen()};
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("division by zero throws") {
    Fixture fx;
    FFElem z = {&fx.F9, fx.F9.zero()};
    FFElem a = {&fx.F9, fx.F9.gen()};
    CHECK_THROWS_AS(a / z, std::domain_error);
    CHECK_THROWS_AS(z.inv(), std::domain_error);
}

TEST_CASE("divmod satisfies f = q*g + r with deg r < deg g") {
    Fixture fx;
    const ExtField* F = &fx.F9;
    uint64_t state = 11;
    auto rnd = [&]() { state = state * 2862933555777941757ULL + 3037000493ULL; return state; };
    for (int trial = 0; trial < 50; ++trial) {
        FPoly f(F), g(F);
        int df = (int)(rnd() % 6), dg = (int)(rnd() % 4);
        for (int i = 0; i <= df; ++i) f.set_coeff(i, {F, F->from_index(rnd() % 9)});
        for (int i = 0; i < dg; ++i) g.set_coeff(i, {F, F->from_index(rnd() % 9)});
        g.set_coeff(dg, {F, F->from_index(1 + rnd() % 8)});     // force nonzero lead
        auto [q, r] = fpoly_divmod(f, g);
        CHECK(q * g + r == f);
        CHECK(r.degree() < g.degree());
    }
}

TEST_CASE("gcd is monic, divides both and absorbs common factors") {
    Fixture fx;
    const ExtField* F = &fx.L3;
    FPoly x = FPoly::x(F);
    FPoly f = (x + FPoly::one(F)) * (x * x + FPoly::one(F));
    FPoly g = (x + FPoly::one(F)) * x;
    FPoly d = fpoly_gcd(f, g);
    CHECK(d == x + FPoly::one(F));
    CHECK(fpoly_mod(f, d).is_zero());
    CHECK(fpoly_mod(g, d).is_zero());
    CHECK(fpoly_gcd(f, FPoly::zero(F)) == f.monic());
}

TEST_CASE("eval matches direct substitution") {
    Fixture fx;
    FPoly f = FPoly::from_base_ints(&fx.L3, {1, 2, 0, 1});     // T^3 + 2T + 1
    // values over F3: f(0)=1, f(1)=4=1, f(2)=13=1
    for (int v = 0; v < 3; ++v) {
        FFElem x = {&fx.L3, fx.L3.from_base((uint8_t)v)};
        CHECK(f.eval(x) == FFElem{&fx.L3, fx.L3.from_base(1)});
    }
}

TEST_CASE("derivative follows the prime characteristic") {
    Fixture fx;
    FPoly f = FPoly::from_base_ints(&fx.L3, {1, 2, 0, 1});     // T^3 + 2T + 1
    FPoly d = f.derivative();
    // 3T^2 vanishes in characteristic 3
    CHECK(d == FPoly::from_base_ints(&fx.L3, {2}));
    FPoly g = FPoly::from_base_ints(&fx.L2, {1, 0, 1});        // T^2 + 1
    CHECK(g.derivative().is_zero());
}

TEST_CASE("irreducibility agrees with a hand-checked list over F2") {
    Fixture fx;
    const ExtField* F = &fx.L2;
    auto P = [&](std::vector<long> v) { return FPoly::from_base_ints(F, v); };
    CHECK(fpoly_is_irreducible(P({1, 1, 1})));          // x^2+x+1
    CHECK(!fpoly_is_irreducible(P({1, 0, 1})));         // (x+1)^2
    CHECK(fpoly_is_irreducible(P({1, 1, 0, 1})));       // x^3+x+1
    CHECK(fpoly_is_irreducible(P({1, 0, 1, 1})));       // x^3+x^2+1
    CHECK(!fpoly_is_irreducible(P({1, 1, 1, 1})));      // (x+1)(x^2+1)... divisible by x+1
    CHECK(fpoly_is_irreducible(P({1, 1, 0, 0, 1})));    // x^4+x+1
    CHECK(!fpoly_is_irreducible(P({1, 0, 0, 0, 1})));   // (x+1)^4
    CHECK(!fpoly_is_irreducible(P({1, 0, 1, 0, 1})));   // (x^2+x+1)^2
}

TEST_CASE("monic irreducible counts match the necklace formula") {
    Fixture fx;
    // N_q(d) = (1/d) sum_{e|d} mu(e) q^{d/e}
    int n2[] = {0, 2, 1, 2, 3, 6, 9};
    for (int d = 1; d <= 6; ++d)
        CHECK((int)monic_irreducibles(&fx.L2, d).size() == n2[d]);
    int n3[] = {0, 3, 3, 8, 18};
    for (int d = 1; d <= 4; ++d)
        CHECK((int)monic_irreducibles(&fx.L3, d).size() == n3[d]);
    CHECK((int)monic_irreducibles(&fx.F4, 3).size() == 20);
}

TEST_CASE("the only irreducible quadratic over F2 is x^2+x+1") {
    Fixture fx;
    auto list = monic_irreducibles(&fx.L2, 2);
    REQUIRE(list.size() == 1);
    CHECK(list[0] == FPoly::from_base_ints(&fx.L2, {1, 1, 1}));
}

TEST_CASE("lex-first irreducible cubic over F3 is x^3+2x+1") {
    Fixture fx;
    FPoly f = lex_first_irreducible(&fx.L3, 3, 0);
    CHECK(f == FPoly::from_base_ints(&fx.L3, {1, 2, 0, 1}));
    // quadratic: x^2+1 comes first
    CHECK(lex_first_irreducible(&fx.L3, 2, 0) == FPoly::from_base_ints(&fx.L3, {1, 0, 1}));
}

TEST_CASE("roots are found exactly and sorted by index") {
    Fixture fx;
    // x^2+1 over F9 splits as (x-i)(x+i)
    FPoly f(&fx.F9);
    f.set_coeff(0, el(fx.F9, {1, 0}));
    f.set_coeff(2, el(fx.F9, {1, 0}));
    auto roots = fpoly_roots(f, 123);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == el(fx.F9, {0, 1}));
    CHECK(roots[1] == el(fx.F9, {0, 2}));
    // same polynomial has no roots downstairs
    FPoly g = FPoly::from_base_ints(&fx.L3, {1, 0, 1});
    CHECK(fpoly_roots(g, 123).empty());
}

TEST_CASE("roots of a product with repeated factors are reported once") {
    Fixture fx;
    const ExtField* F = &fx.F9;
    FPoly x = FPoly::x(F);
    FFElem a = el(fx.F9, {0, 1});
    FPoly f = (x - FPoly::constant(a)) * (x - FPoly::constant(a)) * x;
    auto roots = fpoly_roots(f, 5);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].is_zero());
    CHECK(roots[1] == a);
}

TEST_CASE("random irreducible search returns irreducibles of the right degree") {
    Fixture fx;
    for (uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        FPoly f = random_irreducible(&fx.L3, 5, seed);
        CHECK(f.degree() == 5);
        CHECK(f.is_monic());
        CHECK(fpoly_is_irreducible(f));
    }
}

TEST_CASE("field power map x -> x^{|F|^t} fixes exactly the right subfield") {
    Fixture fx;
    FPoly f = FPoly::from_base_ints(&fx.L2, {1, 1, 0, 1});     // irreducible cubic
    FPoly X = FPoly::x(&fx.L2);
    FPoly x8 = fpoly_field_power_mod(X, 3, f);
    CHECK(x8 == fpoly_mod(X, f));          // x^{2^3} = x mod f
    FPoly x2 = fpoly_field_power_mod(X, 1, f);
    CHECK(x2 != fpoly_mod(X, f));
}

TEST_CASE("minimal polynomial over the base field") {
    Fixture fx;
    FFElem i = {&fx.F9, fx.F9.gen()};
    FPoly m = min_poly_over_base(i, &fx.L3);
    CHECK(m == FPoly::from_base_ints(&fx.L3, {1, 0, 1}));      // x^2+1
    FFElem one = {&fx.F9, fx.F9.one()};
    CHECK(min_poly_over_base(one, &fx.L3) == FPoly::from_base_ints(&fx.L3, {2, 1}));   // x-1
    FFElem zero = {&fx.F9, fx.F9.zero()};
    CHECK(min_poly_over_base(zero, &fx.L3) == FPoly::x(&fx.L3));
    // min poly of the F27 generator must be its defining cubic
    FFElem a = {&fx.F27, fx.F27.gen()};
    CHECK(min_poly_over_base(a, &fx.L3) == FPoly::from_base_ints(&fx.L3, {1, 2, 0, 1}));
}

TEST_CASE("pow_mod matches naive exponentiation") {
    Fixture fx;
    FPoly f = FPoly::from_base_ints(&fx.L3, {1, 0, 1});
    FPoly X = FPoly::x(&fx.L3);
    FPoly acc = FPoly::one(&fx.L3);
    for (int e = 0; e < 12; ++e) {
        CHECK(fpoly_pow_mod(X, e, f) == fpoly_mod(acc, f));
        acc = acc * X;
    }
}
