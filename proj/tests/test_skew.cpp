#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dmcode/skew.hpp"

using namespace dmcode;

namespace {

SkewPoly random_skew(const FieldTower* T, int lvl, int maxdeg, std::mt19937_64& rng) {
    const ExtField& F = T->level(lvl);
    SkewPoly f(T, lvl);
    int d = (int)(rng() % (maxdeg + 1));
    for (int i = 0; i <= d; ++i) {
        ExtField::Vec v(F.degree());
        for (auto& x : v) x = (uint8_t)(rng() % F.base().q());
        f.c.push_back(std::move(v));
    }
    f.normalize();
    return f;
}

FFElem random_el(const ExtField& F, std::mt19937_64& rng) {
    ExtField::Vec v(F.degree());
    for (auto& x : v) x = (uint8_t)(rng() % F.base().q());
    return {&F, v};
}

} // namespace

TEST_CASE("commutation rule: tau moves constants through a Frobenius") {
    auto T = build_tower({2, 1, 0, {2}});
    const ExtField& F4 = T->level(2);
    FFElem w{&F4, F4.gen()};
    SkewPoly t = SkewPoly::tau(T.get(), 2);
    SkewPoly lhs = skew_mul(t, SkewPoly::constant(T.get(), w));
    // tau * w = w^2 tau
    SkewPoly rhs = skew_mul(SkewPoly::constant(T.get(), w * w), t);
    CHECK(lhs == rhs);
    CHECK(lhs.coeff(1) == w * w);
    CHECK(lhs.coeff(0).is_zero());
}

TEST_CASE("hand-expanded product over F4: (tau+w^2)(tau+w) = tau^2+1") {
    auto T = build_tower({2, 1, 0, {2}});
    const ExtField& F4 = T->level(2);
    FFElem w{&F4, F4.gen()};
    SkewPoly t = SkewPoly::tau(T.get(), 2);
    SkewPoly a = t + SkewPoly::constant(T.get(), w * w);
    SkewPoly b = t + SkewPoly::constant(T.get(), w);
    SkewPoly p = skew_mul(a, b);
    SkewPoly expect = SkewPoly::tau(T.get(), 2, 2) + SkewPoly::one(T.get(), 2);
    CHECK(p == expect);
}

TEST_CASE("right division of tau^2 by tau+w gives quotient tau+w^2, remainder 1") {
    auto T = build_tower({2, 1, 0, {2}});
    const ExtField& F4 = T->level(2);
    FFElem w{&F4, F4.gen()};
    SkewPoly f = SkewPoly::tau(T.get(), 2, 2);
    SkewPoly P = SkewPoly::tau(T.get(), 2) + SkewPoly::constant(T.get(), w);
    auto [g, e] = right_divmod(f, P);
    CHECK(g == SkewPoly::tau(T.get(), 2) + SkewPoly::constant(T.get(), w * w));
    CHECK(e == SkewPoly::one(T.get(), 2));
    CHECK(skew_mul(g, P) + e == f);
}

TEST_CASE("division trivia") {
    auto T = build_tower({3, 1, 0, {2}});
    std::mt19937_64 rng(9);
    SkewPoly f = random_skew(T.get(), 2, 4, rng);
    SkewPoly one = SkewPoly::one(T.get(), 2);
    auto [g, e] = right_divmod(f, one);
    CHECK(g == f);
    CHECK(e.is_zero());
    auto [lg, le] = left_divmod(f, one);
    CHECK(lg == f);
    CHECK(le.is_zero());
    // degree too small: quotient 0
    SkewPoly t2 = SkewPoly::tau(T.get(), 2, 2);
    auto [g2, e2] = right_divmod(one, t2);
    CHECK(g2.is_zero());
    CHECK(e2 == one);
    // zero dividend
    auto [g3, e3] = left_divmod(SkewPoly::zero(T.get(), 2), t2);
    CHECK(g3.is_zero());
    CHECK(e3.is_zero());
    CHECK_THROWS_AS(right_divmod(f, SkewPoly::zero(T.get(), 2)), std::domain_error);
}

TEST_CASE("ring axioms on random triples") {
    for (auto pm : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
        auto T = build_tower({pm.first, pm.second, 0, {3}});
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 40; ++trial) {
            SkewPoly a = random_skew(T.get(), 3, 4, rng);
            SkewPoly b = random_skew(T.get(), 3, 4, rng);
            SkewPoly c = random_skew(T.get(), 3, 4, rng);
            CHECK(skew_mul(skew_mul(a, b), c) == skew_mul(a, skew_mul(b, c)));
            CHECK(skew_mul(a, b + c) == skew_mul(a, b) + skew_mul(a, c));
            CHECK(skew_mul(a + b, c) == skew_mul(a, c) + skew_mul(b, c));
            if (!a.is_zero() && !b.is_zero()) {
                SkewPoly ab = skew_mul(a, b);
                CHECK(ab.deg() == a.deg() + b.deg());
                CHECK(ab.height() == a.height() + b.height());
            }
        }
    }
}

TEST_CASE("two-sided division round trips on random pairs") {
    auto T = build_tower({3, 1, 0, {1, 2, 4}});
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        SkewPoly f = random_skew(T.get(), 4, 6, rng);
        SkewPoly P = random_skew(T.get(), 4, 3, rng);
        if (P.is_zero()) continue;
        auto [g, e] = right_divmod(f, P);
        CHECK(skew_mul(g, P) + e == f);
        CHECK(e.deg() < P.deg());
        auto [lg, le] = left_divmod(f, P);
        CHECK(skew_mul(P, lg) + le == f);
        CHECK(le.deg() < P.deg());
        // uniqueness: recomputing is exact
        auto [g2, e2] = right_divmod(f, P);
        CHECK(g == g2);
        CHECK(e == e2);
    }
}

TEST_CASE("evaluation acts as a linearized polynomial") {
    auto T = build_tower({2, 1, 0, {2, 6}});
    const ExtField& L6 = T->level(6);
    std::mt19937_64 rng(31);
    SkewPoly t = SkewPoly::tau(T.get(), 2);
    for (int trial = 0; trial < 20; ++trial) {
        FFElem beta = random_el(L6, rng);
        CHECK(evaluate(t, beta) == beta.pow(2));
        const ExtField& F4 = T->level(2);
        FFElem a = random_el(F4, rng);
        CHECK(evaluate(SkewPoly::constant(T.get(), a), beta) == T->embed(a, 6) * beta);
    }
}

TEST_CASE("evaluation turns products into composition") {
    auto T = build_tower({3, 1, 0, {2, 6}});
    const ExtField& L6 = T->level(6);
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        SkewPoly f = random_skew(T.get(), 2, 4, rng);
        SkewPoly g = random_skew(T.get(), 2, 4, rng);
        FFElem beta = random_el(L6, rng);
        CHECK(evaluate(skew_mul(f, g), beta) == evaluate(f, evaluate(g, beta)));
    }
}

TEST_CASE("evaluation is F_q-linear") {
    auto T = build_tower({3, 1, 0, {2}});
    const ExtField& F9 = T->level(2);
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        SkewPoly f = random_skew(T.get(), 2, 3, rng);
        FFElem x = random_el(F9, rng), y = random_el(F9, rng);
        for (uint8_t a = 0; a < 3; ++a) {
            FFElem ax{&F9, F9.scalar_mul(a, x.c)};
            CHECK(evaluate(f, ax + y) == FFElem{&F9, F9.scalar_mul(a, evaluate(f, x).c)} + evaluate(f, y));
        }
    }
}

TEST_CASE("derivative is the constant term and multiplies") {
    auto T = build_tower({2, 1, 0, {2}});
    const ExtField& F4 = T->level(2);
    FFElem w{&F4, F4.gen()};
    SkewPoly f = SkewPoly::tau(T.get(), 2, 3) + skew_smul(w, SkewPoly::tau(T.get(), 2)) +
                 SkewPoly::constant(T.get(), w * w);
    CHECK(derivative(f) == w * w);
    CHECK(derivative(SkewPoly::tau(T.get(), 2)).is_zero());
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        SkewPoly a = random_skew(T.get(), 2, 4, rng);
        SkewPoly b = random_skew(T.get(), 2, 4, rng);
        CHECK(derivative(skew_mul(a, b)) == derivative(a) * derivative(b));
    }
}

TEST_CASE("right gcd divides both inputs and is monic") {
    auto T = build_tower({2, 1, 0, {2}});
    const ExtField& F4 = T->level(2);
    FFElem w{&F4, F4.gen()};
    SkewPoly t = SkewPoly::tau(T.get(), 2);
    SkewPoly f = SkewPoly::tau(T.get(), 2, 2) + SkewPoly::one(T.get(), 2);
    SkewPoly P = t + SkewPoly::constant(T.get(), w);
    // (tau+w^2)(tau+w) = tau^2+1, so tau+w is a right divisor
    CHECK(right_gcd(f, P) == P);
    // tau^2+tau and tau+w are coprime
    SkewPoly h = SkewPoly::tau(T.get(), 2, 2) + t;
    CHECK(right_gcd(h, P) == SkewPoly::one(T.get(), 2));
    // trivia
    CHECK(right_gcd(f, SkewPoly::zero(T.get(), 2)) == f.monic());
    CHECK(right_gcd(f, f) == f.monic());
    CHECK_THROWS_AS(right_gcd(SkewPoly::zero(T.get(), 2), SkewPoly::zero(T.get(), 2)),
                    std::domain_error);
    // random pairs: the gcd right-divides both
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        SkewPoly a = random_skew(T.get(), 2, 5, rng);
        SkewPoly b = random_skew(T.get(), 2, 5, rng);
        if (a.is_zero() && b.is_zero()) continue;
        SkewPoly d = right_gcd(a, b);
        CHECK(right_mod(a, d).is_zero());
        CHECK(right_mod(b, d).is_zero());
    }
}

TEST_CASE("centrality detects F_q[tau^n]") {
    auto T = build_tower({2, 1, 0, {2}});
    const ExtField& F4 = T->level(2);
    FFElem w{&F4, F4.gen()};
    int n = 2;
    CHECK(is_central(SkewPoly::tau(T.get(), 2, 2), n));                 // pi
    CHECK(is_central(SkewPoly::one(T.get(), 2), n));                    // constants in F_q
    CHECK(is_central(SkewPoly::tau(T.get(), 2, 4) + SkewPoly::one(T.get(), 2), n));
    CHECK(!is_central(skew_smul(w, SkewPoly::tau(T.get(), 2)), n));     // w tau
    CHECK(!is_central(SkewPoly::tau(T.get(), 2, 1), n));                // tau itself
    CHECK(!is_central(SkewPoly::constant(T.get(), w), n));              // w outside F_q
    // central elements commute with everything
    std::mt19937_64 rng(53);
    SkewPoly pi = SkewPoly::tau(T.get(), 2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        SkewPoly f = random_skew(T.get(), 2, 4, rng);
        CHECK(skew_mul(pi, f) == skew_mul(f, pi));
    }
}

TEST_CASE("mixed levels lift to the join") {
    auto T = build_tower({2, 1, 0, {1, 2, 3, 6}});
    std::mt19937_64 rng(59);
    SkewPoly a = random_skew(T.get(), 2, 3, rng);
    SkewPoly b = random_skew(T.get(), 3, 3, rng);
    SkewPoly p = skew_mul(a, b);
    CHECK(p.level == 6);
    CHECK(p == skew_mul(lift(a, 6), lift(b, 6)));
    CHECK(lift(a, 6).level == 6);
    CHECK_THROWS_AS(lift(a, 3), std::invalid_argument);
    // lifting preserves evaluation
    const ExtField& L6 = T->level(6);
    FFElem beta = random_el(L6, rng);
    CHECK(evaluate(a, beta) == evaluate(lift(a, 6), beta));
}

TEST_CASE("monic normalization scales by the inverse leading coefficient") {
    auto T = build_tower({3, 1, 0, {2}});
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        SkewPoly f = random_skew(T.get(), 2, 4, rng);
        if (f.is_zero()) continue;
        SkewPoly m = f.monic();
        CHECK(m.is_monic());
        CHECK(skew_smul(f.lead(), m) == f);
        CHECK(m.deg() == f.deg());
    }
}
