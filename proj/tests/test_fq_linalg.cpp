#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "dmcode/fq.hpp"
#include "dmcode/linalg.hpp"

using namespace dmcode;

TEST_CASE("prime fields match modular arithmetic") {
    for (int p : {2, 3, 5, 7, 11, 13}) {
        Fq F(p, 1);
        CHECK(F.q() == p);
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                CHECK((int)F.add(a, b) == (a + b) % p);
                CHECK((int)F.mul(a, b) == (a * b) % p);
                CHECK((int)F.sub(a, b) == ((a - b) % p + p) % p);
            }
        for (int a = 1; a < p; ++a) CHECK((int)F.mul(a, F.inv(a)) == 1);
    }
}

TEST_CASE("field axioms hold for every q <= 16") {
    int qs[][2] = {{2,1},{3,1},{2,2},{5,1},{7,1},{2,3},{3,2},{11,1},{13,1},{2,4}};
    for (auto [p, m] : qs) {
        Fq F(p, m);
        int q = F.q();
        for (int a = 0; a < q; ++a) {
            CHECK((int)F.add(a, 0) == a);
            CHECK((int)F.mul(a, 1) == a);
            CHECK((int)F.add(a, F.neg(a)) == 0);
            if (a) CHECK((int)F.mul(a, F.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                    CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
                }
            }
        }
    }
}

TEST_CASE("F4 is built on y^2+y+1 and the generator has order 3") {
    Fq F(2, 2);
    CHECK(F.base_modulus() == std::vector<uint8_t>({1, 1, 1}));
    // index 2 is y, index 3 is y+1
    CHECK((int)F.mul(2, 2) == 3);       // w^2 = w+1
    CHECK((int)F.mul(2, 3) == 1);       // w^3 = 1
    CHECK((int)F.inv(2) == 3);
    CHECK((int)F.pow(2, 3) == 1);
    CHECK((int)F.proot(2) == 3);        // (w+1)^2 = w
}

TEST_CASE("F9 is built on y^2+1") {
    Fq F(3, 2);
    CHECK(F.base_modulus() == std::vector<uint8_t>({1, 0, 1}));
    CHECK((int)F.mul(3, 3) == 2);       // i^2 = -1
    CHECK((int)F.pow(3, 4) == 1);
    CHECK((int)F.pow(3, 8) == 1);
    // the unit group is cyclic of order 8; i has order 4
    CHECK((int)F.pow(3, 2) != 1);
}

TEST_CASE("Frobenius p-th root inverts x -> x^p") {
    for (auto [p, m] : {std::pair{2,2}, {2,3}, {3,2}, {2,4}}) {
        Fq F(p, m);
        for (int a = 0; a < F.q(); ++a) {
            CHECK((int)F.pow(F.proot(a), p) == a);
            CHECK((int)F.proot(F.pow(a, p)) == a);
        }
    }
}

TEST_CASE("from_int reduces integers into the prime subfield") {
    Fq F(3, 2);
    CHECK((int)F.from_int(-1) == 2);
    CHECK((int)F.from_int(5) == 2);
    CHECK((int)F.from_int(0) == 0);
    CHECK(F.in_prime_subfield(2));
    CHECK(!F.in_prime_subfield(3));
}

TEST_CASE("constructor rejects unsupported sizes") {
    CHECK_THROWS(Fq(4, 1));        // not prime
    CHECK_THROWS(Fq(17, 1));       // q > 16
    CHECK_THROWS(Fq(3, 3));        // 27 > 16
    CHECK_THROWS(Fq(2, 0));
}

TEST_CASE("rref, rank and kernel on a known F2 matrix") {
    Fq F(2, 1);
    // rows span a 2-dimensional space; kernel is 1-dimensional
    FqMat A(&F, 3, 3);
    uint8_t vals[3][3] = {{1,0,1},{0,1,1},{1,1,0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A.at(i, j) = vals[i][j];
    CHECK(rank(A) == 2);
    FqMat K = kernel_basis(A);
    CHECK(K.rows == 1);
    // kernel vector (1,1,1)
    CHECK((int)K.at(0, 0) == 1);
    CHECK((int)K.at(0, 1) == 1);
    CHECK((int)K.at(0, 2) == 1);
}

TEST_CASE("solve returns a solution exactly when consistent") {
    Fq F(3, 1);
    FqMat A(&F, 2, 3);
    uint8_t vals[2][3] = {{1,2,0},{0,1,1}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) A.at(i, j) = vals[i][j];
    auto x = solve(A, {1, 2});
    REQUIRE(x.has_value());
    auto b = mat_vec(A, *x);
    CHECK(b == std::vector<uint8_t>({1, 2}));

    FqMat B(&F, 2, 1);
    B.at(0, 0) = 1; B.at(1, 0) = 2;     // x = 1 and x = 2 simultaneously
    CHECK(!solve(B, {1, 1}).has_value());
}

TEST_CASE("kernel vectors annihilate the matrix for random samples") {
    Fq F(3, 1);
    uint64_t state = 42;
    auto rnd = [&]() { state = state * 6364136223846793005ULL + 1442695040888963407ULL; return (uint8_t)((state >> 33) % 3); };
    for (int trial = 0; trial < 20; ++trial) {
        FqMat A(&F, 4, 6);
        for (auto& v : A.a) v = rnd();
        FqMat K = kernel_basis(A);
        CHECK(K.rows == 6 - rank(A));
        for (int i = 0; i < K.rows; ++i) {
            std::vector<uint8_t> v(K.row(i), K.row(i) + 6);
            auto Av = mat_vec(A, v);
            for (auto c : Av) CHECK((int)c == 0);
        }
    }
}

TEST_CASE("matrix product agrees with manual accumulation") {
    Fq F(2, 2);
    FqMat A(&F, 2, 3), B(&F, 3, 2);
    uint8_t a[2][3] = {{2,1,0},{3,0,1}}, b[3][2] = {{1,2},{2,3},{0,1}};
    for (int i = 0; i < 2; ++i) for (int j = 0; j < 3; ++j) A.at(i, j) = a[i][j];
    for (int i = 0; i < 3; ++i) for (int j = 0; j < 2; ++j) B.at(i, j) = b[i][j];
    FqMat C = mat_mul(A, B);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            uint8_t acc = 0;
            for (int k = 0; k < 3; ++k) acc = F.add(acc, F.mul(A.at(i, k), B.at(k, j)));
            CHECK(C.at(i, j) == acc);
        }
}

TEST_CASE("RowReducer expresses members in terms of the inserted rows") {
    Fq F(3, 1);
    RowReducer rr(&F, 4);
    std::vector<std::vector<uint8_t>> rows = {
        {1, 2, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 2},
    };
    CHECK(rr.add(rows[0]));
    CHECK(rr.add(rows[1]));
    // rows[2] = rows[0] - 2*rows[1] ?  check via express instead of guessing
    bool grew = rr.add(rows[2]);
    if (!grew) {
        auto c = rr.express(rows[2]);
        REQUIRE(c.has_value());
        std::vector<uint8_t> acc(4, 0);
        for (size_t k = 0; k < c->size(); ++k)
            for (int j = 0; j < 4; ++j) acc[j] = F.add(acc[j], F.mul((*c)[k], rows[k][j]));
        CHECK(acc == rows[2]);
    }
    CHECK(rr.contains(rows[0]));
    CHECK(rr.contains(rows[1]));
    std::vector<uint8_t> outside = {0, 0, 0, 1};
    if (!rr.contains(outside)) CHECK(!rr.express(outside).has_value());
}

TEST_CASE("RowReducer dimension tracks rank against rref") {
    Fq F(2, 1);
    uint64_t state = 7;
    auto rnd = [&]() { state = state * 6364136223846793005ULL + 1; return (uint8_t)((state >> 40) & 1); };
    for (int trial = 0; trial < 20; ++trial) {
        FqMat A(&F, 5, 5);
        for (auto& v : A.a) v = rnd();
        RowReducer rr(&F, 5);
        for (int i = 0; i < 5; ++i)
            rr.add(std::vector<uint8_t>(A.row(i), A.row(i) + 5));
        CHECK(rr.dim() == rank(A));
    }
}
