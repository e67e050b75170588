#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "fqs/field.hpp"

using namespace fqs;

TEST_CASE("is_prime matches a sieve up to 1000") {
    std::vector<bool> sieve(1001, true);
    sieve[0] = sieve[1] = false;
    for (int i = 2; i <= 1000; ++i)
        if (sieve[i])
            for (int j = 2 * i; j <= 1000; j += i) sieve[j] = false;
    for (int v = 0; v <= 1000; ++v) CHECK(is_prime(v) == sieve[v]);
}

TEST_CASE("field spec accepts odd primes and rejects everything else") {
    for (Residue q : {3u, 5u, 7u, 11u, 101u}) CHECK(FieldSpec(q).q() == q);
    CHECK_THROWS_AS(FieldSpec(0), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec(2), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec(15), std::invalid_argument);
    CHECK_THROWS_WITH_AS(FieldSpec(9), doctest::Contains("prime-power"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(FieldSpec(27), doctest::Contains("prime-power"), std::invalid_argument);
}

TEST_CASE("arithmetic matches plain integer arithmetic exhaustively for q = 7") {
    FieldSpec F(7);
    for (Residue a = 0; a < 7; ++a)
        for (Residue b = 0; b < 7; ++b) {
            CHECK(F.add(a, b) == (a + b) % 7);
            CHECK(F.sub(a, b) == (a + 7 - b) % 7);
            CHECK(F.mul(a, b) == (a * b) % 7);
        }
    for (Residue a = 0; a < 7; ++a) CHECK(F.add(a, F.neg(a)) == 0);
}

TEST_CASE("Fermat inverses and powers for every prime field up to 101") {
    for (Residue q = 3; q <= 101; ++q) {
        if (!is_prime(q) || q == 2) continue;
        FieldSpec F(q);
        for (Residue a = 1; a < q; ++a) {
            CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.pow(a, q - 1) == 1);
        }
        CHECK_THROWS_AS(F.inv(0), std::domain_error);
    }
}

TEST_CASE("signed and unsigned reduction") {
    FieldSpec F(5);
    CHECK(F.reduce_u64(12) == 2);
    CHECK(F.reduce_i64(-1) == 4);
    CHECK(F.reduce_i64(-12) == 3);
    CHECK(F.reduce_i64(7) == 2);
}

TEST_CASE("vectors reduce entries and compare lexicographically") {
    FieldSpec F(3);
    FVec v(F, {4, 5, 3});
    CHECK(v[0] == 1);
    CHECK(v[1] == 2);
    CHECK(v[2] == 0);
    CHECK(FVec(F, {0, 1}) < FVec(F, {0, 2}));
    CHECK(FVec(F, {1, 0}) > FVec(F, {0, 2}));
    CHECK(FVec(F, {1, 2}) == FVec(F, {4, 5}));
}

TEST_CASE("dot, vector sums, and difference norms agree with direct formulas") {
    FieldSpec F(5);
    FVec x(F, {1, 2, 3, 4});
    FVec y(F, {4, 0, 2, 2});
    CHECK(dot(x, y) == (1 * 4 + 2 * 0 + 3 * 2 + 4 * 2) % 5);
    CHECK(vadd(x, y) == FVec(F, {0, 2, 0, 1}));
    CHECK(vsub(x, y) == FVec(F, {2, 2, 1, 2}));

    // diff_self_dot against the two-step route, exhaustively in F_3^2.
    FieldSpec F3(3);
    std::vector<FVec> all;
    for (Residue a = 0; a < 3; ++a)
        for (Residue b = 0; b < 3; ++b) all.push_back(FVec(F3, {a, b}));
    for (const FVec& u : all)
        for (const FVec& w : all) {
            FVec d = vsub(u, w);
            CHECK(diff_self_dot(u, w) == dot(d, d));
        }
}

TEST_CASE("mixed fields or lengths are rejected") {
    FieldSpec F3(3), F5(5);
    FVec a(F3, {1, 2});
    FVec b(F5, {1, 2});
    FVec c(F3, {1, 2, 0});
    CHECK_THROWS_AS(dot(a, b), std::invalid_argument);
    CHECK_THROWS_AS(vadd(a, c), std::invalid_argument);
}
