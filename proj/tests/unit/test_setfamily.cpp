#include <stdexcept>
#include <array>
#include <vector>

#include "doctest.h"
#include "fqs/bigint.hpp"
#include "fqs/setfamily.hpp"

using namespace fqs;

namespace {

/// Oracle: exact maximum partial triple system on 7 points (pairwise
/// intersections at most 1) by branch and bound over all C(7,3) triples,
/// pruned with the pair-usage counting bound.
struct FanoOracle {
    std::vector<std::array<int, 3>> triples;
    std::size_t best = 0;

    FanoOracle() {
        for (int a = 1; a <= 7; ++a)
            for (int b = a + 1; b <= 7; ++b)
                for (int c = b + 1; c <= 7; ++c) triples.push_back({a, b, c});
    }

    static int pair_id(int a, int b) { return a * 8 + b; }  // a < b

    void rec(std::size_t idx, std::size_t chosen, std::uint64_t pairs_used, int pairs_free) {
        if (chosen > best) best = chosen;
        if (idx == triples.size()) return;
        std::size_t bound = chosen + std::min(triples.size() - idx,
                                              static_cast<std::size_t>(pairs_free / 3));
        if (bound <= best) return;
        const auto& t = triples[idx];
        std::uint64_t mask = (1ull << pair_id(t[0], t[1])) | (1ull << pair_id(t[0], t[2])) |
                             (1ull << pair_id(t[1], t[2]));
        if ((pairs_used & mask) == 0) rec(idx + 1, chosen + 1, pairs_used | mask, pairs_free - 3);
        rec(idx + 1, chosen, pairs_used, pairs_free);
    }

    std::size_t solve() {
        best = 0;
        rec(0, 0, 0, 21);
        return best;
    }
};

}  // namespace

TEST_CASE("rationals normalize and compare against integers by cross-multiplication") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(6, 3).str() == "2/1");
    CHECK(Rational(3, 1) == Rational(6, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);

    CHECK(below_cap(1, Rational(3, 2)));        // 1 < 3/2
    CHECK_FALSE(below_cap(2, Rational(3, 2)));  // 2 >= 3/2
    CHECK(below_cap(0, Rational(1, 3)));
    CHECK_FALSE(below_cap(1, Rational(1, 1)));

    CHECK(parse_rational("7/3") == Rational(7, 3));
    CHECK(parse_rational("4") == Rational(4, 1));
    CHECK_THROWS_AS(parse_rational("7/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/3"), std::invalid_argument);
}

TEST_CASE("greedy packing at n=7, t=3, cap=2 reproduces the exact oracle maximum") {
    SetSystem S = greedy_packing(7, 3, Rational(2, 1));
    CHECK(S.ell == 2);
    CHECK(find_cap_violation(S) == std::nullopt);

    FanoOracle oracle;
    std::size_t exact = oracle.solve();
    CHECK(exact == 7);
    CHECK(S.blocks.size() == exact);
    CHECK(S.blocks.front() == std::vector<int>{1, 2, 3});
}

TEST_CASE("greedy packing with cap 1 builds the lexicographic perfect matching") {
    SetSystem S = greedy_packing(8, 2, Rational(1, 1));
    REQUIRE(S.blocks.size() == 4);
    CHECK(S.blocks[0] == std::vector<int>{1, 2});
    CHECK(S.blocks[1] == std::vector<int>{3, 4});
    CHECK(S.blocks[2] == std::vector<int>{5, 6});
    CHECK(S.blocks[3] == std::vector<int>{7, 8});
    CHECK(S.floor_guarantee == 2);  // ceil(C(8,1) / C(2,1)^2)
    CHECK(Integer(S.blocks.size()) >= S.floor_guarantee);
}

TEST_CASE("floor guarantees hold on the acceptance triples") {
    struct Case {
        std::size_t n, t, ell;
    };
    for (Case c : {Case{8, 2, 1}, Case{10, 3, 2}, Case{20, 3, 2}, Case{15, 4, 2}}) {
        SetSystem S = greedy_packing(c.n, c.t, Rational(static_cast<std::int64_t>(c.ell), 1));
        CHECK(S.ell == c.ell);
        Integer denom = binom(static_cast<std::int64_t>(c.t), static_cast<std::int64_t>(c.ell));
        denom *= denom;
        Integer expect =
            (binom(static_cast<std::int64_t>(c.n), static_cast<std::int64_t>(c.ell)) + denom -
             1) / denom;
        CHECK(S.floor_guarantee == expect);
        CHECK(Integer(S.blocks.size()) >= expect);
        CHECK(find_cap_violation(S) == std::nullopt);
    }
}

TEST_CASE("fractional caps take the ceiling as the integer threshold") {
    SetSystem S = greedy_packing(12, 4, Rational(8, 3));  // < 8/3 means <= 2
    CHECK(S.ell == 3);
    CHECK(find_cap_violation(S) == std::nullopt);
    for (std::size_t i = 0; i < S.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < S.blocks.size(); ++j) {
            std::size_t inter = 0;
            for (int x : S.blocks[i])
                for (int y : S.blocks[j])
                    if (x == y) ++inter;
            CHECK(inter <= 2);
        }
}

TEST_CASE("packing preconditions are enforced") {
    CHECK_THROWS_AS(greedy_packing(5, 0, Rational(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(greedy_packing(2, 3, Rational(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(greedy_packing(5, 3, Rational(4, 1)), std::invalid_argument);  // cap > t
    CHECK_THROWS_AS(greedy_packing(5, 3, Rational(0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(greedy_packing(5, 3, Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("cap violations are detected by the exhaustive re-check") {
    SetSystem bad;
    bad.n = 5;
    bad.t = 3;
    bad.cap = Rational(2, 1);
    bad.ell = 2;
    bad.blocks = {{1, 2, 3}, {1, 2, 4}};  // intersection 2, not below cap 2
    auto v = find_cap_violation(bad);
    REQUIRE(v.has_value());
    CHECK(v->first == 0);
    CHECK(v->second == 1);
}

TEST_CASE("characteristic vectors are the 0/1 rows of the set system") {
    SetSystem S = greedy_packing(4, 2, Rational(1, 1));  // {1,2}, {3,4}
    PointSet A = char_vectors(S, 3);
    REQUIRE(A.size() == 2);
    CHECK(A[0] == FVec(FieldSpec(3), {1, 1, 0, 0}));
    CHECK(A[1] == FVec(FieldSpec(3), {0, 0, 1, 1}));
    CHECK(A.provenance().name == "char-vectors");
}

TEST_CASE("set systems round-trip through text") {
    SetSystem S = greedy_packing(7, 3, Rational(2, 1));
    std::string text = format_set_system(S);
    SetSystem back = parse_set_system(text);
    CHECK(back.n == S.n);
    CHECK(back.t == S.t);
    CHECK(back.cap == S.cap);
    CHECK(back.blocks == S.blocks);
    CHECK(back.ell == S.ell);

    CHECK_THROWS_AS(parse_set_system("n=4 t=2 cap=1/1\n1 2 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_set_system("n=4 t=2 cap=1/1\n2 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_set_system("n=4 t=2 cap=1/1\n3 9\n"), std::invalid_argument);
}
