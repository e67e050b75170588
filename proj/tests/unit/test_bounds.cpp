#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "fqs/bigint.hpp"
#include "fqs/bounds.hpp"

using namespace fqs;

TEST_CASE("right-angle upper bounds match their closed forms") {
    // 4(q-1)q C(n+q-2, q-2) + 2q
    CHECK(r_upper_main(1, 3).value == 24 * binom(2, 1) + 6);
    CHECK(r_upper_main(4, 3).value == 24 * binom(5, 1) + 6);
    CHECK(r_upper_main(4, 5).value == 80 * binom(7, 3) + 10);
    // C(n+q, q-1) + 3
    CHECK(r_upper_ge(4, 3).value == binom(7, 2) + 3);
    CHECK(r_upper_ge(2, 5).value == binom(7, 4) + 3);
    // C(n+q, q-1) + 2 - C(n+q, q-3)
    CHECK(r_upper_naslund(4, 3).value == binom(7, 2) + 2 - binom(7, 0));
    CHECK(r_upper_naslund(2, 5).value == binom(7, 4) + 2 - binom(7, 2));
    CHECK(r_upper_naslund(2, 3).value == 11);

    CHECK(r_upper_main(1, 3).name == "r_upper_main");
    CHECK_THROWS_AS(r_upper_main(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(r_upper_main(2, 4), std::invalid_argument);

    // ordering: the subtractive form never exceeds the additive one (it can
    // even go negative for small n at larger q, hence Integer arithmetic)
    for (std::int64_t q : {3, 5, 7})
        for (std::int64_t n = 1; n <= 30; ++n)
            CHECK(r_upper_naslund(n, static_cast<fqs::Residue>(q)).value <=
                  r_upper_ge(n, static_cast<fqs::Residue>(q)).value);
}

TEST_CASE("corner bounds match their closed forms") {
    CHECK(corner_upper_naslund(8, 3, 2).value == binom(11, 2));
    CHECK(corner_upper_naslund(4, 3, 3).value == binom(10, 4));
    CHECK(corner_upper_naslund(6, 5, 2).value == binom(11, 4));

    // t = floor(kq/(2k-1)), l = ceil((k-1)t/k), value = floor(C(n,l)/C(t,l))
    BoundValue lower = corner_lower_main_term(8, 3, 2);  // t=2, l=1
    CHECK(lower.value == binom(8, 1) / binom(2, 1));
    CHECK(corner_lower_main_term(12, 7, 3).value == binom(12, 3) / binom(4, 3));
    CHECK_THROWS_AS(corner_lower_main_term(1, 3, 2), std::invalid_argument);  // n < t
}

TEST_CASE("self-orthogonal difference bounds match their closed forms") {
    CHECK(s_upper(2, 3).value == 9);
    CHECK(s_upper(5, 3).value == 27);
    for (std::int64_t n = 2; n <= 12; ++n)
        CHECK(s_upper(n, 3).value == binom(n + 3, 2) - 1);  // C(n+1,0) = 1 at q = 3
    CHECK(s_upper(6, 5).value == binom(11, 4) - binom(9, 2));

    CHECK(s_lower_formula(4, 3).value == binom(4, 2));
    CHECK(s_lower_augmented_formula(3, 3).value == binom(3, 2) + binom(3, 1));

    CHECK(s_lower_augmented_applicable(3, 3));
    CHECK_FALSE(s_lower_augmented_applicable(4, 3));   // n+2 = 0 mod 3, 3 = 3 mod 4
    CHECK(s_lower_augmented_applicable(3, 5));         // 5 = 1 mod 4
    CHECK(s_lower_augmented_applicable(8, 5));
    CHECK_FALSE(s_lower_augmented_applicable(5, 7));   // n+2 = 0 mod 7, 7 = 3 mod 4
}

TEST_CASE("p-adic distance bounds match their closed forms and exactness cases") {
    CHECK(t_upper_general(5, 3).value == binom(5, 0) + binom(5, 1) + binom(5, 2));
    CHECK(t_lower_general(6, 3).value == binom(6, 0) + binom(6, 2));
    CHECK(t_upper_divisible(6, 3).value == t_lower_general(6, 3).value);
    CHECK(t_lower_special(5, 3).value == t_upper_general(5, 3).value);

    CHECK_THROWS_AS(t_upper_divisible(5, 3), std::domain_error);  // needs q | n
    CHECK_THROWS_AS(t_lower_special(4, 3), std::domain_error);    // needs n = -1 mod q

    // The two exactness regimes: q | n and n = -1 (mod q).
    for (Residue q : {3u, 5u, 7u}) {
        for (std::int64_t n = q; n <= 21; n += q)
            CHECK(t_upper_divisible(n, q).value == t_lower_general(n, q).value);
        for (std::int64_t n = q - 1; n <= 21; n += q)
            CHECK(t_upper_general(n, q).value == t_lower_special(n, q).value);
    }
}

TEST_CASE("all-right upper bound matches its closed form") {
    CHECK(allright_upper(2, 3).value == binom(7, 4) + 2 * binom(5, 2));
    CHECK(allright_upper(4, 5).value == binom(13, 8) + 2 * binom(9, 4));
}

TEST_CASE("bound tables enumerate fixed formula rows in a fixed order") {
    std::vector<BoundReport> rows = bounds_table("self-orth", {2, 3, 4}, {3}, std::nullopt);
    // per n: s_upper always; s_lower_formula for n >= 2; augmented when applicable
    REQUIRE(rows.size() == 3 + 3 + 2);  // augmented absent at n = 4
    CHECK(rows[0].formula_id == "s_upper");
    CHECK(rows[0].side == "upper");
    CHECK(rows[0].n == 2);
    CHECK(rows[0].note == "exact");  // q = 3, n = 2 mod 3
    CHECK(rows[1].formula_id == "s_lower_formula");
    CHECK(rows[2].formula_id == "s_lower_augmented_formula");
    bool n4_augmented = false;
    for (const BoundReport& r : rows)
        if (r.n == 4 && r.formula_id == "s_lower_augmented_formula") n4_augmented = true;
    CHECK_FALSE(n4_augmented);

    std::vector<BoundReport> hrows = bounds_table("hamming", {5, 6}, {3}, std::nullopt);
    for (const BoundReport& r : hrows) {
        if (r.n == 5 && r.formula_id == "t_upper_general") CHECK(r.note == "exact");
        if (r.n == 6 && r.formula_id == "t_upper_divisible") CHECK(r.note == "exact");
        if (r.n == 6 && r.formula_id == "t_lower_general") CHECK(r.note == "exact");
    }

    std::vector<BoundReport> crows = bounds_table("corner", {8}, {3}, 2);
    bool saw_upper = false, saw_main = false;
    for (const BoundReport& r : crows) {
        if (r.formula_id == "corner_upper_naslund") saw_upper = true;
        if (r.formula_id == "corner_lower_main_term") {
            saw_main = true;
            CHECK(r.main_term);
        }
        CHECK(r.k == 2);
    }
    CHECK(saw_upper);
    CHECK(saw_main);

    CHECK_THROWS_AS(bounds_table("corner", {8}, {3}, std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(bounds_table("banana", {8}, {3}, std::nullopt), std::invalid_argument);
}

TEST_CASE("csv rendering has the documented header and quoting") {
    std::vector<BoundReport> rows = bounds_table("right-angle", {2}, {3}, std::nullopt);
    std::string csv = bounds_table_csv(rows);
    CHECK(csv.rfind("property,formula_id,side,n,q,k,main_term,note,value\n", 0) == 0);
    CHECK(csv.find("right-angle,r_upper_main,upper,2,3,,false,,") != std::string::npos);

    BoundReport quoted;
    quoted.property = "x";
    quoted.formula_id = "f";
    quoted.side = "upper";
    quoted.n = 1;
    quoted.q = 3;
    quoted.note = "hello, \"world\"";
    quoted.value = 5;
    std::string line = bounds_table_csv({quoted});
    CHECK(line.find("\"hello, \"\"world\"\"\"") != std::string::npos);
}
