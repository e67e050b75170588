#include <stdexcept>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "fqs/bounds.hpp"
#include "fqs/certify.hpp"
#include "fqs/constructions.hpp"
#include "fqs/io.hpp"

using namespace fqs;

namespace {

/// Oracle: matrix rank as the largest k with a nonzero k x k minor, minors
/// computed by cofactor expansion mod q.
Residue det_mod(const FqMatrix& M, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
    const FieldSpec& F = M.spec;
    if (rows.size() == 1) return M.at(rows[0], cols[0]);
    Residue acc = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<std::size_t> sub_rows;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != i) sub_rows.push_back(rows[r]);
        std::vector<std::size_t> sub_cols(cols.begin() + 1, cols.end());
        Residue term = F.mul(M.at(rows[i], cols[0]), det_mod(M, sub_rows, sub_cols));
        acc = (i % 2 == 0) ? F.add(acc, term) : F.sub(acc, term);
    }
    return acc;
}

std::size_t rank_by_minors(const FqMatrix& M) {
    std::size_t maxk = std::min(M.rows, M.cols);
    for (std::size_t k = maxk; k >= 1; --k) {
        // enumerate all k-subsets of rows and of columns
        std::vector<std::size_t> rsel(k), csel(k);
        for (std::size_t i = 0; i < k; ++i) rsel[i] = i;
        while (true) {
            for (std::size_t i = 0; i < k; ++i) csel[i] = i;
            while (true) {
                if (det_mod(M, rsel, csel) != 0) return k;
                std::size_t j = k;
                while (j > 0 && csel[j - 1] == M.cols - k + j - 1) --j;
                if (j == 0) break;
                ++csel[j - 1];
                for (std::size_t l = j; l < k; ++l) csel[l] = csel[l - 1] + 1;
            }
            std::size_t j = k;
            while (j > 0 && rsel[j - 1] == M.rows - k + j - 1) --j;
            if (j == 0) break;
            ++rsel[j - 1];
            for (std::size_t l = j; l < k; ++l) rsel[l] = rsel[l - 1] + 1;
        }
    }
    return 0;
}

PointSet planted_self_orth() {
    PointSet base = s_lower_basic(4, 3);
    std::vector<FVec> vecs = base.vectors();
    vecs.push_back(vadd(vecs[0], FVec(base.spec(), {1, 1, 1, 0})));
    return PointSet(base.spec(), 4, std::move(vecs), Provenance{"planted", {}},
                    ConfigKind::SelfOrthDiff);
}

}  // namespace

TEST_CASE("gaussian rank matches the minor-expansion oracle on random matrices") {
    std::mt19937_64 eng(20260818);
    for (Residue q : {3u, 5u, 7u}) {
        FieldSpec F(q);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = 1 + eng() % 4, c = 1 + eng() % 4;
            FqMatrix M(F, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) M.at(i, j) = static_cast<Residue>(eng() % q);
            CHECK(rank_gf(M) == rank_by_minors(M));
        }
    }
}

TEST_CASE("rank handles edge shapes") {
    FieldSpec F(3);
    FqMatrix Z(F, 3, 3);
    CHECK(rank_gf(Z) == 0);
    FqMatrix I(F, 3, 3);
    for (int i = 0; i < 3; ++i) I.at(i, i) = 1;
    CHECK(rank_gf(I) == 3);
    CHECK(is_identity(I));
    CHECK_FALSE(is_identity(Z));
    FqMatrix R(F, 1, 4);
    R.at(0, 2) = 2;
    CHECK(rank_gf(R) == 1);
    CHECK_FALSE(is_identity(R));  // non-square
}

TEST_CASE("matrix digests derive from the documented preimage format") {
    FieldSpec F(3);
    FqMatrix I(F, 2, 2);
    I.at(0, 0) = 1;
    I.at(1, 1) = 1;
    CHECK(matrix_digest(I) == fnv1a64_hex("q=3;r=2;c=2;1,0,0,1"));
    I.at(0, 1) = 2;
    CHECK(matrix_digest(I) == fnv1a64_hex("q=3;r=2;c=2;1,2,0,1"));
}

TEST_CASE("evaluation matrices are the identity exactly on clean sets") {
    for (auto make : {+[] { return s_lower_basic(4, 3); }, +[] { return s3_exact(5); },
                      +[] { return s_lower_augmented(3, 3); }, +[] { return s3_padded(4); }}) {
        PointSet A = make();
        FqMatrix M = p_eval_matrix(A);
        CHECK(is_identity(M));
        CHECK(rank_gf(M) == A.size());
    }
}

TEST_CASE("a planted self-orthogonal difference breaks the evaluation matrix") {
    PointSet bad = planted_self_orth();
    FqMatrix M = p_eval_matrix(bad);
    CHECK_FALSE(is_identity(M));
    // the off-diagonal 1 sits exactly at the planted pair, both orientations
    CHECK(M.at(0, bad.size() - 1) == 1);
    CHECK(M.at(bad.size() - 1, 0) == 1);
    // full characterization: M[i][j] = 1 exactly on the diagonal and on pairs
    // whose difference is self-orthogonal
    const auto& vs = bad.vectors();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j) {
            bool one = i == j || diff_self_dot(vs[i], vs[j]) == 0;
            CHECK(M.at(i, j) == (one ? 1u : 0u));
        }
    // certificate failure agrees with the scan route
    CHECK(bad.scan_claimed().status == ScanStatus::ViolationFound);
}

TEST_CASE("code certificates reach full rank on distance-clean word sets") {
    PointSet P = to_pm1(t_lower_even(6, 3));
    CodeCertificate cert = t_code_certificate(P);
    CHECK(cert.identity);
    CHECK(cert.rank == P.size());
    CHECK(cert.M.rows == P.size());

    PointSet Q = to_pm1(t_lower_augmented(5, 3));
    CodeCertificate qc = t_code_certificate(Q);
    CHECK(qc.identity);
    CHECK(qc.rank == Q.size());
}

TEST_CASE("a planted divisible distance costs the code certificate exactly one rank") {
    PointSet even = t_lower_even(6, 3);
    std::vector<FVec> vecs = even.vectors();
    vecs.push_back(FVec(even.spec(), {1, 1, 1, 1, 1, 1}));
    PointSet planted(even.spec(), 6, std::move(vecs), Provenance{"planted", {}},
                     ConfigKind::DivisibleHamming);
    CodeCertificate cert = t_code_certificate(to_pm1(planted));
    CHECK_FALSE(cert.identity);
    CHECK(cert.rank == planted.size() - 1);
    CHECK(planted.scan_claimed().status == ScanStatus::ViolationFound);
}

TEST_CASE("code certificates require a two-symbol {1, q-1} alphabet") {
    CHECK_THROWS_AS(t_code_certificate(t_lower_even(4, 3)), std::invalid_argument);
}

TEST_CASE("certificate and scan routes agree across word sets") {
    for (std::size_t n = 2; n <= 8; ++n) {
        PointSet P = to_pm1(t_lower_even(n, 3));
        CodeCertificate cert = t_code_certificate(P);
        bool scan_clean = P.scan_claimed().status == ScanStatus::Ok;
        CHECK(cert.identity == scan_clean);
        CHECK(cert.identity);
    }
}

TEST_CASE("diagonal certificates pass on orthonormal-style sets") {
    FieldSpec F(3);
    std::vector<FVec> vecs = {FVec(F, {1, 0}), FVec(F, {0, 1})};
    PointSet A(F, 2, std::move(vecs), Provenance{"test", {}});
    DiagCertificate cert = lemma_diag_certificate(A, 1, {0});
    CHECK(cert.all_pass);
    REQUIRE(cert.clauses.size() == 4);
    for (const ClauseResult& c : cert.clauses) CHECK(c.pass);
    CHECK(cert.size_bound == 6);  // 2 C(2+1, 1)
    CHECK(cert.set_size == 2);
    REQUIRE(cert.T.has_value());
    CHECK(is_identity(*cert.T));

    CHECK_THROWS_AS(lemma_diag_certificate(A, 0, {0}), std::invalid_argument);  // alpha in R
}

TEST_CASE("diagonal certificates report which clause failed") {
    FieldSpec F(3);

    // wrong alpha: self products are 1, not 2
    PointSet A(F, 2, {FVec(F, {1, 0}), FVec(F, {0, 1})}, Provenance{"test", {}});
    DiagCertificate wrong_alpha = lemma_diag_certificate(A, 2, {0});
    CHECK_FALSE(wrong_alpha.all_pass);
    CHECK_FALSE(wrong_alpha.clauses[0].pass);  // self-products
    CHECK(!wrong_alpha.clauses[0].counterexample.empty());

    // cross product 1 is outside R = {0}
    PointSet B(F, 2, {FVec(F, {1, 0}), FVec(F, {1, 1})}, Provenance{"test", {}});
    DiagCertificate bad_cross = lemma_diag_certificate(B, 1, {0});
    CHECK_FALSE(bad_cross.all_pass);
    CHECK_FALSE(bad_cross.clauses[1].pass);  // cross-products
    CHECK_FALSE(bad_cross.clauses[2].pass);  // off-diagonal entry becomes nonzero

    // empty R: the size bound 2 C(n, 0) = 2 fails for three vectors
    PointSet C(F, 3, {FVec(F, {1, 0, 0}), FVec(F, {0, 1, 0}), FVec(F, {0, 0, 1})},
               Provenance{"test", {}});
    DiagCertificate small_bound = lemma_diag_certificate(C, 1, {});
    CHECK_FALSE(small_bound.all_pass);
    CHECK_FALSE(small_bound.clauses[3].pass);  // size bound 3 > 2
    CHECK(small_bound.size_bound == 2);
}

TEST_CASE("multilinear dimensions match the degree-sum bounds") {
    CHECK(multilinear_dimension(6, 3, Parity::All).value == t_upper_general(6, 3).value);
    CHECK(multilinear_dimension(6, 3, Parity::Even).value == t_lower_general(6, 3).value);
    CHECK(multilinear_dimension(5, 7, Parity::All).name == "multilinear_dimension");
    CHECK(multilinear_dimension(5, 7, Parity::Even).name == "multilinear_dimension_even");
}
