#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fqs/bigint.hpp"
#include "fqs/pointset.hpp"

namespace fqs {

/// Dense matrix over F_q with eagerly reduced entries, row-major.
struct FqMatrix {
    FieldSpec spec;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Residue> e;

    FqMatrix(FieldSpec s, std::size_t r, std::size_t c)
        : spec(s), rows(r), cols(c), e(r * c, 0) {}

    Residue at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
    Residue& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
};

bool is_identity(const FqMatrix& M);

/// Canonical digest of (q, rows, cols, row-major entries); stable across runs.
std::string matrix_digest(const FqMatrix& M);

/// M[i][j] = 1 - <a_j - a_i, a_j - a_i>^(q-1): the evaluation of the
/// indicator polynomial of member i at member j. Identity exactly when no
/// difference of two distinct members is self-orthogonal.
FqMatrix p_eval_matrix(const PointSet& A);

/// Rank over F_q by Gaussian elimination; pivots chosen deterministically as
/// the first nonzero entry in row-major order of the remaining submatrix.
std::size_t rank_gf(FqMatrix M);

struct ClauseResult {
    std::string id;          // "self-products", "cross-products", "diagonal", "size-bound"
    bool pass = false;
    std::string counterexample; // empty when pass
};

/// Outcome of the diagonal-tensor certificate on a set whose self products
/// all equal alpha and whose cross products all lie in R (alpha not in R):
/// the product matrix T[i][j] = prod_{r in R} (<a_i, a_j> - r) must be
/// diagonal with nonzero diagonal, and |A| <= 2 C(n+|R|, |R|).
struct DiagCertificate {
    std::vector<ClauseResult> clauses;
    bool all_pass = false;
    Integer size_bound;   // 2 C(n+|R|, |R|)
    std::size_t set_size = 0;
    std::optional<FqMatrix> T; // present when A is nonempty
};

DiagCertificate lemma_diag_certificate(const PointSet& A, Residue alpha,
                                       const std::vector<Residue>& R);

/// Evaluation matrix of the word indicator polynomials over a ±1 set:
/// M[i][j] = 1 - (2n - sum_j 2 a_{i,j} x_j)^(q-1) at x = a_j. Identity (full
/// rank) exactly when no pairwise Hamming distance is divisible by q.
struct CodeCertificate {
    FqMatrix M;
    std::size_t rank = 0;
    bool identity = false;
};

CodeCertificate t_code_certificate(const PointSet& A);

/// Dimension of the space of multilinear polynomials in n variables of total
/// degree <= q-1; with Parity::Even only even total degrees are counted.
enum class Parity { All, Even };
BoundValue multilinear_dimension(std::int64_t n, Residue q, Parity parity);

} // namespace fqs
