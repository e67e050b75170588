#include "fqs/certify.hpp"

#include <algorithm>
#include <stdexcept>

#include "fqs/io.hpp"

namespace fqs {

bool is_identity(const FqMatrix& M) {
    if (M.rows != M.cols) return false;
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < M.cols; ++j)
            if (M.at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

std::string matrix_digest(const FqMatrix& M) {
    std::string bytes = "q=" + std::to_string(M.spec.q()) + ";r=" + std::to_string(M.rows) +
                        ";c=" + std::to_string(M.cols) + ";";
    for (std::size_t i = 0; i < M.e.size(); ++i) {
        if (i) bytes.push_back(',');
        bytes += std::to_string(M.e[i]);
    }
    return fnv1a64_hex(bytes);
}

FqMatrix p_eval_matrix(const PointSet& A) {
    const FieldSpec& F = A.spec();
    FqMatrix M(F, A.size(), A.size());
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A.size(); ++j) {
            Residue d = diff_self_dot(A[j], A[i]);
            M.at(i, j) = F.sub(1, F.pow(d, F.q() - 1));
        }
    return M;
}

std::size_t rank_gf(FqMatrix M) {
    const FieldSpec& F = M.spec;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < M.cols && rank < M.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < M.rows && M.at(pivot, col) == 0) ++pivot;
        if (pivot == M.rows) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < M.cols; ++j)
                std::swap(M.at(pivot, j), M.at(rank, j));
        Residue inv = F.inv(M.at(rank, col));
        for (std::size_t i = rank + 1; i < M.rows; ++i) {
            if (M.at(i, col) == 0) continue;
            Residue f = F.mul(M.at(i, col), inv);
            for (std::size_t j = col; j < M.cols; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

DiagCertificate lemma_diag_certificate(const PointSet& A, Residue alpha,
                                       const std::vector<Residue>& R) {
    const FieldSpec& F = A.spec();
    if (alpha >= F.q()) throw std::invalid_argument("lemma_diag_certificate: alpha not reduced");
    for (Residue r : R) {
        if (r >= F.q())
            throw std::invalid_argument("lemma_diag_certificate: R entry not reduced");
        if (r == alpha)
            throw std::invalid_argument("lemma_diag_certificate: alpha must not lie in R");
    }

    DiagCertificate out;
    out.set_size = A.size();
    out.size_bound = 2 * binom(static_cast<std::int64_t>(A.n()) +
                                   static_cast<std::int64_t>(R.size()),
                               static_cast<std::int64_t>(R.size()));

    ClauseResult self{"self-products", true, ""};
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (dot(A[i], A[i]) != alpha) {
            self.pass = false;
            self.counterexample = "index " + std::to_string(i) + ": <a,a> = " +
                                  std::to_string(dot(A[i], A[i]));
            break;
        }
    }

    ClauseResult cross{"cross-products", true, ""};
    for (std::size_t i = 0; i < A.size() && cross.pass; ++i)
        for (std::size_t j = i + 1; j < A.size(); ++j) {
            Residue v = dot(A[i], A[j]);
            if (std::find(R.begin(), R.end(), v) == R.end()) {
                cross.pass = false;
                cross.counterexample = "indices (" + std::to_string(i) + "," +
                                       std::to_string(j) + "): <x,y> = " + std::to_string(v);
                break;
            }
        }

    ClauseResult diag{"diagonal", true, ""};
    if (A.size() > 0) {
        FqMatrix T(F, A.size(), A.size());
        for (std::size_t i = 0; i < A.size(); ++i)
            for (std::size_t j = 0; j < A.size(); ++j) {
                Residue prod = 1;
                Residue d = dot(A[i], A[j]);
                for (Residue r : R) prod = F.mul(prod, F.sub(d, r));
                T.at(i, j) = prod;
            }
        for (std::size_t i = 0; i < A.size() && diag.pass; ++i)
            for (std::size_t j = 0; j < A.size(); ++j) {
                bool bad = (i == j) ? (T.at(i, j) == 0) : (T.at(i, j) != 0);
                if (bad) {
                    diag.pass = false;
                    diag.counterexample = "entry (" + std::to_string(i) + "," +
                                          std::to_string(j) + ") = " +
                                          std::to_string(T.at(i, j));
                    break;
                }
            }
        out.T = std::move(T);
    }

    ClauseResult bound{"size-bound", true, ""};
    if (Integer(A.size()) > out.size_bound) {
        bound.pass = false;
        bound.counterexample =
            "|A| = " + std::to_string(A.size()) + " > " + to_decimal(out.size_bound);
    }

    out.clauses = {self, cross, diag, bound};
    out.all_pass = self.pass && cross.pass && diag.pass && bound.pass;
    return out;
}

CodeCertificate t_code_certificate(const PointSet& A) {
    const FieldSpec& F = A.spec();
    for (const FVec& v : A.vectors())
        for (std::size_t i = 0; i < v.dim(); ++i)
            if (v[i] != 1 && v[i] != F.q() - 1)
                throw std::invalid_argument("t_code_certificate: entry " + std::to_string(v[i]) +
                                            " is not +1 or -1 mod " + std::to_string(F.q()));

    Residue two_n = F.reduce_u64(2 * static_cast<std::uint64_t>(A.n()));
    FqMatrix M(F, A.size(), A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
        for (std::size_t j = 0; j < A.size(); ++j) {
            // 2n - sum_m 2 a_{i,m} x_m, evaluated at x = a_j
            std::uint64_t acc = 0;
            for (std::size_t m = 0; m < A.n(); ++m)
                acc = (acc + 2ull * A[i][m] % F.q() * A[j][m]) % F.q();
            Residue arg = F.sub(two_n, static_cast<Residue>(acc));
            M.at(i, j) = F.sub(1, F.pow(arg, F.q() - 1));
        }
    }
    CodeCertificate out{std::move(M), 0, false};
    out.identity = is_identity(out.M);
    out.rank = rank_gf(out.M);
    return out;
}

BoundValue multilinear_dimension(std::int64_t n, Residue q, Parity parity) {
    FieldSpec validate(q);
    (void)validate;
    if (n < 1) throw std::invalid_argument("multilinear_dimension: n must be >= 1");
    Integer v = 0;
    std::int64_t step = parity == Parity::Even ? 2 : 1;
    for (std::int64_t i = 0; i <= q - 1; i += step) v += binom(n, i);
    return {parity == Parity::Even ? "multilinear_dimension_even" : "multilinear_dimension",
            v};
}

} // namespace fqs
