#pragma once

#include <optional>
#include <utility>

#include "fqs/pointset.hpp"
#include "fqs/setfamily.hpp"

namespace fqs {

/// Concrete residues standing for the two abstract word symbols; defaults to
/// a = 1, b = 0 so that the a-count of a word is its 0/1 weight.
struct Alphabet {
    Residue a = 1;
    Residue b = 0;
};

/// Characteristic vectors of a greedy packing with t = floor(k*q / (2k-1))
/// and intersection cap (k-1)*t/k; avoids k-right corners.
/// Requires q odd prime, k >= 2, n >= t.
PointSet corner_free_set(std::size_t n, Residue q, std::size_t k);

/// The k = 2 case, claimed right-angle-free.
PointSet right_angle_free_set(std::size_t n, Residue q);

/// {e_1, ..., e_n}; right-angle-free.
PointSet standard_basis_set(std::size_t n, Residue q);

/// All 0/1 vectors of weight exactly q-1; size C(n, q-1); no difference of
/// two members is self-orthogonal. Requires n >= q-1.
PointSet s_lower_basic(std::size_t n, Residue q);

/// Lexicographically smallest pair (a, b), a != b, with
/// (n+2) b^2 = 2a^2 - 2a + 1 in F_q; absent when no such pair exists.
std::optional<std::pair<Residue, Residue>> solve_ab(std::size_t n, Residue q);

/// s_lower_basic plus all vectors with q-2 entries a and n-q+2 entries b,
/// using the solve_ab pair; size C(n,q-1) + C(n,q-2).
/// Errors when solve_ab is absent or (defensively) when the classes overlap.
PointSet s_lower_augmented(std::size_t n, Residue q);

/// The union-assembly step of s_lower_augmented with an explicit symbol pair;
/// checks the two classes are disjoint and errors rather than deduplicating.
PointSet make_s_lower_augmented_with(std::size_t n, Residue q, Residue a, Residue b);

/// Over F_3, for n ≡ 2 (mod 3): union of six vector classes (weight-2 0/1;
/// one 0 rest 2; one 1 rest 2; one 0 rest 1; all-zero; all-2) of total size
/// C(n,2) + 3n + 2 = C(n+3,2) - 1, with no self-orthogonal difference.
PointSet s3_exact(std::size_t n);

/// For n ≡ 0 or 1 (mod 3), n >= 3: s3_exact on the first n-1 (resp. n-2)
/// coordinates with the remaining coordinate(s) fixed to 0.
PointSet s3_padded(std::size_t n);

/// All words in {a,b}^n whose a-count is even and at most q-1; no pairwise
/// Hamming distance is divisible by q.
PointSet t_lower_even(std::size_t n, Residue q, Alphabet alphabet = {});

/// t_lower_even plus all words whose b-count is odd and at most q-2;
/// size = sum of C(n,i) for i = 0..q-1. Requires n ≡ -1 (mod q).
PointSet t_lower_augmented(std::size_t n, Residue q, Alphabet alphabet = {});

/// Maps a two-symbol word set into {+1, -1}^n inside F_q: the a-symbol goes
/// to 1 and the b-symbol to q-1. Errors on any other entry.
PointSet to_pm1(const PointSet& words, Alphabet alphabet = {});

} // namespace fqs
