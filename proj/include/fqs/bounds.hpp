#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fqs/bigint.hpp"
#include "fqs/field.hpp"

namespace fqs {

// Right-angle-free upper bounds.
BoundValue r_upper_main(std::int64_t n, Residue q);    // 4(q-1)q C(n+q-2, q-2) + 2q
BoundValue r_upper_ge(std::int64_t n, Residue q);      // C(n+q, q-1) + 3
BoundValue r_upper_naslund(std::int64_t n, Residue q); // C(n+q, q-1) + 2 - C(n+q, q-3)

// k-right-corner bounds.
BoundValue corner_upper_naslund(std::int64_t n, Residue q, std::int64_t k); // C(n+(k-1)q, (k-1)(q-1))
/// Main term of the corner lower bound: floor( C(n, l) / C(t, l) ) with
/// t = floor(k*q/(2k-1)), l = ceil((k-1)t/k). The vanishing-error factor is
/// deliberately not evaluated; callers must treat this as a main term only,
/// not a finite-n guarantee.
BoundValue corner_lower_main_term(std::int64_t n, Residue q, std::int64_t k);

// All-right-triangle-free upper bound: C(n+2q-1, 2q-2) + 2 C(n+q, q-1).
BoundValue allright_upper(std::int64_t n, Residue q);

// Self-orthogonal-difference-free bounds.
BoundValue s_upper(std::int64_t n, Residue q);           // C(n+q, q-1) - C(n+q-2, q-3)
BoundValue s_lower_formula(std::int64_t n, Residue q);   // C(n, q-1)
/// C(n, q-1) + C(n, q-2); valid when n is not ≡ -2 (mod q) or q ≡ 1 (mod 4).
BoundValue s_lower_augmented_formula(std::int64_t n, Residue q);
/// The validity condition of s_lower_augmented_formula.
bool s_lower_augmented_applicable(std::int64_t n, Residue q);

// Forbidden-Hamming-distance (two-symbol words) bounds.
BoundValue t_upper_general(std::int64_t n, Residue q);   // sum_{i=0}^{q-1} C(n,i)
BoundValue t_upper_divisible(std::int64_t n, Residue q); // sum_{i even, i<=q-1} C(n,i); needs q | n
BoundValue t_lower_general(std::int64_t n, Residue q);   // sum_{i even, i<=q-1} C(n,i)
BoundValue t_lower_special(std::int64_t n, Residue q);   // sum_{i=0}^{q-1} C(n,i); needs n ≡ -1 (mod q)

/// One table row: a formula evaluated at one parameter point.
struct BoundReport {
    std::string property;   // right-angle | corner | all-right | self-orth | hamming
    std::string formula_id;
    std::string side;       // "upper" | "lower"
    std::int64_t n = 0;
    Residue q = 0;
    std::optional<std::int64_t> k;
    bool main_term = false; // true when the value is an asymptotic main term only
    std::string note;       // e.g. "exact"
    Integer value;
};

/// All applicable formulas of one property over n-range x q-list (k required
/// for the corner property, ignored otherwise). Rows whose formula
/// preconditions fail at a grid point are omitted, not errors.
std::vector<BoundReport> bounds_table(const std::string& property,
                                      const std::vector<std::int64_t>& ns,
                                      const std::vector<Residue>& qs,
                                      std::optional<std::int64_t> k = std::nullopt);

std::string bounds_table_csv(const std::vector<BoundReport>& rows);

} // namespace fqs
