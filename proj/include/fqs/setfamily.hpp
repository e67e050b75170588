#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqs/bigint.hpp"
#include "fqs/pointset.hpp"

namespace fqs {

/// Exact nonnegative rational intersection ceiling, kept in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    bool operator==(const Rational&) const = default;
    std::string str() const; // "p/r"
};

/// True iff the integer v is strictly below the rational cap.
bool below_cap(std::int64_t v, const Rational& cap);

/// Parse "p/r" or a plain integer "p".
Rational parse_rational(const std::string& s);

/// A t-uniform family of subsets of {1..n} whose pairwise intersections are
/// strictly below `cap`, in the order the blocks were chosen.
struct SetSystem {
    std::size_t n = 0;
    std::size_t t = 0;
    Rational cap;
    std::vector<std::vector<int>> blocks; // each sorted ascending, 1-based

    /// Integer threshold: |F ∩ G| < cap  ⟺  |F ∩ G| <= ell - 1.
    std::size_t ell = 0;
    /// ceil( C(n, ell) / C(t, ell)^2 ), the size the greedy construction is
    /// guaranteed (and tested) to reach.
    Integer floor_guarantee;
};

/// Scans all t-subsets of {1..n} in lexicographic order, keeping each block
/// whose intersection with every kept block is below cap.
/// Requires 1 <= t <= n and 0 < cap <= t.
SetSystem greedy_packing(std::size_t n, std::size_t t, const Rational& cap);

/// Re-verifies the pairwise-intersection invariant by exhaustive pair scan.
/// Returns the first offending pair of block indices, or nullopt if sound.
std::optional<std::pair<std::size_t, std::size_t>> find_cap_violation(const SetSystem& S);

/// One 0/1 characteristic vector of F_q^n per block, in block order.
PointSet char_vectors(const SetSystem& S, Residue q);

/// Serialization: header `n=<n> t=<t> cap=<p>/<r>`, then one block per line
/// as space-separated 1-based elements.
std::string format_set_system(const SetSystem& S);
SetSystem parse_set_system(const std::string& text);

} // namespace fqs
