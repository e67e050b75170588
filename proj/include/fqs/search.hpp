#pragma once

#include <cstdint>
#include <vector>

#include "fqs/pointset.hpp"

namespace fqs {

enum class UniverseKind {
    FullSpace,      // all q^n vectors of F_q^n
    TwoSymbolWords, // all 2^n words, stored as 0/1 vectors (a = 1, b = 0)
};

/// A maximum-configuration-free-subset problem: a vector universe plus the
/// forbidden configuration. All shipped instances are translation-invariant
/// (the forbidden configurations depend only on differences), which licenses
/// the anchor-zero reduction: some maximum solution contains the zero vector.
struct ConflictInstance {
    FieldSpec spec;
    std::size_t n = 1;
    UniverseKind universe = UniverseKind::FullSpace;
    ConfigKind kind = ConfigKind::SelfOrthDiff;
    std::size_t k = 2; // corner order; read only for KRightCorner
    bool translation_invariant = true;
    /// Optional coordinate relabeling applied when materializing vectors
    /// (used to check that the optimum is permutation-invariant).
    std::vector<std::size_t> coord_perm;
};

std::uint64_t universe_size(const ConflictInstance& inst);
FVec universe_vector(const ConflictInstance& inst, std::uint64_t index);

/// Base-q positional bijection between {0 .. q^n - 1} and F_q^n, most
/// significant digit first, so index order equals lexicographic vector order.
std::uint64_t vec_rank(const FVec& v);
FVec vec_unrank(std::uint64_t index, std::size_t n, FieldSpec spec);

enum class SearchStatus { ProvenOptimal, BudgetExhausted };

struct SearchOptions {
    /// Branch-and-bound nodes allowed before giving up (then the result
    /// carries the best solution found and BudgetExhausted status).
    std::uint64_t node_budget = UINT64_MAX;
    /// Root the search at the zero vector (valid on translation-invariant
    /// instances; ignored otherwise).
    bool anchor_zero = true;
};

struct SearchResult {
    std::size_t optimum = 0; // proven maximum, or best found when budget ran out
    PointSet witness;
    std::uint64_t nodes_expanded = 0;
    SearchStatus status = SearchStatus::ProvenOptimal;
};

/// Maximum subset avoiding a forbidden *pair* configuration (self-orthogonal
/// difference or divisible Hamming distance): branch-and-bound maximum clique
/// in the compatibility graph with a greedy-coloring upper bound, vertices in
/// lexicographic order, ties broken toward the lowest index.
SearchResult exact_pairwise(const ConflictInstance& inst, const SearchOptions& opts = {});

/// Maximum subset avoiding a forbidden tuple configuration (right angle,
/// k-right corner, all-right triangle): backtracking over lexicographic
/// vector order; candidate lists are filtered incrementally, so the bound
/// |chosen| + |remaining candidates| is exact over filtered candidates.
SearchResult exact_tuplewise(const ConflictInstance& inst, const SearchOptions& opts = {});

ConflictInstance make_S_instance(std::size_t n, Residue q);
ConflictInstance make_T_instance(std::size_t n, Residue q);
ConflictInstance make_R_instance(std::size_t n, Residue q);
ConflictInstance make_corner_instance(std::size_t n, Residue q, std::size_t k);
ConflictInstance make_allright_instance(std::size_t n, Residue q);

SearchResult exact_S(std::size_t n, Residue q, const SearchOptions& opts = {});
SearchResult exact_T(std::size_t n, Residue q, const SearchOptions& opts = {});
SearchResult exact_R(std::size_t n, Residue q, const SearchOptions& opts = {});
/// Exposed for k >= 3 but expensive: tuple arity k+1 explodes quickly, so
/// budget exhaustion is the expected outcome beyond toy sizes.
SearchResult exact_corner(std::size_t n, Residue q, std::size_t k,
                          const SearchOptions& opts = {});
SearchResult exact_all_right(std::size_t n, Residue q, const SearchOptions& opts = {});

} // namespace fqs
