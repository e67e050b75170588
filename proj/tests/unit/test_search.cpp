#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fqs/search.hpp"

using namespace fqs;

namespace {

/// Oracle: maximum configuration-free subset by enumerating every subset of
/// the universe (usable up to ~2^16 subsets) and scanning each candidate.
std::size_t brute_force_max(const ConflictInstance& inst) {
    std::uint64_t usize = universe_size(inst);
    REQUIRE(usize <= 16);
    std::vector<FVec> U;
    for (std::uint64_t i = 0; i < usize; ++i) U.push_back(universe_vector(inst, i));

    std::size_t best = 0;
    for (std::uint64_t mask = 1; mask < (1ull << usize); ++mask) {
        std::size_t count = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (count <= best) continue;
        std::vector<FVec> subset;
        for (std::uint64_t i = 0; i < usize; ++i)
            if (mask & (1ull << i)) subset.push_back(U[i]);
        if (scan_set(subset, inst.kind, inst.k).status == ScanStatus::Ok) best = count;
    }
    return best;
}

}  // namespace

TEST_CASE("rank and unrank are a lexicographic bijection") {
    FieldSpec F(3);
    FVec prev = vec_unrank(0, 4, F);
    CHECK(vec_rank(prev) == 0);
    for (std::uint64_t i = 1; i < 81; ++i) {
        FVec v = vec_unrank(i, 4, F);
        CHECK(vec_rank(v) == i);
        CHECK(prev < v);
        prev = v;
    }
    CHECK_THROWS_AS(vec_unrank(81, 4, F), std::invalid_argument);
}

TEST_CASE("two-symbol universes materialize 0/1 words in binary order") {
    ConflictInstance inst = make_T_instance(3, 3);
    CHECK(universe_size(inst) == 8);
    CHECK(universe_vector(inst, 0) == FVec(inst.spec, {0, 0, 0}));
    CHECK(universe_vector(inst, 3) == FVec(inst.spec, {0, 1, 1}));
    CHECK(universe_vector(inst, 5) == FVec(inst.spec, {1, 0, 1}));
}

TEST_CASE("pairwise search matches the subset oracle") {
    // S(2,3): 9 vectors, 2^9 subsets
    ConflictInstance s23 = make_S_instance(2, 3);
    std::size_t oracle = brute_force_max(s23);
    SearchResult res = exact_pairwise(s23);
    CHECK(res.status == SearchStatus::ProvenOptimal);
    CHECK(res.optimum == oracle);
    CHECK(res.optimum == 9);  // no nonzero self-orthogonal vectors in the plane

    // T(3,3): 8 words
    ConflictInstance t33 = make_T_instance(3, 3);
    CHECK(exact_pairwise(t33).optimum == brute_force_max(t33));
    CHECK(exact_T(3, 3).optimum == 4);

    // T(4,3): 16 words
    ConflictInstance t43 = make_T_instance(4, 3);
    std::size_t t43_oracle = brute_force_max(t43);
    CHECK(t43_oracle == 8);
    CHECK(exact_T(4, 3).optimum == t43_oracle);
}

TEST_CASE("tuplewise search matches the subset oracle") {
    ConflictInstance r13 = make_R_instance(1, 3);
    CHECK(brute_force_max(r13) == 3);  // no right angles exist on a line
    SearchResult res = exact_R(1, 3);
    CHECK(res.status == SearchStatus::ProvenOptimal);
    CHECK(res.optimum == 3);

    ConflictInstance r23 = make_R_instance(2, 3);
    std::size_t r23_oracle = brute_force_max(r23);
    CHECK(exact_R(2, 3).optimum == r23_oracle);

    ConflictInstance ar23 = make_allright_instance(2, 3);
    CHECK(brute_force_max(ar23) == 9);  // no self-orthogonal sides exist in the plane
    CHECK(exact_all_right(2, 3).optimum == 9);

    ConflictInstance c233 = make_corner_instance(2, 3, 3);
    CHECK(exact_corner(2, 3, 3).optimum == brute_force_max(c233));
}

TEST_CASE("witnesses verify and carry search provenance") {
    SearchResult res = exact_S(3, 3);
    CHECK(res.witness.size() == res.optimum);
    CHECK(res.witness.scan_claimed().status == ScanStatus::Ok);
    CHECK(res.witness.provenance().name == "search-witness");

    SearchResult rr = exact_R(2, 3);
    CHECK(rr.witness.size() == rr.optimum);
    CHECK(rr.witness.scan_claimed().status == ScanStatus::Ok);
}

TEST_CASE("anchoring at the zero vector does not change the optimum") {
    SearchOptions anchored;
    SearchOptions free_opts;
    free_opts.anchor_zero = false;

    CHECK(exact_S(3, 3, anchored).optimum == exact_S(3, 3, free_opts).optimum);
    CHECK(exact_T(4, 3, anchored).optimum == exact_T(4, 3, free_opts).optimum);
    CHECK(exact_T(5, 3, anchored).optimum == exact_T(5, 3, free_opts).optimum);
    CHECK(exact_R(2, 3, anchored).optimum == exact_R(2, 3, free_opts).optimum);
    CHECK(exact_all_right(2, 3, anchored).optimum == exact_all_right(2, 3, free_opts).optimum);
}

TEST_CASE("the optimum is invariant under coordinate permutation") {
    ConflictInstance plain = make_S_instance(4, 3);
    ConflictInstance permuted = plain;
    permuted.coord_perm = {3, 1, 0, 2};
    CHECK(exact_pairwise(plain).optimum == exact_pairwise(permuted).optimum);

    ConflictInstance tplain = make_T_instance(5, 3);
    ConflictInstance tperm = tplain;
    tperm.coord_perm = {4, 3, 2, 1, 0};
    CHECK(exact_pairwise(tplain).optimum == exact_pairwise(tperm).optimum);
}

TEST_CASE("node budgets end the search with a usable incumbent") {
    SearchOptions tight;
    tight.node_budget = 1;
    SearchResult res = exact_S(4, 3, tight);
    CHECK(res.status == SearchStatus::BudgetExhausted);
    CHECK(res.optimum >= 1);
    CHECK(res.optimum <= 27);
    CHECK(res.witness.scan_claimed().status == ScanStatus::Ok);
    CHECK(res.nodes_expanded >= 1);
}

TEST_CASE("oversized universes are rejected up front") {
    CHECK_THROWS_AS(exact_T(17, 3), std::invalid_argument);   // 2^17 over the pairwise cap
    CHECK_THROWS_AS(exact_S(11, 3), std::invalid_argument);   // 3^11 over the pairwise cap
    CHECK_THROWS_AS(exact_R(8, 3), std::invalid_argument);    // 3^8 over the tuplewise cap
    CHECK_THROWS_AS(exact_all_right(8, 3), std::invalid_argument);
}

TEST_CASE("search rejects non-pair kinds in the pairwise solver and vice versa") {
    ConflictInstance bad = make_S_instance(2, 3);
    bad.kind = ConfigKind::RightAngle;
    CHECK_THROWS_AS(exact_pairwise(bad), std::invalid_argument);
    ConflictInstance bad2 = make_R_instance(2, 3);
    bad2.kind = ConfigKind::SelfOrthDiff;
    CHECK_THROWS_AS(exact_tuplewise(bad2), std::invalid_argument);
}

TEST_CASE("known exact values are reproduced") {
    CHECK(exact_S(2, 3).optimum == 9);
    CHECK(exact_S(3, 3).optimum == 9);
    CHECK(exact_S(4, 3).optimum == 9);
    CHECK(exact_T(3, 3).optimum == 4);
    CHECK(exact_T(4, 3).optimum == 8);
    CHECK(exact_T(5, 3).optimum == 16);
    CHECK(exact_T(6, 3).optimum == 16);
    CHECK(exact_R(1, 3).optimum == 3);
    CHECK(exact_R(2, 3).optimum == 3);
}
