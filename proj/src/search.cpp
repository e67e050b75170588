#include "fqs/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fqs {

std::uint64_t universe_size(const ConflictInstance& inst) {
    std::uint64_t base = inst.universe == UniverseKind::FullSpace ? inst.spec.q() : 2;
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < inst.n; ++i) {
        if (size > UINT64_MAX / base) throw std::invalid_argument("universe too large");
        size *= base;
    }
    return size;
}

std::uint64_t vec_rank(const FVec& v) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) idx = idx * v.spec().q() + v[i];
    return idx;
}

FVec vec_unrank(std::uint64_t index, std::size_t n, FieldSpec spec) {
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (space > UINT64_MAX / spec.q())
            throw std::invalid_argument("vec_unrank: q^n overflows");
        space *= spec.q();
    }
    if (index >= space)
        throw std::invalid_argument("vec_unrank: index " + std::to_string(index) +
                                    " out of range for q^n = " + std::to_string(space));
    std::vector<Residue> e(n);
    for (std::size_t i = n; i-- > 0;) {
        e[i] = static_cast<Residue>(index % spec.q());
        index /= spec.q();
    }
    return FVec(spec, std::move(e));
}

FVec universe_vector(const ConflictInstance& inst, std::uint64_t index) {
    std::vector<Residue> digits(inst.n);
    std::uint64_t base = inst.universe == UniverseKind::FullSpace ? inst.spec.q() : 2;
    for (std::size_t i = inst.n; i-- > 0;) {
        digits[i] = static_cast<Residue>(index % base);
        index /= base;
    }
    if (!inst.coord_perm.empty()) {
        if (inst.coord_perm.size() != inst.n)
            throw std::invalid_argument("coord_perm size must equal n");
        std::vector<Residue> permuted(inst.n);
        for (std::size_t i = 0; i < inst.n; ++i) permuted[i] = digits[inst.coord_perm[i]];
        digits = std::move(permuted);
    }
    return FVec(inst.spec, std::move(digits));
}

namespace {

std::vector<FVec> materialize_universe(const ConflictInstance& inst, std::uint64_t cap,
                                       const char* who) {
    std::uint64_t size = universe_size(inst);
    if (size > cap)
        throw std::invalid_argument(std::string(who) + ": universe of " + std::to_string(size) +
                                    " vectors exceeds the supported " + std::to_string(cap));
    std::vector<FVec> U;
    U.reserve(size);
    for (std::uint64_t i = 0; i < size; ++i) U.push_back(universe_vector(inst, i));
    return U;
}

PointSet witness_from_indices(const ConflictInstance& inst, const std::vector<FVec>& U,
                              std::vector<std::uint32_t> picks, const SearchOptions& opts) {
    std::sort(picks.begin(), picks.end());
    std::vector<FVec> vecs;
    vecs.reserve(picks.size());
    for (std::uint32_t p : picks) vecs.push_back(U[p]);
    Provenance prov{"search-witness",
                    {{"kind", config_kind_name(inst.kind)},
                     {"n", std::to_string(inst.n)},
                     {"q", std::to_string(inst.spec.q())},
                     {"k", std::to_string(inst.k)},
                     {"anchor", opts.anchor_zero && inst.translation_invariant ? "1" : "0"}}};
    return PointSet(inst.spec, inst.n, std::move(vecs), std::move(prov), inst.kind, inst.k);
}

// ---- pairwise solver: maximum clique in the compatibility graph ----------

struct BitGraph {
    std::size_t n_vertices = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> adj; // n_vertices rows of `words` words

    std::uint64_t* row(std::size_t v) { return adj.data() + v * words; }
    const std::uint64_t* row(std::size_t v) const { return adj.data() + v * words; }
    void set(std::size_t u, std::size_t v) { row(u)[v >> 6] |= 1ull << (v & 63); }
};

struct PairwiseSearcher {
    const BitGraph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::size_t best_size = 0;
    std::vector<std::uint32_t> best, current;

    // scratch for set operations
    std::size_t words;

    PairwiseSearcher(const BitGraph& graph, std::uint64_t node_budget)
        : g(graph), budget(node_budget), words(graph.words) {}

    void record_if_better() {
        if (current.size() > best_size) {
            best_size = current.size();
            best = current;
        }
    }

    static int lowest_bit(const std::uint64_t* set, std::size_t words) {
        for (std::size_t w = 0; w < words; ++w)
            if (set[w]) return static_cast<int>(w * 64 + static_cast<std::size_t>(
                                                              __builtin_ctzll(set[w])));
        return -1;
    }

    void expand(std::vector<std::uint64_t> P) {
        ++nodes;
        if (nodes > budget) {
            exhausted = true;
            return;
        }
        bool empty = std::all_of(P.begin(), P.end(), [](std::uint64_t w) { return w == 0; });
        if (empty) {
            record_if_better();
            return;
        }

        // Greedy coloring in increasing vertex order; candidates end up
        // ordered by (color, index), both ascending.
        std::vector<std::uint32_t> order;
        std::vector<std::uint32_t> color_of;
        {
            std::vector<std::uint64_t> uncolored = P;
            std::vector<std::uint64_t> classq(words);
            std::uint32_t color = 0;
            while (true) {
                int v0 = lowest_bit(uncolored.data(), words);
                if (v0 < 0) break;
                ++color;
                classq = uncolored;
                while (true) {
                    int v = lowest_bit(classq.data(), words);
                    if (v < 0) break;
                    auto vu = static_cast<std::size_t>(v);
                    order.push_back(static_cast<std::uint32_t>(vu));
                    color_of.push_back(color);
                    uncolored[vu >> 6] &= ~(1ull << (vu & 63));
                    classq[vu >> 6] &= ~(1ull << (vu & 63));
                    const std::uint64_t* av = g.row(vu);
                    for (std::size_t w = 0; w < words; ++w) classq[w] &= ~av[w];
                }
            }
        }

        std::vector<std::uint64_t> work = P;
        for (std::size_t i = order.size(); i-- > 0;) {
            if (exhausted) return;
            if (current.size() + color_of[i] <= best_size) return;
            std::uint32_t v = order[i];
            current.push_back(v);
            std::vector<std::uint64_t> next(words);
            const std::uint64_t* av = g.row(v);
            bool any = false;
            for (std::size_t w = 0; w < words; ++w) {
                next[w] = work[w] & av[w];
                any |= next[w] != 0;
            }
            if (!any)
                record_if_better();
            else
                expand(std::move(next));
            current.pop_back();
            work[v >> 6] &= ~(1ull << (v & 63));
        }
    }
};

bool pair_conflict(ConfigKind kind, const FVec& x, const FVec& y) {
    switch (kind) {
        case ConfigKind::SelfOrthDiff: return has_self_orth_diff(x, y);
        case ConfigKind::DivisibleHamming: return has_divisible_distance(x, y);
        default:
            throw std::invalid_argument("exact_pairwise: configuration '" +
                                        config_kind_name(kind) + "' is not a pair predicate");
    }
}

} // namespace

SearchResult exact_pairwise(const ConflictInstance& inst, const SearchOptions& opts) {
    std::vector<FVec> U = materialize_universe(inst, 1ull << 16, "exact_pairwise");
    const std::size_t N = U.size();

    BitGraph g;
    g.n_vertices = N;
    g.words = (N + 63) / 64;
    g.adj.assign(N * g.words, 0);
    for (std::size_t u = 0; u < N; ++u)
        for (std::size_t v = u + 1; v < N; ++v)
            if (!pair_conflict(inst.kind, U[u], U[v])) {
                g.set(u, v);
                g.set(v, u);
            }

    PairwiseSearcher searcher(g, opts.node_budget);
    bool anchored = opts.anchor_zero && inst.translation_invariant;

    std::vector<std::uint64_t> P(g.words, 0);
    if (anchored) {
        searcher.current.push_back(0);
        const std::uint64_t* a0 = g.row(0);
        std::copy(a0, a0 + g.words, P.begin());
    } else {
        for (std::size_t v = 0; v < N; ++v) P[v >> 6] |= 1ull << (v & 63);
    }

    // Deterministic greedy seed: always take the lowest compatible vertex.
    {
        std::vector<std::uint64_t> Pg = P;
        std::vector<std::uint32_t> seed = searcher.current;
        while (true) {
            int v = PairwiseSearcher::lowest_bit(Pg.data(), g.words);
            if (v < 0) break;
            auto vu = static_cast<std::size_t>(v);
            seed.push_back(static_cast<std::uint32_t>(vu));
            const std::uint64_t* av = g.row(vu);
            for (std::size_t w = 0; w < g.words; ++w) Pg[w] &= av[w];
        }
        searcher.best = seed;
        searcher.best_size = seed.size();
    }

    searcher.expand(std::move(P));

    SearchResult result{searcher.best_size,
                        witness_from_indices(inst, U, searcher.best, opts),
                        searcher.nodes,
                        searcher.exhausted ? SearchStatus::BudgetExhausted
                                           : SearchStatus::ProvenOptimal};
    return result;
}

// ---- tuplewise solver -----------------------------------------------------

namespace {

struct TupleSearcher {
    const std::vector<FVec>& U;
    ConfigKind kind;
    std::size_t k;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::vector<std::uint32_t> best, current;

    /// True iff adding `cand` to `current` (which already contains `last`
    /// as its most recent member) creates a forbidden tuple that uses both.
    /// Tuples not involving `last` were already excluded when `cand` passed
    /// the previous filter round.
    bool creates_conflict_with_last(std::uint32_t cand) const {
        std::uint32_t last = current.back();
        const FVec& xc = U[cand];
        const FVec& xl = U[last];
        switch (kind) {
            case ConfigKind::RightAngle: {
                for (std::size_t i = 0; i + 1 < current.size(); ++i) {
                    const FVec& xa = U[current[i]];
                    if (is_right_angle(xl, xc, xa) || is_right_angle(xa, xc, xl) ||
                        is_right_angle(xa, xl, xc))
                        return true;
                }
                return false;
            }
            case ConfigKind::AllRightTriangle: {
                for (std::size_t i = 0; i + 1 < current.size(); ++i)
                    if (is_all_right_triangle(U[current[i]], xl, xc)) return true;
                return false;
            }
            case ConfigKind::KRightCorner: {
                if (current.size() < k) return false; // tuple needs k+1 members
                // choose k-1 further members from current minus `last`
                std::size_t m = current.size() - 1;
                std::vector<std::size_t> idx(k - 1);
                for (std::size_t i = 0; i < k - 1; ++i) idx[i] = i;
                while (true) {
                    std::vector<FVec> tuple;
                    tuple.reserve(k + 1);
                    tuple.push_back(xl);
                    tuple.push_back(xc);
                    for (std::size_t i : idx) tuple.push_back(U[current[i]]);
                    for (std::size_t corner = 0; corner < tuple.size(); ++corner) {
                        std::vector<FVec> rest;
                        rest.reserve(k);
                        for (std::size_t j = 0; j < tuple.size(); ++j)
                            if (j != corner) rest.push_back(tuple[j]);
                        if (is_k_right_corner(tuple[corner], rest)) return true;
                    }
                    std::size_t i = k - 1;
                    bool done = false;
                    while (true) {
                        if (i == 0) {
                            done = true;
                            break;
                        }
                        --i;
                        if (idx[i] != i + m - (k - 1)) break;
                    }
                    if (done || idx[i] == i + m - (k - 1)) break;
                    ++idx[i];
                    for (std::size_t j = i + 1; j < k - 1; ++j) idx[j] = idx[j - 1] + 1;
                }
                return false;
            }
            default:
                throw std::invalid_argument("exact_tuplewise: configuration '" +
                                            config_kind_name(kind) +
                                            "' is not a tuple predicate");
        }
    }

    void rec(const std::vector<std::uint32_t>& cand) {
        ++nodes;
        if (nodes > budget) {
            exhausted = true;
            return;
        }
        if (current.size() > best.size()) best = current;
        if (current.size() + cand.size() <= best.size()) return;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (exhausted) return;
            if (current.size() + (cand.size() - i) <= best.size()) return;
            current.push_back(cand[i]);
            std::vector<std::uint32_t> next;
            next.reserve(cand.size() - i - 1);
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (!creates_conflict_with_last(cand[j])) next.push_back(cand[j]);
            rec(next);
            current.pop_back();
        }
    }
};

} // namespace

SearchResult exact_tuplewise(const ConflictInstance& inst, const SearchOptions& opts) {
    if (inst.kind == ConfigKind::KRightCorner && inst.k < 2)
        throw std::invalid_argument("exact_tuplewise: corner instances need k >= 2");
    std::vector<FVec> U = materialize_universe(inst, 1ull << 12, "exact_tuplewise");
    const std::size_t N = U.size();

    TupleSearcher searcher{U, inst.kind, inst.k, opts.node_budget};
    bool anchored = opts.anchor_zero && inst.translation_invariant;

    std::vector<std::uint32_t> cand;
    cand.reserve(N);
    if (anchored) {
        searcher.current.push_back(0);
        for (std::size_t v = 1; v < N; ++v) cand.push_back(static_cast<std::uint32_t>(v));
    } else {
        for (std::size_t v = 0; v < N; ++v) cand.push_back(static_cast<std::uint32_t>(v));
    }
    searcher.best = searcher.current; // never worse than the bare anchor
    searcher.rec(cand);

    SearchResult result{searcher.best.size(),
                        witness_from_indices(inst, U, searcher.best, opts),
                        searcher.nodes,
                        searcher.exhausted ? SearchStatus::BudgetExhausted
                                           : SearchStatus::ProvenOptimal};
    return result;
}

// ---- instance factories and wrappers --------------------------------------

ConflictInstance make_S_instance(std::size_t n, Residue q) {
    return ConflictInstance{FieldSpec(q), n, UniverseKind::FullSpace,
                            ConfigKind::SelfOrthDiff, 2, true, {}};
}

ConflictInstance make_T_instance(std::size_t n, Residue q) {
    return ConflictInstance{FieldSpec(q), n, UniverseKind::TwoSymbolWords,
                            ConfigKind::DivisibleHamming, 2, true, {}};
}

ConflictInstance make_R_instance(std::size_t n, Residue q) {
    return ConflictInstance{FieldSpec(q), n, UniverseKind::FullSpace,
                            ConfigKind::RightAngle, 2, true, {}};
}

ConflictInstance make_corner_instance(std::size_t n, Residue q, std::size_t k) {
    if (k < 2) throw std::invalid_argument("make_corner_instance: k must be >= 2");
    return ConflictInstance{FieldSpec(q), n, UniverseKind::FullSpace,
                            ConfigKind::KRightCorner, k, true, {}};
}

ConflictInstance make_allright_instance(std::size_t n, Residue q) {
    return ConflictInstance{FieldSpec(q), n, UniverseKind::FullSpace,
                            ConfigKind::AllRightTriangle, 2, true, {}};
}

SearchResult exact_S(std::size_t n, Residue q, const SearchOptions& opts) {
    return exact_pairwise(make_S_instance(n, q), opts);
}

SearchResult exact_T(std::size_t n, Residue q, const SearchOptions& opts) {
    return exact_pairwise(make_T_instance(n, q), opts);
}

SearchResult exact_R(std::size_t n, Residue q, const SearchOptions& opts) {
    return exact_tuplewise(make_R_instance(n, q), opts);
}

SearchResult exact_corner(std::size_t n, Residue q, std::size_t k, const SearchOptions& opts) {
    return exact_tuplewise(make_corner_instance(n, q, k), opts);
}

SearchResult exact_all_right(std::size_t n, Residue q, const SearchOptions& opts) {
    return exact_tuplewise(make_allright_instance(n, q), opts);
}

} // namespace fqs
