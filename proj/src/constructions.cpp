#include "fqs/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fqs/io.hpp"

namespace fqs {

namespace {

/// Appends, in lexicographic order of the chosen position sets, every vector
/// with `symbol` at w chosen positions and `fill` elsewhere.
void append_fixed_count_vectors(std::vector<FVec>& out, const FieldSpec& spec, std::size_t n,
                                std::size_t w, Residue symbol, Residue fill) {
    if (w > n) return;
    std::vector<std::size_t> pos(w);
    for (std::size_t i = 0; i < w; ++i) pos[i] = i;
    while (true) {
        std::vector<Residue> e(n, fill);
        for (std::size_t p : pos) e[p] = symbol;
        out.emplace_back(spec, std::move(e));
        if (w == 0) return;
        std::size_t i = w;
        while (true) {
            if (i == 0) return;
            --i;
            if (pos[i] != n - w + i) break;
        }
        ++pos[i];
        for (std::size_t j = i + 1; j < w; ++j) pos[j] = pos[j - 1] + 1;
    }
}

std::string param(std::size_t v) { return std::to_string(v); }

} // namespace

PointSet corner_free_set(std::size_t n, Residue q, std::size_t k) {
    FieldSpec spec(q);
    if (k < 2) throw std::invalid_argument("corner_free_set: k must be >= 2");
    std::size_t t = k * q / (2 * k - 1);
    if (n < t)
        throw std::invalid_argument("corner_free_set: n must be >= t = floor(k*q/(2k-1)) = " +
                                    std::to_string(t) + ", got n = " + std::to_string(n));
    Rational cap(static_cast<std::int64_t>((k - 1) * t), static_cast<std::int64_t>(k));
    SetSystem S = greedy_packing(n, t, cap);
    PointSet cv = char_vectors(S, q);
    Provenance prov{"corner-free",
                    {{"n", param(n)},
                     {"q", param(q)},
                     {"k", param(k)},
                     {"t", param(t)},
                     {"cap", cap.str()}}};
    return PointSet(spec, n, cv.vectors(), std::move(prov), ConfigKind::KRightCorner, k);
}

PointSet right_angle_free_set(std::size_t n, Residue q) {
    PointSet base = corner_free_set(n, q, 2);
    Provenance prov{"right-angle-free", {{"n", param(n)}, {"q", param(q)}}};
    return PointSet(base.spec(), n, base.vectors(), std::move(prov), ConfigKind::RightAngle);
}

PointSet standard_basis_set(std::size_t n, Residue q) {
    FieldSpec spec(q);
    if (n < 1) throw std::invalid_argument("standard_basis_set: n must be >= 1");
    std::vector<FVec> vecs;
    vecs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Residue> e(n, 0);
        e[i] = 1;
        vecs.emplace_back(spec, std::move(e));
    }
    Provenance prov{"standard-basis", {{"n", param(n)}, {"q", param(q)}}};
    return PointSet(spec, n, std::move(vecs), std::move(prov), ConfigKind::RightAngle);
}

PointSet s_lower_basic(std::size_t n, Residue q) {
    FieldSpec spec(q);
    std::size_t w = static_cast<std::size_t>(q - 1);
    if (n < w)
        throw std::invalid_argument("s_lower_basic: n must be >= q-1 = " + std::to_string(w));
    std::vector<FVec> vecs;
    append_fixed_count_vectors(vecs, spec, n, w, 1, 0);
    Provenance prov{"s-lower-basic", {{"n", param(n)}, {"q", param(q)}}};
    return PointSet(spec, n, std::move(vecs), std::move(prov), ConfigKind::SelfOrthDiff);
}

std::optional<std::pair<Residue, Residue>> solve_ab(std::size_t n, Residue q) {
    FieldSpec F(q);
    Residue np2 = F.reduce_u64(n + 2);
    for (Residue a = 0; a < q; ++a) {
        Residue rhs = F.add(F.sub(F.mul(2 % q, F.mul(a, a)), F.mul(2 % q, a)), 1);
        for (Residue b = 0; b < q; ++b) {
            if (b == a) continue;
            if (F.mul(np2, F.mul(b, b)) == rhs) return std::make_pair(a, b);
        }
    }
    return std::nullopt;
}

PointSet make_s_lower_augmented_with(std::size_t n, Residue q, Residue a, Residue b) {
    FieldSpec spec(q);
    if (a >= q || b >= q || a == b)
        throw std::invalid_argument("make_s_lower_augmented_with: need distinct residues a, b");
    std::size_t w1 = static_cast<std::size_t>(q - 1);
    std::size_t w2 = static_cast<std::size_t>(q - 2);
    if (n < w1)
        throw std::invalid_argument("make_s_lower_augmented_with: n must be >= q-1");
    std::vector<FVec> vecs;
    append_fixed_count_vectors(vecs, spec, n, w1, 1, 0);
    std::size_t first_class = vecs.size();
    append_fixed_count_vectors(vecs, spec, n, w2, a, b);
    // The size claim C(n,q-1) + C(n,q-2) presumes the two classes share no
    // vector; refuse to silently deduplicate if they ever do.
    std::vector<FVec> sorted_first(vecs.begin(),
                                   vecs.begin() + static_cast<std::ptrdiff_t>(first_class));
    std::sort(sorted_first.begin(), sorted_first.end());
    for (std::size_t i = first_class; i < vecs.size(); ++i) {
        if (std::binary_search(sorted_first.begin(), sorted_first.end(), vecs[i]))
            throw std::domain_error(
                "make_s_lower_augmented_with: the two vector classes overlap at '" +
                format_vector_line(vecs[i]) + "', size claim would be wrong");
    }
    Provenance prov{"s-lower-augmented",
                    {{"n", param(n)}, {"q", param(q)}, {"a", param(a)}, {"b", param(b)}}};
    return PointSet(spec, n, std::move(vecs), std::move(prov), ConfigKind::SelfOrthDiff);
}

PointSet s_lower_augmented(std::size_t n, Residue q) {
    auto ab = solve_ab(n, q);
    if (!ab)
        throw std::domain_error("s_lower_augmented: (n+2)b^2 = 2a^2-2a+1 has no solution with "
                                "a != b over F_" +
                                std::to_string(q) + " for n = " + std::to_string(n));
    return make_s_lower_augmented_with(n, q, ab->first, ab->second);
}

PointSet s3_exact(std::size_t n) {
    FieldSpec spec(3);
    if (n < 2 || n % 3 != 2)
        throw std::invalid_argument("s3_exact: n ≡ 2 (mod 3) required, got n = " +
                                    std::to_string(n));
    std::vector<FVec> vecs;
    append_fixed_count_vectors(vecs, spec, n, 2, 1, 0); // exactly two entries 1
    append_fixed_count_vectors(vecs, spec, n, 1, 0, 2); // one entry 0, rest 2
    append_fixed_count_vectors(vecs, spec, n, 1, 1, 2); // one entry 1, rest 2
    append_fixed_count_vectors(vecs, spec, n, 1, 0, 1); // one entry 0, rest 1
    vecs.emplace_back(spec, std::vector<Residue>(n, 0)); // all-zero
    vecs.emplace_back(spec, std::vector<Residue>(n, 2)); // all-2
    Provenance prov{"s3-exact", {{"n", param(n)}, {"q", "3"}}};
    return PointSet(spec, n, std::move(vecs), std::move(prov), ConfigKind::SelfOrthDiff);
}

PointSet s3_padded(std::size_t n) {
    if (n < 3) throw std::invalid_argument("s3_padded: n must be >= 3");
    if (n % 3 == 2)
        throw std::invalid_argument("s3_padded: n ≡ 2 (mod 3) has the exact construction; "
                                    "use s3_exact");
    std::size_t pads = (n % 3 == 0) ? 1 : 2;
    PointSet base = s3_exact(n - pads);
    FieldSpec spec(3);
    std::vector<FVec> vecs;
    vecs.reserve(base.size());
    for (const FVec& v : base.vectors()) {
        std::vector<Residue> e(v.entries().begin(), v.entries().end());
        e.resize(n, 0);
        vecs.emplace_back(spec, std::move(e));
    }
    Provenance prov{"s3-padded", {{"n", param(n)}, {"q", "3"}, {"pads", param(pads)}}};
    return PointSet(spec, n, std::move(vecs), std::move(prov), ConfigKind::SelfOrthDiff);
}

namespace {

void check_alphabet(const FieldSpec& spec, Alphabet al, const char* who) {
    if (al.a >= spec.q() || al.b >= spec.q() || al.a == al.b)
        throw std::invalid_argument(std::string(who) +
                                    ": alphabet symbols must be distinct residues mod q");
}

std::vector<std::pair<std::string, std::string>> word_params(std::size_t n, Residue q,
                                                             Alphabet al) {
    return {{"n", param(n)},
            {"q", param(q)},
            {"a", std::to_string(al.a)},
            {"b", std::to_string(al.b)}};
}

} // namespace

PointSet t_lower_even(std::size_t n, Residue q, Alphabet alphabet) {
    FieldSpec spec(q);
    check_alphabet(spec, alphabet, "t_lower_even");
    if (n < 1) throw std::invalid_argument("t_lower_even: n must be >= 1");
    std::vector<FVec> vecs;
    for (std::size_t c = 0; c <= std::min<std::size_t>(q - 1, n); c += 2)
        append_fixed_count_vectors(vecs, spec, n, c, alphabet.a, alphabet.b);
    Provenance prov{"t-lower-even", word_params(n, q, alphabet)};
    return PointSet(spec, n, std::move(vecs), std::move(prov), ConfigKind::DivisibleHamming);
}

PointSet t_lower_augmented(std::size_t n, Residue q, Alphabet alphabet) {
    FieldSpec spec(q);
    check_alphabet(spec, alphabet, "t_lower_augmented");
    if ((n + 1) % q != 0)
        throw std::invalid_argument("t_lower_augmented: n ≡ -1 (mod q) required, got n = " +
                                    std::to_string(n) + ", q = " + std::to_string(q));
    PointSet even = t_lower_even(n, q, alphabet);
    std::vector<FVec> vecs = even.vectors();
    for (std::size_t c = 1; c <= std::min<std::size_t>(q - 2, n); c += 2)
        append_fixed_count_vectors(vecs, spec, n, c, alphabet.b, alphabet.a); // b-count odd
    Provenance prov{"t-lower-augmented", word_params(n, q, alphabet)};
    return PointSet(spec, n, std::move(vecs), std::move(prov), ConfigKind::DivisibleHamming);
}

PointSet to_pm1(const PointSet& words, Alphabet alphabet) {
    const FieldSpec& spec = words.spec();
    check_alphabet(spec, alphabet, "to_pm1");
    std::vector<FVec> vecs;
    vecs.reserve(words.size());
    for (const FVec& w : words.vectors()) {
        std::vector<Residue> e(w.dim());
        for (std::size_t i = 0; i < w.dim(); ++i) {
            if (w[i] == alphabet.a)
                e[i] = 1;
            else if (w[i] == alphabet.b)
                e[i] = spec.q() - 1;
            else
                throw std::invalid_argument("to_pm1: entry " + std::to_string(w[i]) +
                                            " is neither alphabet symbol");
        }
        vecs.emplace_back(spec, std::move(e));
    }
    Provenance prov{"pm1-embed",
                    {{"source", words.provenance().name},
                     {"n", param(words.n())},
                     {"q", param(spec.q())}}};
    return PointSet(spec, words.n(), std::move(vecs), std::move(prov),
                    words.claimed_property(), words.claimed_k());
}

} // namespace fqs
