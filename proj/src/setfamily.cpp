#include "fqs/setfamily.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fqs {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

bool below_cap(std::int64_t v, const Rational& cap) {
    // v < num/den  ⟺  v*den < num (den > 0)
    return v * cap.den < cap.num;
}

Rational parse_rational(const std::string& s) {
    std::size_t slash = s.find('/');
    auto parse_part = [&](const std::string& part) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size())
            throw std::invalid_argument("bad rational '" + s + "'");
        return v;
    };
    if (slash == std::string::npos) return Rational(parse_part(s), 1);
    return Rational(parse_part(s.substr(0, slash)), parse_part(s.substr(slash + 1)));
}

namespace {

std::size_t intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0, c = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++c;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return c;
}

} // namespace

SetSystem greedy_packing(std::size_t n, std::size_t t, const Rational& cap) {
    if (t < 1 || t > n)
        throw std::invalid_argument("greedy_packing: need 1 <= t <= n, got t=" +
                                    std::to_string(t) + ", n=" + std::to_string(n));
    if (cap.num <= 0)
        throw std::invalid_argument("greedy_packing: cap must be positive, got " + cap.str());
    if (below_cap(static_cast<std::int64_t>(t), cap)) // t < cap  ⟺  cap > t
        throw std::invalid_argument("greedy_packing: cap must be <= t, got " + cap.str());

    SetSystem S;
    S.n = n;
    S.t = t;
    S.cap = cap;
    // Integer threshold: an integer v satisfies v < num/den  ⟺  v <= ceil(num/den) - 1.
    S.ell = static_cast<std::size_t>((cap.num + cap.den - 1) / cap.den);

    std::vector<int> block(t);
    for (std::size_t i = 0; i < t; ++i) block[i] = static_cast<int>(i + 1);
    while (true) {
        bool compatible = true;
        for (const auto& kept : S.blocks) {
            if (!below_cap(static_cast<std::int64_t>(intersection_size(block, kept)), cap)) {
                compatible = false;
                break;
            }
        }
        if (compatible) S.blocks.push_back(block);

        // next t-subset of {1..n} in lexicographic order
        std::size_t i = t;
        bool done = false;
        while (true) {
            if (i == 0) {
                done = true;
                break;
            }
            --i;
            if (block[i] != static_cast<int>(n - t + i + 1)) break;
        }
        if (done) break;
        ++block[i];
        for (std::size_t j = i + 1; j < t; ++j) block[j] = block[j - 1] + 1;
    }

    Integer denom = binom(static_cast<std::int64_t>(t), static_cast<std::int64_t>(S.ell));
    denom *= denom;
    Integer numer = binom(static_cast<std::int64_t>(n), static_cast<std::int64_t>(S.ell));
    S.floor_guarantee = (numer + denom - 1) / denom;
    return S;
}

std::optional<std::pair<std::size_t, std::size_t>> find_cap_violation(const SetSystem& S) {
    for (std::size_t i = 0; i < S.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < S.blocks.size(); ++j)
            if (!below_cap(static_cast<std::int64_t>(
                               intersection_size(S.blocks[i], S.blocks[j])),
                           S.cap))
                return std::make_pair(i, j);
    return std::nullopt;
}

PointSet char_vectors(const SetSystem& S, Residue q) {
    FieldSpec spec(q);
    std::vector<FVec> vecs;
    vecs.reserve(S.blocks.size());
    for (const auto& block : S.blocks) {
        std::vector<Residue> e(S.n, 0);
        for (int x : block) e[static_cast<std::size_t>(x - 1)] = 1;
        vecs.emplace_back(spec, std::move(e));
    }
    Provenance prov{"char-vectors",
                    {{"n", std::to_string(S.n)},
                     {"t", std::to_string(S.t)},
                     {"cap", S.cap.str()},
                     {"q", std::to_string(q)}}};
    return PointSet(spec, S.n, std::move(vecs), std::move(prov));
}

std::string format_set_system(const SetSystem& S) {
    std::string out = "n=" + std::to_string(S.n) + " t=" + std::to_string(S.t) +
                      " cap=" + S.cap.str() + "\n";
    for (const auto& block : S.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out.push_back(' ');
            out += std::to_string(block[i]);
        }
        out.push_back('\n');
    }
    return out;
}

SetSystem parse_set_system(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("empty set-system text");
    std::size_t n = 0, t = 0;
    Rational cap;
    {
        std::istringstream hs(header);
        std::string tok;
        bool saw_n = false, saw_t = false, saw_cap = false;
        while (hs >> tok) {
            if (tok.rfind("n=", 0) == 0) {
                n = std::stoul(tok.substr(2));
                saw_n = true;
            } else if (tok.rfind("t=", 0) == 0) {
                t = std::stoul(tok.substr(2));
                saw_t = true;
            } else if (tok.rfind("cap=", 0) == 0) {
                cap = parse_rational(tok.substr(4));
                saw_cap = true;
            } else {
                throw std::invalid_argument("bad set-system header token '" + tok + "'");
            }
        }
        if (!saw_n || !saw_t || !saw_cap)
            throw std::invalid_argument("set-system header must carry n=, t=, cap=");
    }
    SetSystem S;
    S.n = n;
    S.t = t;
    S.cap = cap;
    S.ell = static_cast<std::size_t>((cap.num + cap.den - 1) / cap.den);
    Integer denom = binom(static_cast<std::int64_t>(t), static_cast<std::int64_t>(S.ell));
    denom *= denom;
    S.floor_guarantee =
        (binom(static_cast<std::int64_t>(n), static_cast<std::int64_t>(S.ell)) + denom - 1) /
        denom;

    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<int> block;
        int x;
        while (ls >> x) {
            if (x < 1 || static_cast<std::size_t>(x) > n)
                throw std::invalid_argument("block element out of range: " + std::to_string(x));
            block.push_back(x);
        }
        if (block.size() != t)
            throw std::invalid_argument("block size " + std::to_string(block.size()) +
                                        " differs from t=" + std::to_string(t));
        for (std::size_t i = 1; i < block.size(); ++i)
            if (block[i - 1] >= block[i])
                throw std::invalid_argument("block elements must be strictly increasing");
        S.blocks.push_back(std::move(block));
    }
    return S;
}

} // namespace fqs
