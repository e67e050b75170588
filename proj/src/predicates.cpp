#include "fqs/predicates.hpp"

#include <stdexcept>

namespace fqs {

std::string config_kind_name(ConfigKind kind) {
    switch (kind) {
        case ConfigKind::RightAngle: return "right-angle";
        case ConfigKind::KRightCorner: return "k-right-corner";
        case ConfigKind::AllRightTriangle: return "all-right-triangle";
        case ConfigKind::SelfOrthDiff: return "self-orthogonal-diff";
        case ConfigKind::DivisibleHamming: return "divisible-hamming";
    }
    throw std::invalid_argument("unreachable configuration kind");
}

ConfigKind parse_config_kind(const std::string& name) {
    if (name == "right-angle") return ConfigKind::RightAngle;
    if (name == "k-right-corner" || name == "corner") return ConfigKind::KRightCorner;
    if (name == "all-right-triangle" || name == "all-right") return ConfigKind::AllRightTriangle;
    if (name == "self-orthogonal-diff" || name == "self-orth") return ConfigKind::SelfOrthDiff;
    if (name == "divisible-hamming" || name == "hamming") return ConfigKind::DivisibleHamming;
    throw std::invalid_argument("unknown configuration kind: '" + name + "'");
}

namespace {

// <x-z, y-z> mod q without building the difference vectors.
Residue corner_dot(const FVec& x, const FVec& y, const FVec& z) {
    const FieldSpec& F = x.spec();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        Residue a = F.sub(x[i], z[i]);
        Residue b = F.sub(y[i], z[i]);
        acc = (acc + static_cast<std::uint64_t>(a) * b) % F.q();
    }
    return static_cast<Residue>(acc);
}

void check_same_space(const FVec& a, const FVec& b, const char* op) {
    if (a.spec() != b.spec() || a.dim() != b.dim())
        throw std::invalid_argument(std::string(op) + ": vectors from different spaces");
}

} // namespace

bool is_right_angle(const FVec& x, const FVec& y, const FVec& z) {
    check_same_space(x, y, "is_right_angle");
    check_same_space(x, z, "is_right_angle");
    if (x == y || x == z || y == z) return false;
    return corner_dot(x, y, z) == 0;
}

bool is_k_right_corner(const FVec& x0, std::span<const FVec> rest) {
    if (rest.size() < 2)
        throw std::invalid_argument("is_k_right_corner: needs k >= 2 outer vectors");
    for (const FVec& r : rest) check_same_space(x0, r, "is_k_right_corner");
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest[i] == x0) return false;
        for (std::size_t j = i + 1; j < rest.size(); ++j)
            if (rest[i] == rest[j]) return false;
    }
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j)
            if (corner_dot(rest[i], rest[j], x0) != 0) return false;
    return true;
}

bool has_self_orth_diff(const FVec& x, const FVec& y) {
    check_same_space(x, y, "has_self_orth_diff");
    if (x == y) return false;
    return diff_self_dot(x, y) == 0;
}

namespace {

bool sides_pairwise_orthogonal(const FVec& x, const FVec& y, const FVec& z) {
    // <x-y, y-z> = 0, <y-z, z-x> = 0, <z-x, x-y> = 0: each is a corner dot
    // with the shared endpoint as corner, up to sign (which cannot move 0).
    return corner_dot(x, z, y) == 0 && corner_dot(y, x, z) == 0 && corner_dot(z, y, x) == 0;
}

bool sides_all_self_orthogonal(const FVec& x, const FVec& y, const FVec& z) {
    return diff_self_dot(x, y) == 0 && diff_self_dot(y, z) == 0 && diff_self_dot(z, x) == 0;
}

} // namespace

bool is_all_right_triangle(const FVec& x, const FVec& y, const FVec& z) {
    check_same_space(x, y, "is_all_right_triangle");
    check_same_space(x, z, "is_all_right_triangle");
    if (x == y || x == z || y == z) return false;
    return sides_pairwise_orthogonal(x, y, z);
}

bool all_right_equiv_witness(const FVec& x, const FVec& y, const FVec& z) {
    check_same_space(x, y, "all_right_equiv_witness");
    check_same_space(x, z, "all_right_equiv_witness");
    if (x == y || x == z || y == z)
        throw std::invalid_argument("all_right_equiv_witness: vectors must be distinct");
    return sides_pairwise_orthogonal(x, y, z) == sides_all_self_orthogonal(x, y, z);
}

std::size_t hamming(const FVec& x, const FVec& y) {
    check_same_space(x, y, "hamming");
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.dim(); ++i)
        if (x[i] != y[i]) ++d;
    return d;
}

bool has_divisible_distance(const FVec& x, const FVec& y) {
    if (x == y) return false;
    return hamming(x, y) % x.spec().q() == 0;
}

namespace {

struct Budget {
    std::uint64_t limit;
    std::uint64_t used = 0;
    /// True when another check is allowed; false means the budget is spent.
    bool take() {
        if (used >= limit) return false;
        ++used;
        return true;
    }
};

/// Visits all m-subsets of {0..size-1} in lexicographic order.
/// The callback returns true to stop the enumeration early.
template <typename F>
bool for_each_combination(std::size_t size, std::size_t m, F&& fn) {
    if (m > size) return false;
    std::vector<std::size_t> c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = i;
    while (true) {
        if (fn(c)) return true;
        // advance to the next combination
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (c[i] != i + size - m) break;
            if (i == 0) return false;
        }
        if (c[i] == i + size - m) return false;
        ++c[i];
        for (std::size_t j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
    }
}

} // namespace

ScanOutcome scan_set(std::span<const FVec> A, ConfigKind kind, std::size_t k,
                     std::uint64_t budget) {
    ScanOutcome out;
    Budget b{budget};
    bool exhausted = false;

    auto scan_pairs = [&](auto&& pred) {
        for_each_combination(A.size(), 2, [&](const std::vector<std::size_t>& c) {
            if (!b.take()) {
                exhausted = true;
                return true;
            }
            if (pred(A[c[0]], A[c[1]])) {
                out.violation = Violation{kind, {c[0], c[1]}};
                return true;
            }
            return false;
        });
    };

    switch (kind) {
        case ConfigKind::SelfOrthDiff:
            scan_pairs([](const FVec& x, const FVec& y) { return has_self_orth_diff(x, y); });
            break;
        case ConfigKind::DivisibleHamming:
            scan_pairs([](const FVec& x, const FVec& y) { return has_divisible_distance(x, y); });
            break;
        case ConfigKind::AllRightTriangle:
            for_each_combination(A.size(), 3, [&](const std::vector<std::size_t>& c) {
                if (!b.take()) {
                    exhausted = true;
                    return true;
                }
                if (is_all_right_triangle(A[c[0]], A[c[1]], A[c[2]])) {
                    out.violation = Violation{kind, {c[0], c[1], c[2]}};
                    return true;
                }
                return false;
            });
            break;
        case ConfigKind::RightAngle:
            for_each_combination(A.size(), 3, [&](const std::vector<std::size_t>& c) {
                // corner tried at each position, in increasing index order
                for (std::size_t ci = 0; ci < 3; ++ci) {
                    std::size_t corner = c[ci];
                    std::size_t u = c[(ci == 0) ? 1 : 0];
                    std::size_t v = c[(ci == 2) ? 1 : 2];
                    if (!b.take()) {
                        exhausted = true;
                        return true;
                    }
                    if (is_right_angle(A[u], A[v], A[corner])) {
                        out.violation = Violation{kind, {u, v, corner}};
                        return true;
                    }
                }
                return false;
            });
            break;
        case ConfigKind::KRightCorner: {
            if (k < 2) throw std::invalid_argument("scan_set: corner scans need k >= 2");
            for_each_combination(A.size(), k + 1, [&](const std::vector<std::size_t>& c) {
                for (std::size_t ci = 0; ci < c.size(); ++ci) {
                    std::vector<FVec> rest;
                    rest.reserve(k);
                    for (std::size_t j = 0; j < c.size(); ++j)
                        if (j != ci) rest.push_back(A[c[j]]);
                    if (!b.take()) {
                        exhausted = true;
                        return true;
                    }
                    if (is_k_right_corner(A[c[ci]], rest)) {
                        std::vector<std::size_t> w;
                        w.push_back(c[ci]);
                        for (std::size_t j = 0; j < c.size(); ++j)
                            if (j != ci) w.push_back(c[j]);
                        out.violation = Violation{kind, std::move(w)};
                        return true;
                    }
                }
                return false;
            });
            break;
        }
    }

    out.tuples_checked = b.used;
    if (out.violation)
        out.status = ScanStatus::ViolationFound;
    else if (exhausted)
        out.status = ScanStatus::BudgetExhausted;
    else
        out.status = ScanStatus::Ok;
    return out;
}

} // namespace fqs
