#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fqs/field.hpp"

namespace fqs {

/// The forbidden configurations a set can be scanned for.
enum class ConfigKind {
    RightAngle,
    KRightCorner,
    AllRightTriangle,
    SelfOrthDiff,
    DivisibleHamming,
};

/// Canonical name, e.g. "right-angle", "self-orthogonal-diff".
std::string config_kind_name(ConfigKind kind);
/// Accepts canonical names plus the short CLI aliases
/// (corner, all-right, self-orth, hamming). Throws on unknown tags.
ConfigKind parse_config_kind(const std::string& name);

/// True iff x, y, z are pairwise distinct and <x-z, y-z> = 0 (z is the corner).
bool is_right_angle(const FVec& x, const FVec& y, const FVec& z);

/// True iff x0 and the k >= 2 vectors in `rest` are all distinct and every
/// pair of differences (x_i - x0), (x_j - x0), i < j, is orthogonal.
bool is_k_right_corner(const FVec& x0, std::span<const FVec> rest);

/// True iff x != y and <x-y, x-y> = 0.
bool has_self_orth_diff(const FVec& x, const FVec& y);

/// True iff x, y, z are pairwise distinct and all three side pairs are
/// orthogonal: <x-y, y-z> = <y-z, z-x> = <z-x, x-y> = 0.
bool is_all_right_triangle(const FVec& x, const FVec& y, const FVec& z);

/// For distinct x, y, z over odd q, evaluates both descriptions of an
/// all-right triangle — pairwise-orthogonal sides versus all-self-orthogonal
/// sides — and returns whether they agree. Contract: always true.
bool all_right_equiv_witness(const FVec& x, const FVec& y, const FVec& z);

/// Number of coordinates where x and y differ (an ordinary count, not a residue).
std::size_t hamming(const FVec& x, const FVec& y);

/// True iff x != y and hamming(x, y) is divisible by the field modulus.
bool has_divisible_distance(const FVec& x, const FVec& y);

/// A forbidden configuration found inside a scanned set. For right angles the
/// indices are ordered (x, y, corner); for k-right corners the corner x0 comes
/// first; pair configurations list the pair in increasing index order.
struct Violation {
    ConfigKind kind;
    std::vector<std::size_t> indices;
};

enum class ScanStatus { Ok, ViolationFound, BudgetExhausted };

struct ScanOutcome {
    ScanStatus status = ScanStatus::Ok;
    std::optional<Violation> violation;
    std::uint64_t tuples_checked = 0;
};

/// Exhaustively scans A for the given configuration, visiting index tuples in
/// lexicographic order (and, within a tuple, trying corner positions in
/// increasing index order), so the reported violation is deterministic and
/// first in that order. `k` is only read for KRightCorner. `budget` caps the
/// number of tuple checks; exceeding it yields BudgetExhausted.
ScanOutcome scan_set(std::span<const FVec> A, ConfigKind kind, std::size_t k = 2,
                     std::uint64_t budget = UINT64_MAX);

} // namespace fqs
