#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace fqs {

using Residue = std::uint32_t;

/// Deterministic primality check (trial division); exact for all 64-bit inputs.
bool is_prime(std::uint64_t m);

/// Prime modulus q of an odd prime field. Construction validates q >= 3,
/// q odd, q prime; composite and prime-power moduli are rejected with a
/// descriptive error.
class FieldSpec {
public:
    explicit FieldSpec(Residue q);

    Residue q() const noexcept { return q_; }

    Residue reduce_u64(std::uint64_t x) const noexcept { return static_cast<Residue>(x % q_); }
    Residue reduce_i64(std::int64_t x) const noexcept {
        std::int64_t r = x % static_cast<std::int64_t>(q_);
        if (r < 0) r += q_;
        return static_cast<Residue>(r);
    }

    Residue add(Residue a, Residue b) const noexcept {
        Residue s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + q_ - b; }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : q_ - a; }
    Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % q_);
    }
    /// a^e by binary exponentiation; pow(a, 0) == 1 for every a, including 0.
    Residue pow(Residue a, std::uint64_t e) const noexcept;
    /// Multiplicative inverse via Fermat (a^(q-2)). Throws std::domain_error on a == 0.
    Residue inv(Residue a) const;

    bool operator==(const FieldSpec&) const = default;

private:
    Residue q_;
};

/// Vector over F_q with eagerly reduced entries; length fixed at construction,
/// so equality is entrywise comparison of canonical residues.
class FVec {
public:
    FVec(FieldSpec spec, std::vector<Residue> entries);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::size_t dim() const noexcept { return v_.size(); }
    Residue operator[](std::size_t i) const noexcept { return v_[i]; }
    std::span<const Residue> entries() const noexcept { return v_; }

    bool operator==(const FVec& o) const noexcept { return spec_ == o.spec_ && v_ == o.v_; }
    bool operator!=(const FVec& o) const noexcept { return !(*this == o); }
    /// Lexicographic order on entries (vectors of the same field/length).
    std::strong_ordering operator<=>(const FVec& o) const noexcept;

private:
    FieldSpec spec_;
    std::vector<Residue> v_;
};

/// <x,y> = sum x_i y_i mod q. Throws std::invalid_argument on field or length mismatch.
Residue dot(const FVec& x, const FVec& y);
FVec vsub(const FVec& x, const FVec& y);
FVec vadd(const FVec& x, const FVec& y);
/// <x-y, x-y> without materializing the difference.
Residue diff_self_dot(const FVec& x, const FVec& y);

} // namespace fqs
