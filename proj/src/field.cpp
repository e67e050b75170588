#include "fqs/field.hpp"

#include <stdexcept>
#include <string>

namespace fqs {

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    if (m % 3 == 0) return m == 3;
    for (std::uint64_t d = 5; d <= m / d; d += 6) {
        if (m % d == 0 || m % (d + 2) == 0) return false;
    }
    return true;
}

FieldSpec::FieldSpec(Residue q) : q_(q) {
    if (q < 3)
        throw std::invalid_argument("field modulus must be an odd prime >= 3, got " +
                                    std::to_string(q));
    if (q % 2 == 0)
        throw std::invalid_argument("field modulus must be odd, got " + std::to_string(q));
    if (!is_prime(q)) {
        // Distinguish prime powers (q = p^e, e >= 2) to make the rejection
        // message actionable: such fields exist but are not supported here.
        for (Residue p = 3; static_cast<std::uint64_t>(p) * p <= q; p += 2) {
            if (q % p != 0) continue;
            std::uint64_t m = q;
            while (m % p == 0) m /= p;
            if (m == 1)
                throw std::invalid_argument("prime-power modulus " + std::to_string(q) +
                                            " = " + std::to_string(p) +
                                            "^e is not supported; modulus must be prime");
            break;
        }
        throw std::invalid_argument("field modulus must be prime, got composite " +
                                    std::to_string(q));
    }
}

Residue FieldSpec::pow(Residue a, std::uint64_t e) const noexcept {
    std::uint64_t base = a % q_;
    std::uint64_t acc = 1;
    while (e > 0) {
        if (e & 1) acc = acc * base % q_;
        base = base * base % q_;
        e >>= 1;
    }
    return static_cast<Residue>(acc);
}

Residue FieldSpec::inv(Residue a) const {
    if (a % q_ == 0) throw std::domain_error("division by zero in F_" + std::to_string(q_));
    return pow(a, q_ - 2);
}

FVec::FVec(FieldSpec spec, std::vector<Residue> entries) : spec_(spec), v_(std::move(entries)) {
    for (Residue& e : v_) e %= spec_.q();
}

std::strong_ordering FVec::operator<=>(const FVec& o) const noexcept {
    if (auto c = v_.size() <=> o.v_.size(); c != 0) return c;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (auto c = v_[i] <=> o.v_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

namespace {

void check_compatible(const FVec& x, const FVec& y, const char* op) {
    if (x.spec() != y.spec())
        throw std::invalid_argument(std::string(op) + ": field mismatch (q=" +
                                    std::to_string(x.spec().q()) + " vs q=" +
                                    std::to_string(y.spec().q()) + ")");
    if (x.dim() != y.dim())
        throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                    std::to_string(x.dim()) + " vs " +
                                    std::to_string(y.dim()) + ")");
}

} // namespace

Residue dot(const FVec& x, const FVec& y) {
    check_compatible(x, y, "dot");
    const FieldSpec& F = x.spec();
    // Entries are < q <= 2^32, so partial sums of products fit in uint64 for
    // the practical q here; reduce every step anyway to stay overflow-safe.
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        acc = (acc + static_cast<std::uint64_t>(x[i]) * y[i]) % F.q();
    }
    return static_cast<Residue>(acc);
}

FVec vsub(const FVec& x, const FVec& y) {
    check_compatible(x, y, "vsub");
    const FieldSpec& F = x.spec();
    std::vector<Residue> out(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) out[i] = F.sub(x[i], y[i]);
    return FVec(F, std::move(out));
}

FVec vadd(const FVec& x, const FVec& y) {
    check_compatible(x, y, "vadd");
    const FieldSpec& F = x.spec();
    std::vector<Residue> out(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) out[i] = F.add(x[i], y[i]);
    return FVec(F, std::move(out));
}

Residue diff_self_dot(const FVec& x, const FVec& y) {
    check_compatible(x, y, "diff_self_dot");
    const FieldSpec& F = x.spec();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        Residue d = F.sub(x[i], y[i]);
        acc = (acc + static_cast<std::uint64_t>(d) * d) % F.q();
    }
    return static_cast<Residue>(acc);
}

} // namespace fqs
