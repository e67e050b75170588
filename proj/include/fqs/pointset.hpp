#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqs/field.hpp"
#include "fqs/predicates.hpp"

namespace fqs {

/// Which constructor made a set and with what parameters (ordered, so
/// serialized provenance is deterministic).
struct Provenance {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
};

/// A finite list of distinct vectors of F_q^n plus metadata: where it came
/// from and which forbidden configuration it claims to avoid.
class PointSet {
public:
    PointSet(FieldSpec spec, std::size_t n, std::vector<FVec> vectors, Provenance provenance,
             std::optional<ConfigKind> claimed_property = std::nullopt,
             std::size_t claimed_k = 2);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t size() const noexcept { return vectors_.size(); }
    const std::vector<FVec>& vectors() const noexcept { return vectors_; }
    const FVec& operator[](std::size_t i) const noexcept { return vectors_[i]; }
    const Provenance& provenance() const noexcept { return prov_; }
    std::optional<ConfigKind> claimed_property() const noexcept { return claimed_; }
    std::size_t claimed_k() const noexcept { return claimed_k_; }

    ScanOutcome scan(ConfigKind kind, std::size_t k = 2,
                     std::uint64_t budget = UINT64_MAX) const;
    /// Scan against the claimed property; throws std::invalid_argument if none.
    ScanOutcome scan_claimed(std::uint64_t budget = UINT64_MAX) const;

private:
    FieldSpec spec_;
    std::size_t n_;
    std::vector<FVec> vectors_;
    Provenance prov_;
    std::optional<ConfigKind> claimed_;
    std::size_t claimed_k_;
};

/// Vector text rendering of the set (header + one line per vector).
std::string to_text(const PointSet& A);

/// Rebuild a PointSet from parsed text, attaching the given provenance.
PointSet point_set_from_text(const std::string& text, Provenance provenance,
                             std::optional<ConfigKind> claimed_property = std::nullopt,
                             std::size_t claimed_k = 2);

} // namespace fqs
