#include "fqs/pointset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fqs/io.hpp"

namespace fqs {

PointSet::PointSet(FieldSpec spec, std::size_t n, std::vector<FVec> vectors,
                   Provenance provenance, std::optional<ConfigKind> claimed_property,
                   std::size_t claimed_k)
    : spec_(spec),
      n_(n),
      vectors_(std::move(vectors)),
      prov_(std::move(provenance)),
      claimed_(claimed_property),
      claimed_k_(claimed_k) {
    if (n_ == 0) throw std::invalid_argument("PointSet: dimension must be >= 1");
    for (const FVec& v : vectors_) {
        if (v.spec() != spec_) throw std::invalid_argument("PointSet: vector field mismatch");
        if (v.dim() != n_) throw std::invalid_argument("PointSet: vector length mismatch");
    }
    std::vector<std::size_t> order(vectors_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return vectors_[a] < vectors_[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (vectors_[order[i - 1]] == vectors_[order[i]])
            throw std::invalid_argument("PointSet: duplicate vector '" +
                                        format_vector_line(vectors_[order[i]]) + "'");
    }
}

ScanOutcome PointSet::scan(ConfigKind kind, std::size_t k, std::uint64_t budget) const {
    return scan_set(vectors_, kind, k, budget);
}

ScanOutcome PointSet::scan_claimed(std::uint64_t budget) const {
    if (!claimed_)
        throw std::invalid_argument("PointSet: no claimed property to scan against");
    return scan(*claimed_, claimed_k_, budget);
}

std::string to_text(const PointSet& A) {
    return format_vector_file(A.spec(), A.n(), A.vectors());
}

PointSet point_set_from_text(const std::string& text, Provenance provenance,
                             std::optional<ConfigKind> claimed_property,
                             std::size_t claimed_k) {
    VectorFile f = parse_vector_file(text);
    return PointSet(f.spec, f.n, std::move(f.vectors), std::move(provenance),
                    claimed_property, claimed_k);
}

} // namespace fqs
