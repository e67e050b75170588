#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fqs {

/// Exact arbitrary-precision integer used for all bound arithmetic.
using Integer = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
Integer binom(std::int64_t n, std::int64_t k);

/// Number of monomials in n variables of total degree exactly d:
/// the degree-d slice of the polynomial ring, C(n + d - 1, d).
Integer monomial_count_exact_degree(std::int64_t n, std::int64_t d);

/// Number of monomials in n variables of total degree at most d: C(n + d, d).
Integer monomial_count_up_to_degree(std::int64_t n, std::int64_t d);

/// An exact integer quantity produced by a bound or count, carried with a
/// short machine-readable name so tables and manifests can identify it.
struct BoundValue {
    std::string name;
    Integer value;

    bool operator==(const BoundValue&) const = default;
};

/// Decimal rendering (no separators, leading '-' for negatives).
std::string to_decimal(const Integer& v);

/// Parse a decimal integer string; throws std::invalid_argument on junk.
Integer parse_decimal(const std::string& s);

} // namespace fqs
