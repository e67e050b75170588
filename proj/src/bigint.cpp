#include "fqs/bigint.hpp"

#include <stdexcept>

namespace fqs {

Integer binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i; // exact: acc is C(n-k+i, i) after this step
    }
    return acc;
}

Integer monomial_count_exact_degree(std::int64_t n, std::int64_t d) {
    if (n < 0 || d < 0) throw std::invalid_argument("monomial count needs n, d >= 0");
    if (d == 0) return 1;
    if (n == 0) return 0;
    return binom(n + d - 1, d);
}

Integer monomial_count_up_to_degree(std::int64_t n, std::int64_t d) {
    if (n < 0 || d < 0) throw std::invalid_argument("monomial count needs n, d >= 0");
    return binom(n + d, d);
}

std::string to_decimal(const Integer& v) { return v.str(); }

Integer parse_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer string");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("sign without digits: '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("invalid integer string: '" + s + "'");
    }
    return Integer(s);
}

} // namespace fqs
