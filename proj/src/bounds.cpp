#include "fqs/bounds.hpp"

#include <stdexcept>

namespace fqs {

namespace {

void check_nq(std::int64_t n, Residue q, const char* who) {
    FieldSpec validate(q); // rejects non-odd-prime moduli
    (void)validate;
    if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
}

/// t = floor(k*q / (2k-1)) and l = ceil((k-1)*t / k) for the corner bounds.
std::pair<std::int64_t, std::int64_t> corner_t_ell(Residue q, std::int64_t k) {
    std::int64_t t = static_cast<std::int64_t>(k) * q / (2 * k - 1);
    std::int64_t ell = ((k - 1) * t + k - 1) / k;
    return {t, ell};
}

} // namespace

BoundValue r_upper_main(std::int64_t n, Residue q) {
    check_nq(n, q, "r_upper_main");
    Integer v = 4 * Integer(q - 1) * q * binom(n + q - 2, q - 2) + 2 * Integer(q);
    return {"r_upper_main", v};
}

BoundValue r_upper_ge(std::int64_t n, Residue q) {
    check_nq(n, q, "r_upper_ge");
    return {"r_upper_ge", binom(n + q, q - 1) + 3};
}

BoundValue r_upper_naslund(std::int64_t n, Residue q) {
    check_nq(n, q, "r_upper_naslund");
    return {"r_upper_naslund", binom(n + q, q - 1) + 2 - binom(n + q, q - 3)};
}

BoundValue corner_upper_naslund(std::int64_t n, Residue q, std::int64_t k) {
    check_nq(n, q, "corner_upper_naslund");
    if (k < 2) throw std::invalid_argument("corner_upper_naslund: k must be >= 2");
    return {"corner_upper_naslund", binom(n + (k - 1) * q, (k - 1) * (q - 1))};
}

BoundValue corner_lower_main_term(std::int64_t n, Residue q, std::int64_t k) {
    check_nq(n, q, "corner_lower_main_term");
    if (k < 2) throw std::invalid_argument("corner_lower_main_term: k must be >= 2");
    auto [t, ell] = corner_t_ell(q, k);
    if (n < t)
        throw std::invalid_argument("corner_lower_main_term: n must be >= t = " +
                                    std::to_string(t));
    return {"corner_lower_main_term", binom(n, ell) / binom(t, ell)};
}

BoundValue allright_upper(std::int64_t n, Residue q) {
    check_nq(n, q, "allright_upper");
    return {"allright_upper", binom(n + 2 * q - 1, 2 * q - 2) + 2 * binom(n + q, q - 1)};
}

BoundValue s_upper(std::int64_t n, Residue q) {
    check_nq(n, q, "s_upper");
    return {"s_upper", binom(n + q, q - 1) - binom(n + q - 2, q - 3)};
}

BoundValue s_lower_formula(std::int64_t n, Residue q) {
    check_nq(n, q, "s_lower_formula");
    return {"s_lower_formula", binom(n, q - 1)};
}

BoundValue s_lower_augmented_formula(std::int64_t n, Residue q) {
    check_nq(n, q, "s_lower_augmented_formula");
    return {"s_lower_augmented_formula", binom(n, q - 1) + binom(n, q - 2)};
}

bool s_lower_augmented_applicable(std::int64_t n, Residue q) {
    return (n + 2) % q != 0 || q % 4 == 1;
}

BoundValue t_upper_general(std::int64_t n, Residue q) {
    check_nq(n, q, "t_upper_general");
    Integer v = 0;
    for (std::int64_t i = 0; i <= q - 1; ++i) v += binom(n, i);
    return {"t_upper_general", v};
}

BoundValue t_upper_divisible(std::int64_t n, Residue q) {
    check_nq(n, q, "t_upper_divisible");
    if (n % q != 0)
        throw std::domain_error("t_upper_divisible: requires n ≡ 0 (mod q)");
    Integer v = 0;
    for (std::int64_t i = 0; i <= q - 1; i += 2) v += binom(n, i);
    return {"t_upper_divisible", v};
}

BoundValue t_lower_general(std::int64_t n, Residue q) {
    check_nq(n, q, "t_lower_general");
    Integer v = 0;
    for (std::int64_t i = 0; i <= q - 1; i += 2) v += binom(n, i);
    return {"t_lower_general", v};
}

BoundValue t_lower_special(std::int64_t n, Residue q) {
    check_nq(n, q, "t_lower_special");
    if ((n + 1) % q != 0)
        throw std::domain_error("t_lower_special: requires n ≡ -1 (mod q)");
    Integer v = 0;
    for (std::int64_t i = 0; i <= q - 1; ++i) v += binom(n, i);
    return {"t_lower_special", v};
}

namespace {

BoundReport make_row(const std::string& property, const BoundValue& bv, const char* side,
                     std::int64_t n, Residue q, std::optional<std::int64_t> k,
                     bool main_term = false, std::string note = "") {
    return BoundReport{property, bv.name, side, n, q, k, main_term, std::move(note), bv.value};
}

} // namespace

std::vector<BoundReport> bounds_table(const std::string& property,
                                      const std::vector<std::int64_t>& ns,
                                      const std::vector<Residue>& qs,
                                      std::optional<std::int64_t> k) {
    if (property == "corner" && !k)
        throw std::invalid_argument("bounds_table: the corner property needs k");
    bool known = property == "right-angle" || property == "corner" || property == "all-right" ||
                 property == "self-orth" || property == "hamming";
    if (!known) throw std::invalid_argument("bounds_table: unknown property '" + property + "'");

    std::vector<BoundReport> rows;
    for (Residue q : qs) {
        for (std::int64_t n : ns) {
            if (property == "right-angle") {
                rows.push_back(make_row(property, r_upper_main(n, q), "upper", n, q, {}));
                rows.push_back(make_row(property, r_upper_ge(n, q), "upper", n, q, {}));
                rows.push_back(make_row(property, r_upper_naslund(n, q), "upper", n, q, {}));
                auto [t, ell] = corner_t_ell(q, 2);
                (void)ell;
                if (n >= t)
                    rows.push_back(make_row(property, corner_lower_main_term(n, q, 2), "lower",
                                            n, q, 2, true));
            } else if (property == "corner") {
                rows.push_back(
                    make_row(property, corner_upper_naslund(n, q, *k), "upper", n, q, k));
                auto [t, ell] = corner_t_ell(q, *k);
                (void)ell;
                if (n >= t)
                    rows.push_back(make_row(property, corner_lower_main_term(n, q, *k), "lower",
                                            n, q, k, true));
            } else if (property == "all-right") {
                rows.push_back(make_row(property, allright_upper(n, q), "upper", n, q, {}));
            } else if (property == "self-orth") {
                std::string exact_note = (q == 3 && n % 3 == 2) ? "exact" : "";
                rows.push_back(
                    make_row(property, s_upper(n, q), "upper", n, q, {}, false, exact_note));
                if (n >= q - 1)
                    rows.push_back(make_row(property, s_lower_formula(n, q), "lower", n, q, {}));
                if (n >= q - 1 && s_lower_augmented_applicable(n, q))
                    rows.push_back(make_row(property, s_lower_augmented_formula(n, q), "lower",
                                            n, q, {}));
            } else { // hamming
                bool exact_div = n % q == 0;
                bool exact_spec = (n + 1) % q == 0;
                rows.push_back(make_row(property, t_upper_general(n, q), "upper", n, q, {},
                                        false, exact_spec ? "exact" : ""));
                if (exact_div)
                    rows.push_back(make_row(property, t_upper_divisible(n, q), "upper", n, q, {},
                                            false, "exact"));
                rows.push_back(make_row(property, t_lower_general(n, q), "lower", n, q, {},
                                        false, exact_div ? "exact" : ""));
                if (exact_spec)
                    rows.push_back(make_row(property, t_lower_special(n, q), "lower", n, q, {},
                                            false, "exact"));
            }
        }
    }
    return rows;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace

std::string bounds_table_csv(const std::vector<BoundReport>& rows) {
    std::string out = "property,formula_id,side,n,q,k,main_term,note,value\n";
    for (const BoundReport& r : rows) {
        out += csv_field(r.property) + ',' + csv_field(r.formula_id) + ',' + r.side + ',' +
               std::to_string(r.n) + ',' + std::to_string(r.q) + ',' +
               (r.k ? std::to_string(*r.k) : "") + ',' + (r.main_term ? "true" : "false") +
               ',' + csv_field(r.note) + ',' + to_decimal(r.value) + '\n';
    }
    return out;
}

} // namespace fqs
