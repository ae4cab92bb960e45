#include "witt3/expr.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

namespace witt3 {

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

[[noreturn]] void bad_token(const std::string& tok) {
    throw ParseError(tok, "unexpected token '" + tok + "'");
}

struct SignedTerm {
    bool negative = false;
    std::string body;
};

// Splits at top-level '+'/'-' that act as binary operators or a leading sign.
std::vector<SignedTerm> split_terms(std::string_view text) {
    std::vector<SignedTerm> terms;
    SignedTerm cur;
    int depth = 0;
    char prev = 0;  // last non-space character
    bool at_start = true;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            cur.body += c;
            continue;
        }
        bool sign = (c == '+' || c == '-') && depth == 0 && prev != '^' && prev != '*' && prev != '(' && prev != ':';
        if (sign) {
            if (at_start) {
                if (c == '-') cur.negative = !cur.negative;
            } else {
                if (trim(cur.body).empty()) bad_token(std::string(1, c));
                terms.push_back(cur);
                cur = SignedTerm{c == '-', {}};
                at_start = true;
            }
            prev = c;
            continue;
        }
        if (c == '(') ++depth;
        if (c == ')' && --depth < 0) bad_token(")");
        cur.body += c;
        prev = c;
        at_start = false;
    }
    if (depth != 0) bad_token("(");
    if (trim(cur.body).empty()) {
        if (terms.empty() && !cur.negative) throw ParseError("", "empty expression");
        bad_token(std::string(1, prev));
    }
    terms.push_back(cur);
    return terms;
}

std::vector<std::string> split_factors(const std::string& term) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : term) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '*' && depth == 0) {
            out.push_back(cur);
            if (out.back().empty()) bad_token("*");
            cur.clear();
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(c))) cur += c;
    }
    out.push_back(cur);
    if (out.back().empty()) bad_token("*");
    return out;
}

std::optional<Index> parse_int(std::string_view s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    Index v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

bool is_rational_literal(const std::string& f) {
    bool digit = false;
    for (char c : f) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digit = true;
        } else if (c != '/') {
            return false;
        }
    }
    return digit;
}

// "base" or "base^n" with the exponent as an integer. Returns nullopt if the
// factor does not start with `base`.
std::optional<Index> power_of(const std::string& f, std::string_view base) {
    if (f.compare(0, base.size(), base) != 0) return std::nullopt;
    std::string_view rest = std::string_view(f).substr(base.size());
    if (rest.empty()) return 1;
    if (rest.front() != '^') return std::nullopt;
    auto e = parse_int(trim(rest.substr(1)));
    if (!e) bad_token(f);
    return e;
}

template <class Elem, class FactorFn>
Elem parse_sum(std::string_view text, Elem zero, FactorFn factor) {
    Elem total = zero;
    for (const auto& term : split_terms(text)) {
        Elem value = factor(split_factors(term.body));
        if (term.negative) value = BigRational(-1) * value;
        total += value;
    }
    return total;
}

}  // namespace

DerR parse_der_r(std::string_view text) {
    return parse_sum(text, DerR{}, [](const std::vector<std::string>& factors) {
        RElement g = RElement::constant(1);
        bool have_basis = false;
        for (const auto& f : factors) {
            if (is_rational_literal(f)) {
                try {
                    g *= parse_rational(f);
                } catch (const std::exception&) {
                    bad_token(f);
                }
            } else if (f.size() > 2 && (f[0] == 'd' || f[0] == 'e') && f[1] == ':') {
                if (have_basis) bad_token(f);
                have_basis = true;
                BasisR b;
                try {
                    b = parse_basis(f);
                } catch (const std::exception&) {
                    bad_token(f);
                }
                g = r_mul(g, basis_element(b).g);
            } else if (f == "D") {
                continue;
            } else if (auto e = power_of(f, "t")) {
                g = r_mul(g, RElement::t_power(*e));
            } else if (auto e = power_of(f, "u")) {
                if (*e < 0) bad_token(f);
                g = r_mul(g, r_pow(RElement::u_times_t_power(0), *e));
            } else {
                bad_token(f);
            }
        }
        return DerR{g};
    });
}

DerS parse_der_s(std::string_view text) {
    return parse_sum(text, DerS{}, [](const std::vector<std::string>& factors) {
        SElement h = SElement::constant(1);
        bool have_basis = false;
        auto basis_index = [](const std::string& f) {
            auto n = parse_int(std::string_view(f).substr(2));
            if (!n) bad_token(f);
            return *n;
        };
        for (const auto& f : factors) {
            if (is_rational_literal(f)) {
                try {
                    h *= parse_rational(f);
                } catch (const std::exception&) {
                    bad_token(f);
                }
            } else if (f.size() > 2 && (f[0] == 's' || f[0] == 'p') && f[1] == ':') {
                if (have_basis) bad_token(f);
                have_basis = true;
                Index n = basis_index(f);
                if (f[0] == 'p' && n < 1) bad_token(f);
                h = h * (f[0] == 's' ? SElement::monomial(n) : SElement::pole(n));
            } else if (f == "d") {
                continue;
            } else if (auto e = power_of(f, "(s-1)")) {
                h = h * SElement::shifted_power(*e);
            } else if (auto e = power_of(f, "s")) {
                h = h * SElement::monomial(*e);
            } else {
                bad_token(f);
            }
        }
        return DerS{h};
    });
}

}  // namespace witt3
