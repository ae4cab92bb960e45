#include "witt3/laurent.hpp"

#include <stdexcept>

namespace witt3 {

LaurentPoly::LaurentPoly(const BigRational& constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(Index exponent, const BigRational& coeff) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

LaurentPoly LaurentPoly::binomial_power(const BigRational& shift, Index n) {
    if (n < 0) throw std::domain_error("binomial_power: negative exponent");
    LaurentPoly p;
    BigRational shift_pow = 1;
    for (Index j = 0; j <= n; ++j) {
        p.add_term(n - j, BigRational(binom(n, j)) * shift_pow);
        shift_pow *= shift;
    }
    return p;
}

BigRational LaurentPoly::coeff(Index exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigRational(0) : it->second;
}

Index LaurentPoly::min_exponent() const { return terms_.begin()->first; }
Index LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

void LaurentPoly::add_term(Index exponent, const BigRational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigRational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

LaurentPoly LaurentPoly::shifted(Index n) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + n, c);
    return r;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e - 1, c * big(e));
    return r;
}

BigRational LaurentPoly::eval(const BigRational& x) const {
    BigRational sum = 0;
    for (const auto& [e, c] : terms_) sum += c * pow_int(x, e);
    return sum;
}

LaurentPoly LaurentPoly::pow(Index n) const {
    if (n < 0) throw std::domain_error("LaurentPoly::pow: negative exponent");
    LaurentPoly result(BigRational(1));
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::polynomial_part() const {
    LaurentPoly r;
    r.terms_.insert(terms_.lower_bound(0), terms_.end());
    return r;
}

LaurentPoly LaurentPoly::principal_part() const {
    LaurentPoly r;
    r.terms_.insert(terms_.begin(), terms_.lower_bound(0));
    return r;
}

std::string LaurentPoly::render(std::string_view var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += to_string(it->second);
        out += '*';
        out += var;
        out += '^';
        out += std::to_string(it->first);
    }
    return out;
}

}  // namespace witt3
