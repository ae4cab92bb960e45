#include "witt3/ring_s.hpp"

#include <stdexcept>
#include <utility>

namespace witt3 {

SElement::SElement(LaurentPoly laurent, PoleTerms poles) : laurent_(std::move(laurent)) {
    for (const auto& [l, c] : poles) {
        if (l < 1) throw std::invalid_argument("pole order must be >= 1");
        add_pole(l, c);
    }
}

SElement SElement::constant(const BigRational& c) { return monomial(0, c); }

SElement SElement::monomial(Index n, const BigRational& c) {
    SElement x;
    x.laurent_.add_term(n, c);
    return x;
}

SElement SElement::pole(Index l, const BigRational& c) {
    if (l < 1) throw std::invalid_argument("pole order must be >= 1");
    SElement x;
    x.add_pole(l, c);
    return x;
}

SElement SElement::shifted_power(Index e, const BigRational& c) {
    if (e < 0) return pole(-e, c);
    SElement x;
    x.laurent_ = LaurentPoly::binomial_power(BigRational(-1), e) * c;
    return x;
}

void SElement::add_pole(Index l, const BigRational& c) {
    if (c == 0) return;
    auto [it, inserted] = poles_.try_emplace(l, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) poles_.erase(it);
    }
}

SElement& SElement::operator+=(const SElement& o) {
    laurent_ += o.laurent_;
    for (const auto& [l, c] : o.poles_) add_pole(l, c);
    return *this;
}

SElement& SElement::operator-=(const SElement& o) {
    laurent_ -= o.laurent_;
    for (const auto& [l, c] : o.poles_) add_pole(l, -c);
    return *this;
}

SElement& SElement::operator*=(const BigRational& c) {
    laurent_ *= c;
    if (c == 0) {
        poles_.clear();
    } else {
        for (auto& [l, v] : poles_) v *= c;
    }
    return *this;
}

SElement operator*(const SElement& a, const SElement& b) { return s_mul(a, b); }

std::string SElement::render() const {
    if (is_zero()) return "0";
    std::string out = laurent_.is_zero() ? std::string() : laurent_.render("s");
    for (const auto& [l, c] : poles_) {
        if (!out.empty()) out += " + ";
        out += to_string(c) + "*(s-1)^-" + std::to_string(l);
    }
    return out;
}

SElement neg_power_pole_product(Index n, Index m) {
    if (n < 0 || m < 0) throw std::domain_error("neg_power_pole_product: negative order " + std::to_string(n) + "," + std::to_string(m));
    if (n == 0) return m == 0 ? SElement::constant(1) : SElement::pole(m);
    if (m == 0) return SElement::monomial(-n);

    thread_local std::map<std::pair<Index, Index>, SElement> cache;
    auto key = std::make_pair(n, m);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    // s^-n (s-1)^-m = s^-(n-1) (s-1)^-(m-1) [(s-1)^-1 - s^-1]
    SElement r = neg_power_pole_product(n - 1, m) - neg_power_pole_product(n, m - 1);
    cache.emplace(key, r);
    return r;
}

SElement s_canonicalize(const LaurentPoly& numerator, Index m) {
    if (m < 0) throw std::domain_error("s_canonicalize: negative pole order");
    if (m == 0) return SElement(numerator, {});

    SElement out;
    // Polynomial part: re-expand around s = 1, P(s) = sum_j c_j (s-1)^j.
    LaurentPoly poly = numerator.polynomial_part();
    if (!poly.is_zero()) {
        Index degree = poly.max_exponent();
        for (Index j = 0; j <= degree; ++j) {
            BigRational cj = 0;
            for (const auto& [i, p] : poly.terms()) {
                if (i >= j) cj += p * BigRational(binom(i, j));
            }
            if (cj != 0) out += SElement::shifted_power(j - m, cj);
        }
    }
    const LaurentPoly principal = numerator.principal_part();
    for (const auto& [e, q] : principal.terms()) {
        out += neg_power_pole_product(-e, m) * q;
    }
    return out;
}

SFraction s_to_fraction(const SElement& x) {
    SFraction f;
    f.pole_order = x.pole_order();
    f.numerator = x.laurent() * LaurentPoly::binomial_power(BigRational(-1), f.pole_order);
    for (const auto& [l, c] : x.poles()) {
        f.numerator += LaurentPoly::binomial_power(BigRational(-1), f.pole_order - l) * c;
    }
    return f;
}

SElement s_add(const SElement& x, const SElement& y) { return x + y; }

SElement s_scale(const BigRational& c, const SElement& x) { return x * c; }

SElement s_mul(const SElement& x, const SElement& y) {
    if (x.poles().empty() && y.poles().empty()) {
        return SElement(x.laurent() * y.laurent(), {});
    }
    SFraction fx = s_to_fraction(x);
    SFraction fy = s_to_fraction(y);
    return s_canonicalize(fx.numerator * fy.numerator, fx.pole_order + fy.pole_order);
}

SElement s_derivative(const SElement& x) {
    SElement::PoleTerms poles;
    for (const auto& [l, c] : x.poles()) poles.emplace(l + 1, -c * big(l));
    return SElement(x.laurent().derivative(), std::move(poles));
}

BigRational s_eval(const SElement& x, const BigRational& p) {
    if (p == 0 || p == 1) throw std::domain_error("s_eval: evaluation at a pole (s = 0 or s = 1)");
    BigRational v = x.laurent().eval(p);
    BigRational shifted = p - 1;
    for (const auto& [l, c] : x.poles()) v += c * pow_int(shifted, -l);
    return v;
}

}  // namespace witt3
