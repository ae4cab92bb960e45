#include "witt3/ring_r.hpp"

#include <stdexcept>

namespace witt3 {

RElement& RElement::operator+=(const RElement& o) {
    a += o.a;
    b += o.b;
    return *this;
}

RElement& RElement::operator-=(const RElement& o) {
    a -= o.a;
    b -= o.b;
    return *this;
}

RElement& RElement::operator*=(const BigRational& c) {
    a *= c;
    b *= c;
    return *this;
}

RElement operator*(const RElement& x, const RElement& y) { return r_mul(x, y); }

std::string RElement::render() const {
    if (b.is_zero()) return a.render("t");
    std::string bu = "(" + b.render("t") + ")*u";
    if (a.is_zero()) return bu;
    return a.render("t") + " + " + bu;
}

LaurentPoly u_squared() {
    LaurentPoly p = LaurentPoly::monomial(2);
    p.add_term(1, 4);
    return p;
}

RElement r_mul(const RElement& x, const RElement& y) {
    RElement r;
    r.a = x.a * y.a + x.b * y.b * u_squared();
    r.b = x.a * y.b + x.b * y.a;
    return r;
}

RElement r_pow(const RElement& x, Index n) {
    if (n < 0) throw std::domain_error("r_pow: negative exponent");
    RElement result = RElement::constant(1);
    RElement base = x;
    while (n > 0) {
        if (n & 1) result = r_mul(result, base);
        n >>= 1;
        if (n > 0) base = r_mul(base, base);
    }
    return result;
}

RElement r_apply_D(const RElement& x) {
    LaurentPoly t_plus_2 = LaurentPoly::monomial(1);
    t_plus_2.add_term(0, 2);
    RElement r;
    r.a = x.b.derivative() * u_squared() + t_plus_2 * x.b;
    r.b = x.a.derivative();
    return r;
}

bool r_derivation_check(const RElement& x, const RElement& y) {
    return r_apply_D(r_mul(x, y)) == r_mul(r_apply_D(x), y) + r_mul(x, r_apply_D(y));
}

}  // namespace witt3
