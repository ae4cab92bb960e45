#include "witt3/isomorphism.hpp"

#include <stdexcept>

namespace witt3 {

namespace {

/// c (s-1)^e added canonically, any integer e.
void add_shifted(SElement& h, Index e, const BigRational& c) { h += SElement::shifted_power(e, c); }

SElement f_of_u() {
    SElement u = SElement::monomial(1);
    u -= SElement::monomial(-1);
    return u;
}

SElement f_laurent(const LaurentPoly& p) {
    SElement out;
    for (const auto& [k, c] : p.terms()) out += f_t_power(k) * c;
    return out;
}

}  // namespace

SElement f_t_power(Index k) {
    if (k >= 0) {
        return SElement(LaurentPoly::binomial_power(BigRational(-1), 2 * k).shifted(-k), {});
    }
    return s_canonicalize(LaurentPoly::monomial(-k), -2 * k);
}

RElement phi_s() {
    RElement r{LaurentPoly::monomial(1, make_rational(1, 2)), LaurentPoly(make_rational(1, 2))};
    r.a.add_term(0, 1);
    return r;
}

RElement phi_s_inverse() {
    RElement r{LaurentPoly::monomial(1, make_rational(1, 2)), LaurentPoly(make_rational(-1, 2))};
    r.a.add_term(0, 1);
    return r;
}

RElement phi_pole_generator() {
    return {LaurentPoly(make_rational(-1, 2)), LaurentPoly::monomial(-1, make_rational(1, 2))};
}

SElement f_map(const RElement& x) {
    SElement out = f_laurent(x.a);
    if (!x.b.is_zero()) out += s_mul(f_laurent(x.b), f_of_u());
    return out;
}

RElement phi_map(const SElement& x) {
    RElement out;
    for (const auto& [k, c] : x.laurent().terms()) {
        RElement term = k >= 0 ? r_pow(phi_s(), k) : r_pow(phi_s_inverse(), -k);
        out += term * c;
    }
    for (const auto& [l, c] : x.poles()) out += r_pow(phi_pole_generator(), l) * c;
    return out;
}

DerS push(const DerR& x) {
    RElement image_of_s = r_mul(x.g, r_apply_D(phi_s()));
    return {f_map(image_of_s)};
}

DerS push_e_descending_form(Index k) {
    if (k < 0) throw std::domain_error("push_e_descending_form: k must be >= 0");
    SElement h;
    for (Index a = 0; a <= 2 * k; ++a) {
        h += SElement::monomial(-k + a + 1, BigRational(binom(2 * k, a) * sign_pow(a)));
    }
    return {h};
}

DerS push_basis_closed(const BasisR& b) {
    const Index k = b.index;
    SElement h;
    if (b.kind == BasisKind::e) {
        if (k >= 0) {
            for (Index a = 0; a <= 2 * k; ++a) {
                h += SElement::monomial(k - a + 1, BigRational(binom(2 * k, a) * sign_pow(a)));
            }
        } else if (k == -1) {
            h += SElement::constant(1);
            h += SElement::pole(1, 2);
            h += SElement::pole(2, 1);
        } else {
            for (Index j = 0; j <= -k + 1; ++j) add_shifted(h, k - j + 1, BigRational(binom(-k + 1, j)));
        }
        return {h};
    }
    if (k >= 0) {
        for (Index a = 0; a <= 2 * k + 1; ++a) {
            h += SElement::monomial(k - a + 2, BigRational(binom(2 * k + 1, a) * sign_pow(a)));
        }
        for (Index j = 0; j <= 2 * k + 1; ++j) {
            h += SElement::monomial(k + 1 - j, BigRational(binom(2 * k + 1, j) * sign_pow(j)));
        }
    } else if (k == -1) {
        h += SElement::monomial(1);
        h += SElement::constant(2);
        h += SElement::pole(1, 2);
    } else {
        for (Index a = 0; a <= -k + 1; ++a) add_shifted(h, a + 2 * k + 1, BigRational(binom(-k + 1, a)));
        for (Index j = 0; j <= -k; ++j) add_shifted(h, 2 * k + j + 1, BigRational(binom(-k, j)));
    }
    return {h};
}

}  // namespace witt3
