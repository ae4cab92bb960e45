#pragma once

// The ring S = Q[s, 1/s, 1/(s-1)] stored in its partial-fraction basis
//   { s^k : k in Z } U { (s-1)^-l : l >= 1 }.
// Every element has exactly one such expansion, so equality is componentwise
// and cocycle rules can read basis coefficients directly.

#include "witt3/laurent.hpp"

#include <map>
#include <string>

namespace witt3 {

class SElement {
public:
    /// l -> coefficient of (s-1)^-l, l >= 1.
    using PoleTerms = std::map<Index, BigRational>;

    SElement() = default;
    /// Throws std::invalid_argument if a pole key is < 1. Zero entries are dropped.
    SElement(LaurentPoly laurent, PoleTerms poles);

    static SElement constant(const BigRational& c);
    static SElement monomial(Index n, const BigRational& c = 1);  // c*s^n
    static SElement pole(Index l, const BigRational& c = 1);      // c*(s-1)^-l, l >= 1
    /// c*(s-1)^e for any integer e, expanded canonically.
    static SElement shifted_power(Index e, const BigRational& c = 1);

    const LaurentPoly& laurent() const { return laurent_; }
    const PoleTerms& poles() const { return poles_; }
    /// Highest l with a nonzero (s-1)^-l coefficient, 0 if none.
    Index pole_order() const { return poles_.empty() ? 0 : poles_.rbegin()->first; }
    bool is_zero() const { return laurent_.is_zero() && poles_.empty(); }

    void add_pole(Index l, const BigRational& c);

    SElement& operator+=(const SElement& o);
    SElement& operator-=(const SElement& o);
    SElement& operator*=(const BigRational& c);
    friend SElement operator+(SElement a, const SElement& b) { return a += b; }
    friend SElement operator-(SElement a, const SElement& b) { return a -= b; }
    friend SElement operator*(SElement a, const BigRational& c) { return a *= c; }
    friend SElement operator*(const BigRational& c, SElement a) { return a *= c; }
    friend SElement operator*(const SElement& a, const SElement& b);
    SElement operator-() const { return *this * BigRational(-1); }

    friend bool operator==(const SElement&, const SElement&) = default;

    /// Laurent terms by descending exponent, then pole terms by ascending l,
    /// e.g. "-1*s^-1 + 1*(s-1)^-1". "0" for the zero element.
    std::string render() const;

private:
    LaurentPoly laurent_;
    PoleTerms poles_;
};

/// numerator(s) * (s-1)^-m, written in the canonical basis. Throws
/// std::domain_error for m < 0.
SElement s_canonicalize(const LaurentPoly& numerator, Index m);

/// s^-n (s-1)^-m for n, m >= 0, expanded by repeating
/// s^-1 (s-1)^-1 = (s-1)^-1 - s^-1.
SElement neg_power_pole_product(Index n, Index m);

/// x = numerator / (s-1)^pole_order with pole_order = x.pole_order().
struct SFraction {
    LaurentPoly numerator;
    Index pole_order = 0;
};
SFraction s_to_fraction(const SElement& x);

SElement s_add(const SElement& x, const SElement& y);
SElement s_scale(const BigRational& c, const SElement& x);
SElement s_mul(const SElement& x, const SElement& y);
SElement s_derivative(const SElement& x);

/// Exact value at s = p. Throws std::domain_error when p is 0 or 1.
BigRational s_eval(const SElement& x, const BigRational& p);

}  // namespace witt3
