#pragma once

// R = Q[t, 1/t, u] / (u^2 - t^2 - 4t). R is free of rank 2 over Q[t, 1/t]
// with basis {1, u}, so every element is uniquely a(t) + b(t) u.

#include "witt3/laurent.hpp"

#include <string>

namespace witt3 {

struct RElement {
    LaurentPoly a;  // coefficient of 1
    LaurentPoly b;  // coefficient of u

    static RElement constant(const BigRational& c) { return {LaurentPoly(c), {}}; }
    static RElement t_power(Index n, const BigRational& c = 1) { return {LaurentPoly::monomial(n, c), {}}; }
    static RElement u_times_t_power(Index n, const BigRational& c = 1) { return {{}, LaurentPoly::monomial(n, c)}; }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    RElement& operator+=(const RElement& o);
    RElement& operator-=(const RElement& o);
    RElement& operator*=(const BigRational& c);
    friend RElement operator+(RElement x, const RElement& y) { return x += y; }
    friend RElement operator-(RElement x, const RElement& y) { return x -= y; }
    friend RElement operator*(RElement x, const BigRational& c) { return x *= c; }
    friend RElement operator*(const BigRational& c, RElement x) { return x *= c; }
    friend RElement operator*(const RElement& x, const RElement& y);
    RElement operator-() const { return *this * BigRational(-1); }

    friend bool operator==(const RElement&, const RElement&) = default;

    /// "a(t) + (b(t))*u" with Laurent terms by descending exponent.
    std::string render() const;
};

/// u^2 reduced: t^2 + 4t.
LaurentPoly u_squared();

RElement r_mul(const RElement& x, const RElement& y);
RElement r_pow(const RElement& x, Index n);  // n >= 0

/// D = (t+2) d/du + u d/dt, i.e. D(a + b u) = (b'(t^2+4t) + (t+2) b) + a' u.
RElement r_apply_D(const RElement& x);

/// D(xy) == D(x) y + x D(y).
bool r_derivation_check(const RElement& x, const RElement& y);

}  // namespace witt3
