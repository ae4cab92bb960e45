#pragma once

#include "witt3/exact_arith.hpp"

#include <map>
#include <string>
#include <string_view>

namespace witt3 {

/// Sparse Laurent polynomial in one variable with exact rational
/// coefficients. Zero coefficients are never stored, so two polynomials are
/// equal iff their term maps are equal.
class LaurentPoly {
public:
    using Terms = std::map<Index, BigRational>;

    LaurentPoly() = default;
    explicit LaurentPoly(const BigRational& constant);

    static LaurentPoly monomial(Index exponent, const BigRational& coeff = 1);
    /// (x + shift)^n for n >= 0, expanded.
    static LaurentPoly binomial_power(const BigRational& shift, Index n);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    BigRational coeff(Index exponent) const;
    Index min_exponent() const;  // requires !is_zero()
    Index max_exponent() const;  // requires !is_zero()

    /// Adds c * x^exponent in place.
    void add_term(Index exponent, const BigRational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const BigRational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const BigRational& c) { return a *= c; }
    friend LaurentPoly operator*(const BigRational& c, LaurentPoly a) { return a *= c; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Multiplies by x^n.
    LaurentPoly shifted(Index n) const;
    LaurentPoly derivative() const;
    /// Requires x != 0 whenever a negative exponent is present.
    BigRational eval(const BigRational& x) const;
    LaurentPoly pow(Index n) const;  // n >= 0

    /// Terms of non-negative / negative exponent.
    LaurentPoly polynomial_part() const;
    LaurentPoly principal_part() const;

    /// "c*x^n + c*x^m ..." with exponents descending, "0" when empty.
    std::string render(std::string_view var) const;

private:
    Terms terms_;
};

}  // namespace witt3
