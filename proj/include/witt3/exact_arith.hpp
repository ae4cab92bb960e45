#pragma once

// Exact integers and rationals, plus the extended binomial and factorial
// conventions used throughout the cocycle formulas.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace witt3 {

using BigInteger = mpz_class;
using BigRational = mpq_class;

/// Integer index type for exponents and basis labels. Values stay small;
/// everything they feed into is computed in BigInteger/BigRational.
using Index = std::int64_t;

/// Builds num/den in lowest terms with a positive denominator.
/// Throws std::domain_error when den is zero.
BigRational make_rational(const BigInteger& num, const BigInteger& den);

inline BigRational make_rational(Index num, Index den = 1) {
    return make_rational(BigInteger(static_cast<long>(num)), BigInteger(static_cast<long>(den)));
}

inline BigInteger big(Index v) { return BigInteger(static_cast<long>(v)); }

/// (-1)^e for any integer e.
inline int sign_pow(Index e) { return (e % 2 == 0) ? 1 : -1; }

/// Binomial coefficient extended to all integer pairs.
///
///   n >= 0 : usual binomial, 0 unless 0 <= k <= n
///   n <  0 : (-1)^k C(-n+k-1, k)        when k >= 0
///            (-1)^(n-k) C(-k-1, n-k)    when k <= n
///            0                          otherwise
BigInteger binom(Index n, Index k);

/// n! for n >= 0. Throws std::domain_error for n < 0.
BigInteger factorial(Index n);

/// 1/n! for n >= 0 and exactly 0 for n < 0 (the reciprocal gamma function
/// vanishes at the non-positive integers).
BigRational recip_factorial(Index n);

/// n!! for odd n >= -3, with (-1)!! = 1 and (-3)!! = -1.
/// Throws std::domain_error for even n or n < -3.
BigInteger double_factorial_odd(Index n);

/// Odd double factorial on every odd integer, continued downward by
/// n!! = (n+2)!! / (n+2). Agrees with double_factorial_odd on its domain
/// and gives (-5)!! = 1/3, (-7)!! = -1/15, ...
/// Throws std::domain_error for even n.
BigRational double_factorial_odd_ext(Index n);

/// base^e for any integer e. Throws std::domain_error for 0^negative.
BigRational pow_int(const BigRational& base, Index e);

/// "p/q", or "p" when q = 1. No whitespace.
std::string to_string(const BigRational& q);
std::string to_string(const BigInteger& z);

/// Inverse of to_string; also accepts non-reduced input such as "4/6".
/// Throws std::invalid_argument on malformed text or a zero denominator.
BigRational parse_rational(std::string_view text);

}  // namespace witt3
