#include "witt3/exact_arith.hpp"

#include <cctype>
#include <stdexcept>

namespace witt3 {

namespace {

BigInteger binom_nonneg(Index n, Index k) {
    if (k < 0 || k > n) return 0;
    BigInteger r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

bool is_decimal_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

BigInteger parse_integer(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return BigInteger(std::string(s), 10);
}

}  // namespace

BigRational make_rational(const BigInteger& num, const BigInteger& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigInteger binom(Index n, Index k) {
    if (n >= 0) return binom_nonneg(n, k);
    if (k >= 0) return sign_pow(k) * binom_nonneg(-n + k - 1, k);
    if (k <= n) return sign_pow(n - k) * binom_nonneg(-k - 1, n - k);
    return 0;
}

BigInteger factorial(Index n) {
    if (n < 0) throw std::domain_error("factorial of a negative integer");
    BigInteger r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigRational recip_factorial(Index n) {
    if (n < 0) return 0;
    return BigRational(BigInteger(1), factorial(n));
}

BigInteger double_factorial_odd(Index n) {
    if (n % 2 == 0) throw std::domain_error("double_factorial_odd: even argument");
    if (n < -3) throw std::domain_error("double_factorial_odd: argument below -3");
    if (n == -3) return -1;
    if (n == -1) return 1;
    BigInteger r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigRational double_factorial_odd_ext(Index n) {
    if (n % 2 == 0) throw std::domain_error("double_factorial_odd_ext: even argument");
    if (n >= -3) return BigRational(double_factorial_odd(n));
    // n!! = (n+2)!! / (n+2), so n!! = 1 / ((-1)(-3)...(n+2))
    BigInteger denom = 1;
    for (Index m = -1; m >= n + 2; m -= 2) denom *= big(m);
    return make_rational(BigInteger(1), denom);
}

BigRational pow_int(const BigRational& base, Index e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("zero raised to a negative power");
        return pow_int(make_rational(base.get_den(), base.get_num()), -e);
    }
    BigInteger num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    return make_rational(num, den);
}

std::string to_string(const BigRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInteger& z) { return z.get_str(); }

BigRational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    auto num_text = text.substr(0, slash);
    if (!is_decimal_integer(num_text)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    BigInteger num = parse_integer(num_text);
    BigInteger den = 1;
    if (slash != std::string_view::npos) {
        auto den_text = text.substr(slash + 1);
        if (!is_decimal_integer(den_text)) {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        den = parse_integer(den_text);
        if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    return make_rational(num, den);
}

}  // namespace witt3
