#pragma once

// Text syntax for derivations.
//
// Der(R): sums of terms, each a '*'-product of factors
//   rational coefficient (3, -2/5), t, t^n, t^(n), u, u^n, D,
//   and at most one basis token d:<n> (= t^n u D) or e:<n> (= t^n D).
// A term without a basis token denotes g D for the ring element g.
//
// Der(S): the same shape with factors
//   rational, s, s^n, (s-1), (s-1)^n, d, and basis tokens s:<n> (= s^n d),
//   p:<l> (= (s-1)^-l d).
//
// Errors throw ParseError naming the offending token.

#include "witt3/derivations.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace witt3 {

class ParseError : public std::invalid_argument {
public:
    ParseError(std::string token, const std::string& message)
        : std::invalid_argument(message), token_(std::move(token)) {}
    const std::string& token() const { return token_; }

private:
    std::string token_;
};

DerR parse_der_r(std::string_view text);
DerS parse_der_s(std::string_view text);

}  // namespace witt3
