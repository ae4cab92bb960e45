#pragma once

// Fixed-seed random generators for property tests.

#include "witt3/derivations.hpp"

#include <random>

namespace witt3::testkit {

class Gen {
public:
    explicit Gen(std::uint64_t seed = 0x3a11'5eedULL) : rng_(seed) {}

    Index integer(Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng_); }

    BigRational rational() { return make_rational(integer(-9, 9), integer(1, 5)); }

    BigRational nonzero_rational() {
        BigRational q = 0;
        while (q == 0) q = rational();
        return q;
    }

    LaurentPoly laurent(Index lo = -4, Index hi = 4, int max_terms = 4) {
        LaurentPoly p;
        const Index n = integer(0, max_terms);
        for (Index i = 0; i < n; ++i) p.add_term(integer(lo, hi), rational());
        return p;
    }

    SElement s_element(Index max_pole = 4) {
        SElement::PoleTerms poles;
        const Index n = integer(0, 3);
        for (Index i = 0; i < n; ++i) poles[integer(1, max_pole)] += rational();
        return SElement(laurent(), std::move(poles));
    }

    RElement r_element() { return {laurent(), laurent(-3, 3, 3)}; }

    DerR der_r() { return {r_element()}; }
    DerS der_s() { return {s_element()}; }

    /// A rational point away from the poles 0 and 1.
    BigRational regular_point() {
        BigRational p = 0;
        while (p == 0 || p == 1) p = rational();
        return p;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace witt3::testkit
