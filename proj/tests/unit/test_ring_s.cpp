#include "witt3/ring_s.hpp"

#include "../support/generators.hpp"

#include <gtest/gtest.h>

using namespace witt3;

TEST(RingS, PartialFractionOfInverseProduct) {
    // 1/(s(s-1)) = -s^-1 + (s-1)^-1
    SElement x = neg_power_pole_product(1, 1);
    EXPECT_EQ(x.render(), "-1*s^-1 + 1*(s-1)^-1");
}

TEST(RingS, InverseProductsEvaluateCorrectly) {
    testkit::Gen gen;
    for (Index n = 0; n <= 6; ++n) {
        for (Index m = 0; m <= 6; ++m) {
            BigRational p = gen.regular_point();
            EXPECT_EQ(s_eval(neg_power_pole_product(n, m), p), pow_int(p, -n) * pow_int(p - 1, -m)) << n << "," << m;
        }
    }
}

TEST(RingS, ShiftedPowerTimesInverseIsOne) {
    for (Index e = -6; e <= 6; ++e) {
        EXPECT_EQ(SElement::shifted_power(e) * SElement::shifted_power(-e), SElement::constant(1)) << e;
    }
}

TEST(RingS, PartialFractionRoundTrip) {
    testkit::Gen gen;
    for (int i = 0; i < 250; ++i) {
        SElement x = gen.s_element();
        SFraction f = s_to_fraction(x);
        EXPECT_EQ(s_canonicalize(f.numerator, f.pole_order), x);
    }
}

TEST(RingS, CanonicalizeAgreesPointwise) {
    testkit::Gen gen;
    for (int i = 0; i < 200; ++i) {
        LaurentPoly num = gen.laurent(-5, 5);
        Index m = gen.integer(0, 5);
        BigRational p = gen.regular_point();
        EXPECT_EQ(s_eval(s_canonicalize(num, m), p), num.eval(p) * pow_int(p - 1, -m));
    }
}

TEST(RingS, EvaluationIsRingHomomorphism) {
    testkit::Gen gen;
    for (int i = 0; i < 250; ++i) {
        SElement x = gen.s_element(), y = gen.s_element();
        BigRational p = gen.regular_point();
        EXPECT_EQ(s_eval(x * y, p), s_eval(x, p) * s_eval(y, p));
        EXPECT_EQ(s_eval(x + y, p), s_eval(x, p) + s_eval(y, p));
    }
}

TEST(RingS, MultiplicationIsCommutativeAndAssociative) {
    testkit::Gen gen;
    for (int i = 0; i < 200; ++i) {
        SElement x = gen.s_element(), y = gen.s_element(), z = gen.s_element();
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
    }
}

TEST(RingS, DerivativeIsLeibniz) {
    testkit::Gen gen;
    for (int i = 0; i < 250; ++i) {
        SElement x = gen.s_element(), y = gen.s_element();
        EXPECT_EQ(s_derivative(x * y), s_derivative(x) * y + x * s_derivative(y));
    }
}

TEST(RingS, EvaluationAtPoleThrows) {
    SElement x = SElement::pole(1);
    EXPECT_THROW(s_eval(x, BigRational(0)), std::domain_error);
    EXPECT_THROW(s_eval(x, BigRational(1)), std::domain_error);
}

TEST(RingS, RejectsNonPositivePoleKey) {
    EXPECT_THROW(SElement(LaurentPoly(), {{0, BigRational(1)}}), std::invalid_argument);
    EXPECT_THROW(s_canonicalize(LaurentPoly(BigRational(1)), -1), std::domain_error);
}
