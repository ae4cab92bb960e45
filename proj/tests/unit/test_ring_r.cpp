#include "witt3/ring_r.hpp"

#include "../support/generators.hpp"

#include <gtest/gtest.h>

using namespace witt3;

TEST(RingR, DefiningRelation) {
    RElement u = RElement::u_times_t_power(0);
    RElement t = RElement::t_power(1);
    EXPECT_EQ(u * u, t * t + RElement::constant(4) * t);
}

TEST(RingR, DOnGenerators) {
    RElement t = RElement::t_power(1);
    RElement u = RElement::u_times_t_power(0);
    EXPECT_EQ(r_apply_D(t), u);
    EXPECT_EQ(r_apply_D(u), t + RElement::constant(2));
    EXPECT_EQ(r_apply_D(RElement::constant(5)), RElement{});
}

TEST(RingR, DRespectsRelation) {
    // D(u^2) = D(t^2 + 4t)
    RElement u = RElement::u_times_t_power(0);
    RElement t = RElement::t_power(1);
    EXPECT_EQ(r_apply_D(u * u), r_apply_D(t * t + RElement::constant(4) * t));
}

TEST(RingR, DIsLeibniz) {
    testkit::Gen gen;
    for (int i = 0; i < 250; ++i) {
        RElement x = gen.r_element(), y = gen.r_element();
        EXPECT_TRUE(r_derivation_check(x, y));
        EXPECT_EQ(r_apply_D(x * y), r_apply_D(x) * y + x * r_apply_D(y));
    }
}

TEST(RingR, RingAxioms) {
    testkit::Gen gen;
    for (int i = 0; i < 200; ++i) {
        RElement x = gen.r_element(), y = gen.r_element(), z = gen.r_element();
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
    }
}

TEST(RingR, Power) {
    RElement u = RElement::u_times_t_power(0);
    EXPECT_EQ(r_pow(u, 0), RElement::constant(1));
    EXPECT_EQ(r_pow(u, 3), u * u * u);
}

TEST(RingR, Render) {
    RElement x = RElement::t_power(2) + RElement::u_times_t_power(-1, 3);
    EXPECT_EQ(x.render(), "1*t^2 + (3*t^-1)*u");
}
