#include "witt3/isomorphism.hpp"

#include "../support/generators.hpp"

#include <gtest/gtest.h>

using namespace witt3;

TEST(Isomorphism, ImagesOfGenerators) {
    SElement ft = f_map(RElement::t_power(1));
    EXPECT_EQ(ft, SElement::monomial(1) - SElement::constant(2) + SElement::monomial(-1));
    SElement fu = f_map(RElement::u_times_t_power(0));
    EXPECT_EQ(fu, SElement::monomial(1) - SElement::monomial(-1));
    EXPECT_EQ(r_mul(phi_s(), phi_s_inverse()), RElement::constant(1));
    // phi((s-1)^-1) * (phi(s) - 1) = 1
    EXPECT_EQ(r_mul(phi_pole_generator(), phi_s() - RElement::constant(1)), RElement::constant(1));
}

TEST(Isomorphism, FThenPhiIsIdentityOnR) {
    testkit::Gen gen;
    for (int i = 0; i < 250; ++i) {
        RElement x = gen.r_element();
        EXPECT_EQ(phi_map(f_map(x)), x) << x.render();
    }
}

TEST(Isomorphism, PhiThenFIsIdentityOnS) {
    testkit::Gen gen;
    for (int i = 0; i < 250; ++i) {
        SElement x = gen.s_element();
        EXPECT_EQ(f_map(phi_map(x)), x) << x.render();
    }
}

TEST(Isomorphism, FIsMultiplicative) {
    testkit::Gen gen;
    for (int i = 0; i < 200; ++i) {
        RElement x = gen.r_element(), y = gen.r_element();
        EXPECT_EQ(f_map(x * y), f_map(x) * f_map(y));
    }
}

TEST(Isomorphism, PushIsCoefficientTimesS) {
    // D(phi(s)) = phi(s), so push(gD) = f(g) s d/ds.
    testkit::Gen gen;
    for (int i = 0; i < 200; ++i) {
        DerR x = gen.der_r();
        EXPECT_EQ(push(x).h, f_map(x.g) * SElement::monomial(1));
    }
}

TEST(Isomorphism, PushIntertwinesDerivations) {
    // f(gD(r)) = push(gD)(f(r))
    testkit::Gen gen;
    for (int i = 0; i < 200; ++i) {
        DerR x = gen.der_r();
        RElement r = gen.r_element();
        EXPECT_EQ(f_map(r_mul(x.g, r_apply_D(r))), push(x).h * s_derivative(f_map(r)));
    }
}

TEST(Isomorphism, PushClosedSmallCases) {
    // e_0 -> s d, e_{-1} -> (1 + 2(s-1)^-1 + (s-1)^-2) d, d_{-1} -> (s + 2 + 2(s-1)^-1) d
    EXPECT_EQ(push(basis_element(e_basis(0))).h, SElement::monomial(1));
    SElement em1 = SElement::constant(1) + SElement::pole(1, 2) + SElement::pole(2);
    EXPECT_EQ(push(basis_element(e_basis(-1))).h, em1);
    SElement dm1 = SElement::monomial(1) + SElement::constant(2) + SElement::pole(1, 2);
    EXPECT_EQ(push(basis_element(d_basis(-1))).h, dm1);
    for (Index k = -6; k <= 6; ++k) {
        EXPECT_EQ(push(basis_element(e_basis(k))), push_basis_closed(e_basis(k))) << k;
        EXPECT_EQ(push(basis_element(d_basis(k))), push_basis_closed(d_basis(k))) << k;
    }
    for (Index k = 0; k <= 6; ++k) EXPECT_EQ(push_e_descending_form(k), push_basis_closed(e_basis(k)));
}

TEST(Isomorphism, PushIsLieHomomorphismOnRandomElements) {
    testkit::Gen gen;
    for (int i = 0; i < 200; ++i) {
        DerR x = gen.der_r(), y = gen.der_r();
        EXPECT_EQ(push(bracket_r(x, y)), bracket_s(push(x), push(y)));
    }
}
