#include "witt3/derivations.hpp"

#include "../support/generators.hpp"

#include <gtest/gtest.h>

using namespace witt3;

TEST(Derivations, BasisElements) {
    EXPECT_EQ(basis_element(e_basis(3)).g, RElement::t_power(3));
    EXPECT_EQ(basis_element(d_basis(-2)).g, RElement::u_times_t_power(-2));
}

TEST(Derivations, PrintedRelationsSmallCases) {
    // [e_0, e_1] = d_0
    EXPECT_EQ(render_basis_map(r_to_basis(bracket_r(basis_element(e_basis(0)), basis_element(e_basis(1))))), "d:0");
    // [d_0, e_0] = -e_1 - 2 e_0
    EXPECT_EQ(render_basis_map(r_to_basis(bracket_r(basis_element(d_basis(0)), basis_element(e_basis(0))))),
              "-1*e:1 - 2*e:0");
    // [d_0, d_1] = d_2 + 4 d_1
    EXPECT_EQ(render_basis_map(r_to_basis(bracket_r(basis_element(d_basis(0)), basis_element(d_basis(1))))),
              "d:2 + 4*d:1");
}

TEST(Derivations, ClosedRelationsMatchDirectBracket) {
    for (Index m = -5; m <= 5; ++m) {
        for (Index n = -5; n <= 5; ++n) {
            for (auto km : {BasisKind::d, BasisKind::e}) {
                for (auto kn : {BasisKind::d, BasisKind::e}) {
                    BasisR x{km, m}, y{kn, n};
                    EXPECT_EQ(r_to_basis(bracket_r(basis_element(x), basis_element(y))), bracket_closed_form(x, y))
                        << format_basis(x) << " " << format_basis(y);
                }
            }
        }
    }
}

TEST(Derivations, BasisRoundTrip) {
    testkit::Gen gen;
    for (int i = 0; i < 200; ++i) {
        DerR x = gen.der_r();
        EXPECT_EQ(r_from_basis(r_to_basis(x)), x);
    }
}

TEST(Derivations, JacobiOnDerR) {
    testkit::Gen gen;
    for (int i = 0; i < 200; ++i) {
        DerR x = gen.der_r(), y = gen.der_r(), z = gen.der_r();
        DerR j = bracket_r(x, bracket_r(y, z)) + bracket_r(y, bracket_r(z, x)) + bracket_r(z, bracket_r(x, y));
        EXPECT_TRUE(j.g.is_zero());
        EXPECT_EQ(bracket_r(x, y), BigRational(-1) * bracket_r(y, x));
    }
}

TEST(Derivations, JacobiOnDerS) {
    testkit::Gen gen;
    for (int i = 0; i < 200; ++i) {
        DerS x = gen.der_s(), y = gen.der_s(), z = gen.der_s();
        DerS j = bracket_s(x, bracket_s(y, z)) + bracket_s(y, bracket_s(z, x)) + bracket_s(z, bracket_s(x, y));
        EXPECT_TRUE(j.h.is_zero());
    }
}

TEST(Derivations, WittRelationOnPowers) {
    for (Index m = -4; m <= 4; ++m) {
        for (Index n = -4; n <= 4; ++n) {
            DerS b = bracket_s({SElement::monomial(m + 1)}, {SElement::monomial(n + 1)});
            EXPECT_EQ(b.h, SElement::monomial(m + n + 1, BigRational(big(n - m))));
        }
    }
}

TEST(Derivations, ParseBasis) {
    EXPECT_EQ(parse_basis("d:-3"), d_basis(-3));
    EXPECT_EQ(parse_basis("e:12"), e_basis(12));
    EXPECT_EQ(format_basis(e_basis(-1)), "e:-1");
    for (const char* bad : {"x:1", "d:", "d:1.5", "e", "e:1x"}) {
        try {
            parse_basis(bad);
            ADD_FAILURE() << bad;
        } catch (const std::invalid_argument& e) {
            EXPECT_NE(std::string(e.what()).find(bad), std::string::npos) << e.what();
        }
    }
}

TEST(Derivations, SBasisCoordinates) {
    DerS x{SElement::monomial(2, 3) + SElement::pole(2, -1)};
    SBasisMap m = s_to_basis(x);
    ASSERT_EQ(m.size(), 2u);
    EXPECT_EQ((m[SBasis{SBasisKind::power, 2}]), 3);
    EXPECT_EQ((m[SBasis{SBasisKind::pole, 2}]), -1);
    EXPECT_EQ(format_s_basis({SBasisKind::pole, 2}), "p:2");
    EXPECT_EQ(format_s_basis({SBasisKind::power, -1}), "s:-1");
}
