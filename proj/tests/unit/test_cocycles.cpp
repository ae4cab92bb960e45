#include "witt3/cocycles.hpp"
#include "witt3/isomorphism.hpp"

#include "../support/generators.hpp"
#include "../support/residue_oracle.hpp"

#include <gtest/gtest.h>

using namespace witt3;

namespace {

std::vector<SBasis> window(Index lo, Index hi) {
    std::vector<SBasis> out;
    for (Index n = lo; n <= hi; ++n) out.push_back({SBasisKind::power, n});
    for (Index l = 1; l <= hi; ++l) out.push_back({SBasisKind::pole, l});
    return out;
}

}  // namespace

TEST(CocyclesS, GoldenValues) {
    using C = CocycleId;
    EXPECT_EQ(phi_S(C::phi1, {SElement::monomial(3)}, {SElement::monomial(-1)}), 6);
    EXPECT_EQ(phi_S(C::phi1, {SElement::monomial(-1)}, {SElement::pole(1)}), 6);
    EXPECT_EQ(phi_S(C::phi1, {SElement::monomial(-1)}, {SElement::pole(2)}), -24);
    EXPECT_EQ(phi_S(C::phi2, {SElement::monomial(4)}, {SElement::pole(1)}), 24);
}

TEST(CocyclesS, BasisRulesMatchResidueDefinition) {
    const auto basis = window(-6, 6);
    for (CocycleId id : {CocycleId::phi1, CocycleId::phi2}) {
        for (const auto& x : basis) {
            for (const auto& y : basis) {
                BigRational expected = testkit::residue_cocycle(s_basis_element(x).h, s_basis_element(y).h, anchor(id));
                EXPECT_EQ(phi_S_basis(id, x, y), expected)
                    << static_cast<int>(id) << " " << format_s_basis(x) << " " << format_s_basis(y);
            }
        }
    }
}

TEST(CocyclesS, BilinearFormMatchesResidueOnRandomElements) {
    testkit::Gen gen;
    for (int i = 0; i < 200; ++i) {
        DerS x = gen.der_s(), y = gen.der_s();
        for (CocycleId id : {CocycleId::phi1, CocycleId::phi2}) {
            EXPECT_EQ(phi_S(id, x, y), testkit::residue_cocycle(x.h, y.h, anchor(id)));
        }
    }
}

TEST(CocyclesS, MixedPoleFormulasAgree) {
    for (CocycleId id : {CocycleId::phi1, CocycleId::phi2}) {
        for (Index k = 1; k <= 8; ++k) {
            for (Index l = 1; l <= 8; ++l) EXPECT_EQ(mixed_pole_factorial(id, k, l), mixed_pole_binomial(id, k, l));
        }
    }
    EXPECT_EQ(mixed_pole_factorial(CocycleId::phi1, 1, 1), 6);
}

TEST(CocyclesS, SkewAndCocycleOnRandomElements) {
    testkit::Gen gen;
    for (int i = 0; i < 200; ++i) {
        DerS x = gen.der_s(), y = gen.der_s(), z = gen.der_s();
        for (CocycleId id : {CocycleId::phi1, CocycleId::phi2}) {
            auto form = [id](const DerS& a, const DerS& b) { return phi_S(id, a, b); };
            EXPECT_TRUE(cocycle_residuals(form, bracket_s, x, y, z).vanish());
        }
    }
}

TEST(CocyclesR, GoldenValues) {
    using C = CocycleId;
    EXPECT_EQ(bar_phi_closed(C::phi1, e_basis(-1), e_basis(2)), 12);
    EXPECT_EQ(bar_phi_closed(C::phi1, d_basis(1), d_basis(-1)), -12);
    EXPECT_EQ(bar_phi_closed(C::phi1, e_basis(2), d_basis(1)), -12);
    EXPECT_EQ(bar_phi_closed(C::phi2, e_basis(-2), e_basis(2)), -12);
    EXPECT_EQ(bar_phi_closed(C::phi2, e_basis(3), d_basis(0)), 0);
    EXPECT_EQ(bar_phi_pullback(C::phi1, basis_element(e_basis(-1)), basis_element(e_basis(2))), 12);
    EXPECT_EQ(bar_phi_pullback(C::phi1, basis_element(d_basis(1)), basis_element(d_basis(-1))), -12);
}

TEST(CocyclesR, EdCoefficientAtNegativeTotalDegree) {
    // k + l = -1 uses (-5)!! = 1/3.
    EXPECT_EQ(bar_phi1_ed_coefficient(-8, 7), bar_phi_pullback(CocycleId::phi1, basis_element(e_basis(-8)),
                                                                basis_element(d_basis(7))));
    // 1/(k+l+1)! vanishes below k + l = -1.
    EXPECT_EQ(bar_phi1_ed_coefficient(-5, 2), 0);
}

TEST(CocyclesR, ClosedEqualsPullbackOnSmallGrid) {
    for (CocycleId id : {CocycleId::phi1, CocycleId::phi2}) {
        for (Index k = -4; k <= 4; ++k) {
            for (Index l = -4; l <= 4; ++l) {
                for (auto kx : {BasisKind::d, BasisKind::e}) {
                    for (auto ky : {BasisKind::d, BasisKind::e}) {
                        BasisR x{kx, k}, y{ky, l};
                        EXPECT_EQ(bar_phi_closed(id, x, y), bar_phi_pullback(id, basis_element(x), basis_element(y)))
                            << format_basis(x) << " " << format_basis(y);
                    }
                }
            }
        }
    }
}

TEST(CocyclesR, ClosedBilinearOnRandomElements) {
    testkit::Gen gen;
    for (int i = 0; i < 100; ++i) {
        DerR x = gen.der_r(), y = gen.der_r();
        for (CocycleId id : {CocycleId::phi1, CocycleId::phi2}) {
            EXPECT_EQ(bar_phi_closed_bilinear(id, x, y), bar_phi_pullback(id, x, y));
        }
    }
}

TEST(CocyclesR, ParseId) {
    EXPECT_EQ(parse_cocycle_id("phi2"), CocycleId::phi2);
    EXPECT_THROW(parse_cocycle_id("phi3"), std::invalid_argument);
}
