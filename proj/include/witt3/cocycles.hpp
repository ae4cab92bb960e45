#pragma once

// The 2-cocycles phi_1, phi_2 on Der(S), anchored at a_1 = 0 and a_2 = 1,
// and their pullbacks bar_phi_i(x, y) = phi_i(push x, push y) on Der(R).

#include "witt3/derivations.hpp"

namespace witt3 {

enum class CocycleId { phi1 = 1, phi2 = 2 };

/// a_1 = 0, a_2 = 1.
constexpr Index anchor(CocycleId id) { return id == CocycleId::phi1 ? 0 : 1; }

/// phi_i((s-a_i)^-k d, (s-a_j)^-l d) for k, l >= 1, j != i, from
///   (k+l+1)! / ((k-1)! (l-1)! (a_j-a_i)^(k+1) (a_i-a_j)^(l+1)).
BigRational mixed_pole_factorial(CocycleId id, Index k, Index l);

/// The same value from
///   (-1)^(l+1) / (a_j-a_i)^(k+l+2) * C(k+l-2, k-1) ((k+l)^3 - (k+l)).
BigRational mixed_pole_binomial(CocycleId id, Index k, Index l);

/// phi_i on an ordered pair of canonical basis elements of Der(S).
///
/// Rules, tried in order after decomposition:
///   a_i = 0:  phi(s^(k+1) d, s^(-l+1) d) = delta_{k,l} (l^3 - l), all k, l
///   a_i = 1:  phi(s^(k+1) d, (s-1)^(-l+1) d) = C(k+1, l+1) (l^3 - l), k, l >= 0
///   mixed:    phi((s-a_i)^-k d, (s-a_j)^-l d), k, l >= 1 (see mixed_pole_factorial)
///   otherwise 0.
/// A pair matching only with its arguments swapped gets the negated value.
BigRational phi_S_basis(CocycleId id, const SBasis& x, const SBasis& y);

/// Bilinear extension of phi_S_basis.
BigRational phi_S(CocycleId id, const DerS& x, const DerS& y);

/// phi_i(push x, push y): the defining composition.
BigRational bar_phi_pullback(CocycleId id, const DerR& x, const DerR& y);

/// Closed-form values on basis pairs of Der(R):
///
///   bar_phi_1(e_k, e_l) = 2(l^2-l)(2l-1) delta_{k+l,1} + (l^3-l) delta_{k+l,0}
///   bar_phi_1(e_k, d_l) = 6 (-1)^(k+l) 2^(k+l) (k-1) k l (2k+2l-3)!! / (k+l+1)!
///   bar_phi_1(d_l, e_k) = -bar_phi_1(e_k, d_l)
///   bar_phi_1(d_k, d_l) = l(l+1)(l+2) delta_{k+l,-2} + 4l(2l+1)(l+1) delta_{k+l,-1}
///                         + 4l(2l-1)(2l+1) delta_{k+l,0}
///   bar_phi_2(e_k, e_l) = -2(l^3-l) delta_{k+l,0} - 4l(l-1)(2l-1) delta_{k+l,1}
///   bar_phi_2(e_k, d_l) = bar_phi_2(d_l, e_k) = 0
///   bar_phi_2(d_k, d_l) = -2l(l+1)(l+2) delta_{k+l,-2} - 8l(l+1)(2l+1) delta_{k+l,-1}
///                         - 8l(2l-1)(2l+1) delta_{k+l,0}
///
/// The double factorial is continued to negative odd arguments
/// (double_factorial_odd_ext) and 1/n! vanishes for n < 0.
BigRational bar_phi_closed(CocycleId id, const BasisR& x, const BasisR& y);

/// The (e_k, d_l) coefficient of bar_phi_1 on its own.
BigRational bar_phi1_ed_coefficient(Index k, Index l);

/// Bilinear extension of bar_phi_closed through r_to_basis.
BigRational bar_phi_closed_bilinear(CocycleId id, const DerR& x, const DerR& y);

struct Residuals {
    BigRational skew;     // phi(x,y) + phi(y,x)
    BigRational cocycle;  // phi([x,y],z) + phi([y,z],x) + phi([z,x],y)
    bool vanish() const { return skew == 0 && cocycle == 0; }
};

template <class Elem, class Form, class Bracket>
Residuals cocycle_residuals(const Form& phi, const Bracket& bracket, const Elem& x, const Elem& y,
                            const Elem& z) {
    Residuals r;
    r.skew = phi(x, y) + phi(y, x);
    r.cocycle = phi(bracket(x, y), z) + phi(bracket(y, z), x) + phi(bracket(z, x), y);
    return r;
}

/// Parses "phi1" / "phi2".
CocycleId parse_cocycle_id(std::string_view name);

}  // namespace witt3
