#pragma once

// The ring isomorphism f : R -> S with inverse phi,
//   f(t) = s^-1 (s-1)^2,   f(u) = s - s^-1,
//   phi(s) = (t+2+u)/2,    phi(s^-1) = (t+2-u)/2,   phi((s-1)^-1) = (t^-1 u - 1)/2,
// and the induced Lie algebra map Der(R) -> Der(S), x |-> f x f^-1.

#include "witt3/derivations.hpp"

namespace witt3 {

/// f(t^k) = s^-k (s-1)^2k for any integer k.
SElement f_t_power(Index k);

RElement phi_s();            // (t+2+u)/2
RElement phi_s_inverse();    // (t+2-u)/2
RElement phi_pole_generator();  // (t^-1 u - 1)/2

SElement f_map(const RElement& x);
RElement phi_map(const SElement& x);

/// Transports gD to Der(S): apply gD to phi(s) inside R, then map by f.
DerS push(const DerR& x);

/// Closed-form expansion of push on a basis element, by the case split
/// k >= 0, k = -1, k < -1 for both e_k and d_k. The e_k, k >= 0 branch uses
/// the ascending form sum_a C(2k,a) (-1)^a s^(k-a+1).
DerS push_basis_closed(const BasisR& b);

/// The e_k (k >= 0) branch written with exponent -k+a+1; equal to the
/// ascending form after a -> 2k - a.
DerS push_e_descending_form(Index k);

}  // namespace witt3
