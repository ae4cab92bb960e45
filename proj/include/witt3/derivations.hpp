#pragma once

// Der(R) = R.D and Der(S) = S.d/ds with their Lie brackets, and the basis
//   d_n = t^n u D,   e_n = t^n D
// of Der(R).

#include "witt3/ring_r.hpp"
#include "witt3/ring_s.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>

namespace witt3 {

/// g.D on R.
struct DerR {
    RElement g;

    DerR& operator+=(const DerR& o) { g += o.g; return *this; }
    DerR& operator-=(const DerR& o) { g -= o.g; return *this; }
    friend DerR operator+(DerR x, const DerR& y) { return x += y; }
    friend DerR operator-(DerR x, const DerR& y) { return x -= y; }
    friend DerR operator*(const BigRational& c, const DerR& x) { return {c * x.g}; }
    friend bool operator==(const DerR&, const DerR&) = default;
};

/// h.d/ds on S.
struct DerS {
    SElement h;

    DerS& operator+=(const DerS& o) { h += o.h; return *this; }
    DerS& operator-=(const DerS& o) { h -= o.h; return *this; }
    friend DerS operator+(DerS x, const DerS& y) { return x += y; }
    friend DerS operator-(DerS x, const DerS& y) { return x -= y; }
    friend DerS operator*(const BigRational& c, const DerS& x) { return {c * x.h}; }
    friend bool operator==(const DerS&, const DerS&) = default;
};

enum class BasisKind { d, e };

struct BasisR {
    BasisKind kind;
    Index index;
    friend auto operator<=>(const BasisR&, const BasisR&) = default;
};

using BasisMap = std::map<BasisR, BigRational>;

inline BasisR d_basis(Index n) { return {BasisKind::d, n}; }
inline BasisR e_basis(Index n) { return {BasisKind::e, n}; }

DerR basis_element(const BasisR& b);

/// [gD, hD] = (g D(h) - h D(g)) D
DerR bracket_r(const DerR& x, const DerR& y);

/// [f d/ds, g d/ds] = (f g' - g f') d/ds
DerS bracket_s(const DerS& x, const DerS& y);

/// Coordinates in {d_n, e_n}: e-part from a(t), d-part from b(t).
BasisMap r_to_basis(const DerR& x);
DerR r_from_basis(const BasisMap& coords);

/// The three commutation relations, read off as coordinates:
///   [d_m, d_n] = (n-m)(d_{m+n+1} + 4 d_{m+n})
///   [e_m, e_n] = (n-m) d_{m+n-1}
///   [d_m, e_n] = (n-m-1) e_{m+n+1} + (4n-4m-2) e_{m+n}
/// and [e_m, d_n] = -[d_n, e_m].
BasisMap bracket_closed_form(const BasisR& x, const BasisR& y);

/// "d:<n>" / "e:<n>".
std::string format_basis(const BasisR& b);
/// Throws std::invalid_argument naming the token on malformed input.
BasisR parse_basis(std::string_view token);

/// d terms before e terms, descending index within each kind; a +1
/// coefficient is omitted, e.g. "d:2 + 4*d:1" or "-1*e:1 - 2*e:0".
std::string render_basis_map(const BasisMap& coords);

/// Canonical basis of Der(S): s^n d/ds (kind power) and (s-1)^-l d/ds (kind pole, l >= 1).
enum class SBasisKind { power, pole };

struct SBasis {
    SBasisKind kind;
    Index index;
    friend auto operator<=>(const SBasis&, const SBasis&) = default;
};

using SBasisMap = std::map<SBasis, BigRational>;

DerS s_basis_element(const SBasis& b);
SBasisMap s_to_basis(const DerS& x);
/// "s:<n>" / "p:<l>".
std::string format_s_basis(const SBasis& b);

}  // namespace witt3
