#include "witt3/coboundary.hpp"

#include <algorithm>

namespace witt3 {

std::vector<SBasis> s_window(Index lo, Index hi) {
    std::vector<SBasis> out;
    for (Index n = lo; n <= hi; ++n) out.push_back({SBasisKind::power, n});
    for (Index l = std::max<Index>(1, lo); l <= hi; ++l) out.push_back({SBasisKind::pole, l});
    return out;
}

std::vector<BasisR> r_window(Index lo, Index hi) {
    std::vector<BasisR> out;
    for (Index n = lo; n <= hi; ++n) {
        out.push_back(e_basis(n));
        out.push_back(d_basis(n));
    }
    return out;
}

BracketCoords<SBasis> s_bracket_coords() {
    return [](const SBasis& x, const SBasis& y) {
        return s_to_basis(bracket_s(s_basis_element(x), s_basis_element(y)));
    };
}

BracketCoords<BasisR> r_bracket_coords() {
    return [](const BasisR& x, const BasisR& y) {
        return r_to_basis(bracket_r(basis_element(x), basis_element(y)));
    };
}

}  // namespace witt3
