#include "witt3/cocycles.hpp"

#include "witt3/isomorphism.hpp"

#include <stdexcept>

namespace witt3 {

namespace {

Index other_anchor(CocycleId id) { return id == CocycleId::phi1 ? 1 : 0; }

BigInteger cubic(Index l) { return big(l) * big(l) * big(l) - big(l); }

BigInteger delta(Index a, Index b) { return a == b ? 1 : 0; }

}  // namespace

BigRational mixed_pole_factorial(CocycleId id, Index k, Index l) {
    if (k < 1 || l < 1) throw std::domain_error("mixed pole orders must be >= 1");
    const Index ai = anchor(id);
    const Index aj = other_anchor(id);
    BigRational denom = BigRational(factorial(k - 1) * factorial(l - 1));
    denom *= pow_int(BigRational(big(aj - ai)), k + 1);
    denom *= pow_int(BigRational(big(ai - aj)), l + 1);
    return BigRational(factorial(k + l + 1)) / denom;
}

BigRational mixed_pole_binomial(CocycleId id, Index k, Index l) {
    if (k < 1 || l < 1) throw std::domain_error("mixed pole orders must be >= 1");
    const Index gap = other_anchor(id) - anchor(id);
    BigRational v = BigRational(binom(k + l - 2, k - 1) * cubic(k + l) * sign_pow(l + 1));
    return v / pow_int(BigRational(big(gap)), k + l + 2);
}

BigRational phi_S_basis(CocycleId id, const SBasis& x, const SBasis& y) {
    const bool x_power = x.kind == SBasisKind::power;
    const bool y_power = y.kind == SBasisKind::power;
    if (!x_power && !y_power) return 0;
    if (id == CocycleId::phi1) {
        if (x_power && y_power) {
            // s^(k+1), s^(-l+1)
            const Index k = x.index - 1;
            const Index l = 1 - y.index;
            return k == l ? BigRational(cubic(l)) : BigRational(0);
        }
        if (x_power) {
            // s^-k against (s-1)^-l
            return x.index <= -1 ? mixed_pole_factorial(id, -x.index, y.index) : BigRational(0);
        }
        return -phi_S_basis(id, y, x);
    }
    if (x_power && y_power) return 0;
    if (x_power) {
        if (x.index >= 1) {
            // s^(k+1), (s-1)^(-l+1) with k = index-1 >= 0, l = pole+1
            const Index k = x.index - 1;
            const Index l = y.index + 1;
            return BigRational(binom(k + 1, l + 1) * cubic(l));
        }
        if (x.index <= -1) {
            // swapped mixed pattern: phi_2((s-1)^-m, s^-n) = mixed
            return -mixed_pole_factorial(id, y.index, -x.index);
        }
        return 0;
    }
    return -phi_S_basis(id, y, x);
}

BigRational phi_S(CocycleId id, const DerS& x, const DerS& y) {
    BigRational total = 0;
    const SBasisMap xs = s_to_basis(x);
    const SBasisMap ys = s_to_basis(y);
    for (const auto& [bx, cx] : xs) {
        for (const auto& [by, cy] : ys) {
            BigRational v = phi_S_basis(id, bx, by);
            if (v != 0) total += cx * cy * v;
        }
    }
    return total;
}

BigRational bar_phi_pullback(CocycleId id, const DerR& x, const DerR& y) {
    return phi_S(id, push(x), push(y));
}

BigRational bar_phi1_ed_coefficient(Index k, Index l) {
    const Index n = k + l;
    BigRational inv_fact = recip_factorial(n + 1);
    if (inv_fact == 0) return 0;
    BigRational v = BigRational(big(6) * big(k - 1) * big(k) * big(l) * sign_pow(n));
    v *= pow_int(BigRational(2), n);
    v *= double_factorial_odd_ext(2 * n - 3);
    v *= inv_fact;
    return v;
}

BigRational bar_phi_closed(CocycleId id, const BasisR& x, const BasisR& y) {
    const Index k = x.index;
    const Index l = y.index;
    const Index n = k + l;
    const bool ee = x.kind == BasisKind::e && y.kind == BasisKind::e;
    const bool dd = x.kind == BasisKind::d && y.kind == BasisKind::d;
    const BigInteger L = big(l);

    if (id == CocycleId::phi1) {
        if (ee) return BigRational(2 * (L * L - L) * (2 * L - 1) * delta(n, 1) + cubic(l) * delta(n, 0));
        if (dd) {
            return BigRational(L * (L + 1) * (L + 2) * delta(n, -2) + 4 * L * (2 * L + 1) * (L + 1) * delta(n, -1) +
                               4 * L * (2 * L - 1) * (2 * L + 1) * delta(n, 0));
        }
        if (x.kind == BasisKind::e) return bar_phi1_ed_coefficient(k, l);
        return -bar_phi1_ed_coefficient(l, k);
    }
    if (ee) return BigRational(-2 * cubic(l) * delta(n, 0) - 4 * L * (L - 1) * (2 * L - 1) * delta(n, 1));
    if (dd) {
        return BigRational(-2 * L * (L + 1) * (L + 2) * delta(n, -2) - 8 * L * (L + 1) * (2 * L + 1) * delta(n, -1) -
                           8 * L * (2 * L - 1) * (2 * L + 1) * delta(n, 0));
    }
    return 0;
}

BigRational bar_phi_closed_bilinear(CocycleId id, const DerR& x, const DerR& y) {
    BigRational total = 0;
    const BasisMap xs = r_to_basis(x);
    const BasisMap ys = r_to_basis(y);
    for (const auto& [bx, cx] : xs) {
        for (const auto& [by, cy] : ys) {
            BigRational v = bar_phi_closed(id, bx, by);
            if (v != 0) total += cx * cy * v;
        }
    }
    return total;
}

CocycleId parse_cocycle_id(std::string_view name) {
    if (name == "phi1") return CocycleId::phi1;
    if (name == "phi2") return CocycleId::phi2;
    throw std::invalid_argument("unknown cocycle '" + std::string(name) + "'");
}

}  // namespace witt3
