#include "witt3/identity_lab.hpp"

#include <stdexcept>

namespace witt3 {

namespace {

BigRational C(Index n, Index k) { return BigRational(binom(n, k)); }
BigRational sgn(Index e) { return BigRational(sign_pow(e)); }
BigRational dlt(Index a, Index b) { return a == b ? BigRational(1) : BigRational(0); }
BigRational q(Index v) { return BigRational(big(v)); }

template <class Fn>
BigRational sum_over(Index lo, Index hi, Fn&& fn) {
    BigRational total = 0;
    for (Index i = lo; i <= hi; ++i) total += fn(i);
    return total;
}

bool k_nonneg_l_below_minus1(Index k, Index l) { return k >= 0 && l < -1; }
bool both_nonneg(Index k, Index l) { return k >= 0 && l >= 0; }

// Common double sum of the e_k, e_l pairing with k >= 0, l < -1, weighted by w(b).
template <class Weight>
BigRational tktl_sum(Index k, Index l, Weight w) {
    return sum_over(0, k - 2, [&](Index a) -> BigRational {
        return sum_over(0, -l + 1, [&](Index b) -> BigRational {
            return sgn(a + l - b) * C(2 * k, a) * C(-l + 1, b) * C(k - a - l + b - 1, k - 2 - a) * w(b);
        });
    });
}

// Single sums of the e_k, e_l pairing with k, l >= 0, weighted by w(a).
template <class Weight>
BigRational tktl_single(Index k, Index l, Weight w) {
    return sum_over(0, 2 * k, [&](Index a) -> BigRational { return C(2 * k, a) * C(2 * l, k + l - a) * w(a); });
}

std::vector<SumFamily> build_catalogue() {
    std::vector<SumFamily> cat;
    const std::string ee_pos = "e_k,e_l pairing, k,l >= 0";
    const std::string ee_mixed = "e_k,e_l pairing, k >= 0, l < -1";
    const std::string dd_pos = "d_k,d_l pairing, k,l >= 0";
    const std::string dd_mixed = "d_k,d_l pairing, k >= 0, l < -1";
    const std::string ed_mixed = "e_k,d_l pairing, k >= 0, l < -1";
    const std::string ee2_mixed = "second cocycle, e_k,e_l pairing, k >= 0, l < -1";
    const std::string dd2_mixed = "second cocycle, d_k,d_l pairing, k >= 0, l < -1";

    cat.push_back({"tktl-P3", ee_pos, "k >= 0, l >= 0", both_nonneg,
                   [](Index k, Index l) -> BigRational { return tktl_single(k, l, [](Index a) -> BigRational { return q(a * a * a - 3 * a * a + 2 * a); }); },
                   [](Index k, Index l) -> BigRational { return q(2 * k) * q(2 * k - 1) * q(2 * k - 2) * C(2 * k + 2 * l - 3, k + l); }});
    cat.push_back({"tktl-P2", ee_pos, "k >= 0, l >= 0", both_nonneg,
                   [](Index k, Index l) -> BigRational { return tktl_single(k, l, [](Index a) -> BigRational { return q(a * a - a); }); },
                   [](Index k, Index l) -> BigRational { return q(2 * k) * q(2 * k - 1) * C(2 * k + 2 * l - 2, k + l); }});
    cat.push_back({"tktl-P1", ee_pos, "k >= 0, l >= 0", both_nonneg,
                   [](Index k, Index l) -> BigRational { return tktl_single(k, l, [](Index a) -> BigRational { return q(a); }); },
                   [](Index k, Index l) -> BigRational { return q(2 * k) * C(2 * l + 2 * k - 1, l + k); }});
    cat.push_back({"tktl-P0", ee_pos, "k >= 0, l >= 0", both_nonneg,
                   [](Index k, Index l) -> BigRational { return tktl_single(k, l, [](Index) -> BigRational { return q(1); }); },
                   [](Index k, Index l) -> BigRational { return C(2 * l + 2 * k, l + k); }});

    cat.push_back({"tktl-S0", ee_mixed, "k >= 0, l < -1", k_nonneg_l_below_minus1,
                   [](Index k, Index l) -> BigRational { return tktl_sum(k, l, [](Index) -> BigRational { return q(1); }); },
                   [](Index k, Index l) -> BigRational {
                       return sgn(k + l) * C(2 * k + 2 * l - 3, k + l) - dlt(k + l, 1) - dlt(k + l, 0);
                   }});
    cat.push_back({"tktl-Sb", ee_mixed, "k >= 0, l < -1", k_nonneg_l_below_minus1,
                   [](Index k, Index l) -> BigRational { return tktl_sum(k, l, [](Index b) -> BigRational { return q(b); }); },
                   [](Index k, Index l) -> BigRational {
                       return q(-l + 1) * (sgn(k + l + 1) * C(2 * k + 2 * l - 3, k + l - 1) - dlt(k + l, 1));
                   }});
    cat.push_back({"tktl-Sbb", ee_mixed, "k >= 0, l < -1", k_nonneg_l_below_minus1,
                   [](Index k, Index l) -> BigRational { return tktl_sum(k, l, [](Index b) -> BigRational { return q(b * (b - 1)); }); },
                   [](Index k, Index l) -> BigRational { return q(l * l - l) * sgn(k + l) * C(2 * k + 2 * l - 3, k + l - 2); }});
    cat.push_back({"tktl-Sbbb", ee_mixed, "k >= 0, l < -1", k_nonneg_l_below_minus1,
                   [](Index k, Index l) -> BigRational { return tktl_sum(k, l, [](Index b) -> BigRational { return q(b * (b - 1) * (b - 2)); }); },
                   [](Index k, Index l) -> BigRational { return q(l * l * l - l) * sgn(k + l) * C(2 * k + 2 * l - 3, k + l - 3); }});

    cat.push_back({"tkutlu-A", dd_pos, "k >= 0, l >= 0", both_nonneg,
                   [](Index k, Index l) -> BigRational {
                       return sgn(k + l) *
                              sum_over(0, 2 * k + 1, [&](Index a) -> BigRational { return C(2 * k + 1, a) * C(2 * l + 1, k + l - a); });
                   },
                   [](Index k, Index l) -> BigRational { return sgn(k + l) * C(2 * k + 2 * l + 2, k + l + 2); }});

    auto tkutlu_b_sum = [](Index k, Index l) -> BigRational {
        return sum_over(0, k - 1, [&](Index a) -> BigRational {
            return sum_over(0, -l + 1, [&](Index b) -> BigRational {
                return sgn(a + b + k) * C(2 * k + 1, a + k + 2) * C(-l + 1, b) * C(a - 2 * l - b + 1, a);
            });
        });
    };
    cat.push_back({"tkutlu-B", dd_mixed, "k >= 0, l < -1", k_nonneg_l_below_minus1, tkutlu_b_sum,
                   [](Index k, Index l) -> BigRational {
                       BigRational indicator = (k + l >= 2) ? BigRational(1) : BigRational(0);
                       return -sgn(k + l) * C(2 * k + 2 * l - 1, k + l + 1) * indicator;
                   }});
    // The indicator rewritten with deltas; the sign of the delta_{k+l,-1}
    // term is off, so this disagrees with the sum exactly when k+l = -1.
    cat.push_back({"tkutlu-B-expanded", dd_mixed, "k >= 0, l < -1", k_nonneg_l_below_minus1, tkutlu_b_sum,
                   [](Index k, Index l) -> BigRational {
                       return -sgn(k + l) * C(2 * k + 2 * l - 1, k + l + 1) + dlt(k + l, -1) - dlt(k + l, 0);
                   },
                   [](Index k, Index l) { return k + l == -1; }});

    cat.push_back({"ed-1", ed_mixed, "k >= 0, l < -1", k_nonneg_l_below_minus1,
                   [](Index k, Index l) -> BigRational {
                       return sum_over(0, k - 2, [&](Index a) -> BigRational {
                           return sum_over(0, -l + 1, [&](Index b) -> BigRational {
                               return sgn(a + b) * C(2 * k, a) * C(-l + 1, b) *
                                      C(k - a - 2 * l - b - 1, -b - 2 * l + 1);
                           });
                       });
                   },
                   [](Index k, Index l) -> BigRational {
                       return -sgn(l + k) * C(2 * k + 2 * l - 2, k + l + 1) - dlt(k + l, -1) - 2 * dlt(k + l, 0);
                   }});
    cat.push_back({"ed-2", ed_mixed, "k >= 0, l < -1", k_nonneg_l_below_minus1,
                   [](Index k, Index l) -> BigRational {
                       return sum_over(0, k - 2, [&](Index a) -> BigRational {
                           return sum_over(0, -l, [&](Index b) -> BigRational {
                               return sgn(a + b) * C(2 * k, a) * C(-l, b) * C(k - a - 2 * l - b - 1, -b - 2 * l + 1);
                           });
                       });
                   },
                   [](Index k, Index l) -> BigRational { return sgn(l + k) * C(2 * k + 2 * l - 2, k + l) - dlt(k + l, 0); }});

    cat.push_back({"phi2-1", ee2_mixed, "k >= 0, l < -1", k_nonneg_l_below_minus1,
                   [](Index k, Index l) -> BigRational {
                       return sum_over(k, 2 * k, [&](Index a) -> BigRational {
                           return sum_over(0, -l + 1, [&](Index b) -> BigRational {
                               return sgn(a) * C(2 * k, a) * C(-l + 1, b) * C(a - k + 1, -l + b + 1);
                           });
                       });
                   },
                   [](Index k, Index l) -> BigRational { return sgn(l + k) * C(2 * k + 2 * l - 3, l + k); }});
    cat.push_back({"phi2-2", ee2_mixed, "k >= 0, l < -1", k_nonneg_l_below_minus1,
                   [](Index k, Index l) -> BigRational {
                       return sum_over(0, k - 1, [&](Index a) -> BigRational {
                           return sum_over(0, -l + 1, [&](Index b) -> BigRational {
                               return sgn(a) * C(2 * k, a) * C(-l + 1, b) * sgn(b + l) * C(b - l + k - a - 1, k - a + 1);
                           });
                       });
                   },
                   [](Index k, Index l) -> BigRational { return -sgn(k + l) * C(2 * k + 2 * l, k + l); }});
    cat.push_back({"phi2-3", dd2_mixed, "k >= 0, l < -1", k_nonneg_l_below_minus1,
                   [](Index k, Index l) -> BigRational {
                       return sum_over(0, k, [&](Index a) -> BigRational {
                           return sum_over(0, -l + 1, [&](Index b) -> BigRational {
                               return sgn(a) * C(2 * k + 1, a) * C(-l + 1, b) * C(k + 1 - a, -b - 2 * l + 1);
                           });
                       });
                   },
                   [](Index k, Index l) -> BigRational { return sgn(l + k + 1) * C(2 * k + 2 * l - 1, l + k + 1); }});
    return cat;
}

}  // namespace

IdentityPair chu_vandermonde(Index s, Index t, Index n) {
    IdentityPair p;
    p.lhs = sum_over(0, n, [&](Index j) -> BigRational { return C(s, j) * C(t, n - j); });
    p.rhs = C(s + t, n);
    return p;
}

IdentityPair upper_negation(Index n, Index k) { return {C(n, k), sgn(k) * C(k - n - 1, k)}; }

const std::vector<SumFamily>& sum_catalogue() {
    static const std::vector<SumFamily> catalogue = build_catalogue();
    return catalogue;
}

const SumFamily& find_sum_family(std::string_view id) {
    for (const auto& f : sum_catalogue()) {
        if (f.id == id) return f;
    }
    throw std::invalid_argument("unknown sum family '" + std::string(id) + "'");
}

IdentityPair sum_family_check(const SumFamily& family, Index k, Index l) {
    if (!family.in_region(k, l)) {
        throw std::domain_error(family.id + ": (" + std::to_string(k) + ", " + std::to_string(l) +
                                ") outside " + family.region_text);
    }
    return {family.brute_force(k, l), family.closed_form(k, l)};
}

IdentityPair sum_family_check(std::string_view id, Index k, Index l) {
    return sum_family_check(find_sum_family(id), k, l);
}

}  // namespace witt3
