#pragma once

// Brute-force checks of the binomial identities behind the closed-form
// cocycle values: Chu-Vandermonde, upper negation, and a fixed catalogue of
// evaluated double sums. Each catalogue entry keeps the summation bounds,
// signs and binomial arguments exactly as they appear in the derivation, so
// a transcription slip shows up as a brute-force mismatch.

#include "witt3/exact_arith.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace witt3 {

struct IdentityPair {
    BigRational lhs;
    BigRational rhs;
    bool holds() const { return lhs == rhs; }
};

/// (sum_{j=0}^{n} C(s,j) C(t,n-j), C(s+t,n)) with extended binomials.
IdentityPair chu_vandermonde(Index s, Index t, Index n);

/// (C(n,k), (-1)^k C(k-n-1,k)).
IdentityPair upper_negation(Index n, Index k);

struct SumFamily {
    std::string id;
    /// Where the sum occurs: the cocycle pairing and (k, l) case it evaluates.
    std::string location;
    std::string region_text;
    std::function<bool(Index, Index)> in_region;
    std::function<BigRational(Index, Index)> brute_force;
    std::function<BigRational(Index, Index)> closed_form;
    /// Set when the closed form as written is known to disagree with the
    /// brute-force sum: the predicate marks exactly where. Such entries stay
    /// in the catalogue so the disagreement remains pinned.
    std::function<bool(Index, Index)> erratum_locus = {};

    bool known_erratum() const { return static_cast<bool>(erratum_locus); }
};

/// The fixed catalogue, in a stable order.
const std::vector<SumFamily>& sum_catalogue();

/// Throws std::invalid_argument for an unknown id.
const SumFamily& find_sum_family(std::string_view id);

/// (brute-force double sum, closed form). Throws std::domain_error when
/// (k, l) lies outside the family's validity region.
IdentityPair sum_family_check(const SumFamily& family, Index k, Index l);
IdentityPair sum_family_check(std::string_view id, Index k, Index l);

}  // namespace witt3
