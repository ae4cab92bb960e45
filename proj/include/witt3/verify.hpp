#pragma once

// Named verification suites. Each suite sweeps one family of invariants over
// an index range and reports pass/fail per check together with the first
// counterexample in sorted order.

#include "witt3/sweep.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace witt3 {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::optional<nlohmann::ordered_json> counterexample;
    std::string detail;
};

struct Report {
    std::string suite;
    Range range;
    std::vector<CheckResult> checks;
    std::int64_t duration_ms = 0;

    bool all_pass() const;
    /// {suite, range: [lo, hi], checks: [{name, pass, counterexample?, detail?}], duration_ms}.
    /// With include_timing = false duration_ms is written as 0.
    nlohmann::ordered_json to_json(bool include_timing = true) const;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite or an empty range.
Report run_suite(std::string_view suite, const Range& range, unsigned jobs);

// The individual suites, also used directly by the acceptance tests.
std::vector<CheckResult> check_theorem(const Range& r, unsigned jobs);
std::vector<CheckResult> check_brackets(const Range& r, unsigned jobs);
std::vector<CheckResult> check_pushforward(const Range& r, unsigned jobs);
std::vector<CheckResult> check_cocycle_identity(const Range& r, unsigned jobs);
std::vector<CheckResult> check_identities(const Range& r, unsigned jobs);
std::vector<CheckResult> check_noncoboundary(const Range& r, unsigned jobs);

// Finer-grained pieces.
std::vector<CheckResult> check_closed_vs_pullback(const Range& r, unsigned jobs);
std::vector<CheckResult> check_cocycle_axioms(const Range& r, unsigned jobs);
std::vector<CheckResult> check_chu_vandermonde(const Range& st, Index n_max, unsigned jobs);
std::vector<CheckResult> check_upper_negation(const Range& n_range, Index k_max, unsigned jobs);
std::vector<CheckResult> check_sum_catalogue(const Range& r, unsigned jobs);
std::vector<CheckResult> check_lie_homomorphism(const Range& r, unsigned jobs);
std::vector<CheckResult> check_push_closed(const Range& r, unsigned jobs);
std::vector<CheckResult> check_scaling(const Range& r, unsigned jobs);
std::vector<CheckResult> check_virasoro_constraint(const Range& r, unsigned jobs);

}  // namespace witt3
