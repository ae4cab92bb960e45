// Acceptance criteria, one PASS/FAIL line each. All comparisons are exact.

#include "witt3/cocycles.hpp"
#include "witt3/isomorphism.hpp"
#include "witt3/verify.hpp"

#include "../support/generators.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

using namespace witt3;

namespace {

// Ranges and case counts of each criterion.
constexpr Range kTheoremRange{-8, 8};
constexpr Range kBracketRange{-8, 8};
constexpr Range kPushClosedRange{-10, 10};
constexpr Range kLieHomRange{-6, 6};
constexpr Range kCocycleRange{-4, 4};
constexpr Range kScalingRange{-8, 8};
constexpr Range kVirasoroRange{-6, 6};
constexpr Range kChuRange{-12, 12};
constexpr Index kChuMaxN = 12;
constexpr Range kNegationRange{-20, 20};
constexpr Index kNegationMaxK = 20;
constexpr Range kCatalogueRange{-8, 8};
constexpr int kPropertyCases = 250;
constexpr std::uint64_t kPropertySeed = 0x3a11'5eedULL;
constexpr Range kCoboundaryRange{-6, 6};

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome from_checks(const std::vector<CheckResult>& checks) {
    Outcome o{true, ""};
    std::size_t passed = 0;
    for (const auto& c : checks) {
        if (c.pass) {
            ++passed;
            continue;
        }
        o.pass = false;
        o.detail += "\n    failed: " + c.name + " [" + c.detail + "]";
        if (c.counterexample) o.detail += " " + c.counterexample->dump();
    }
    o.detail = std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks" + o.detail;
    return o;
}

template <class... Vs>
std::vector<CheckResult> concat(Vs... vs) {
    std::vector<CheckResult> out;
    (out.insert(out.end(), vs.begin(), vs.end()), ...);
    return out;
}

Outcome golden_values() {
    struct Golden {
        std::string label;
        BigRational got;
        BigRational want;
    };
    using C = CocycleId;
    std::vector<Golden> g{
        {"phi1bar(e_-1,e_2)", bar_phi_closed(C::phi1, e_basis(-1), e_basis(2)), 12},
        {"phi1bar(e_-1,e_2) pullback",
         bar_phi_pullback(C::phi1, basis_element(e_basis(-1)), basis_element(e_basis(2))), 12},
        {"phi1bar(d_1,d_-1)", bar_phi_closed(C::phi1, d_basis(1), d_basis(-1)), -12},
        {"phi1bar(d_1,d_-1) pullback",
         bar_phi_pullback(C::phi1, basis_element(d_basis(1)), basis_element(d_basis(-1))), -12},
        {"phi1(s^-1 d, (s-1)^-1 d)", phi_S(C::phi1, {SElement::monomial(-1)}, {SElement::pole(1)}), 6},
        {"phi2(s^4 d, (s-1)^-1 d)", phi_S(C::phi2, {SElement::monomial(4)}, {SElement::pole(1)}), 24},
    };
    Outcome o{true, ""};
    for (const auto& v : g) {
        if (v.got == v.want) continue;
        o.pass = false;
        o.detail += " " + v.label + "=" + to_string(v.got) + " (want " + to_string(v.want) + ")";
    }
    if (o.pass) o.detail = std::to_string(g.size()) + " values";
    return o;
}

Outcome ring_properties() {
    testkit::Gen gen(kPropertySeed);
    struct Prop {
        std::string name;
        std::function<bool()> trial;
        int failures = 0;
    };
    std::vector<Prop> props{
        {"f(phi(x)) = x on S", [&] { SElement x = gen.s_element(); return f_map(phi_map(x)) == x; }},
        {"phi(f(x)) = x on R", [&] { RElement x = gen.r_element(); return phi_map(f_map(x)) == x; }},
        {"D(xy) = D(x)y + xD(y) on R", [&] { return r_derivation_check(gen.r_element(), gen.r_element()); }},
        {"(xy)' = x'y + xy' on S",
         [&] {
             SElement x = gen.s_element(), y = gen.s_element();
             return s_derivative(x * y) == s_derivative(x) * y + x * s_derivative(y);
         }},
        {"partial fractions round trip",
         [&] {
             SElement x = gen.s_element();
             SFraction f = s_to_fraction(x);
             return s_canonicalize(f.numerator, f.pole_order) == x;
         }},
        {"partial fractions agree pointwise",
         [&] {
             LaurentPoly num = gen.laurent(-5, 5);
             Index m = gen.integer(0, 5);
             BigRational p = gen.regular_point();
             return s_eval(s_canonicalize(num, m), p) == num.eval(p) * pow_int(p - 1, -m);
         }},
    };
    Outcome o{true, ""};
    for (auto& p : props) {
        for (int i = 0; i < kPropertyCases; ++i) p.failures += p.trial() ? 0 : 1;
        if (p.failures) {
            o.pass = false;
            o.detail += " " + p.name + ": " + std::to_string(p.failures) + " failures;";
        }
    }
    if (o.pass) o.detail = std::to_string(props.size()) + " properties x " + std::to_string(kPropertyCases) + " cases";
    return o;
}

Outcome noncoboundary(unsigned jobs) {
    auto checks = check_noncoboundary(kCoboundaryRange, jobs);
    Outcome o = from_checks(checks);
    for (const auto& c : checks) o.detail += "\n    " + c.name + ": " + c.detail;
    return o;
}

}  // namespace

int main() {
    const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    struct Criterion {
        std::string title;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {"closed-form cocycles equal pullbacks, 2 cocycles x 4 kind pairs, k,l in [-8,8]",
         [&] { return from_checks(check_closed_vs_pullback(kTheoremRange, jobs)); }},
        {"golden values", golden_values},
        {"commutation relations, m,n in [-8,8]", [&] { return from_checks(check_brackets(kBracketRange, jobs)); }},
        {"push = closed expansion on [-10,10]; Lie homomorphism on [-6,6]",
         [&] {
             return from_checks(concat(check_push_closed(kPushClosedRange, jobs),
                                       check_lie_homomorphism(kLieHomRange, jobs)));
         }},
        {"skew and cocycle identities, all basis triples in [-4,4], 8 kind combinations, 4 cocycles",
         [&] { return from_checks(check_cocycle_axioms(kCocycleRange, jobs)); }},
        {"phi2bar = -2 phi1bar on (e,e), (d,d); phi2bar(e,d) = 0; k,l in [-8,8]",
         [&] { return from_checks(check_scaling(kScalingRange, jobs)); }},
        {"virasoro constraint, k,l in [-6,6]",
         [&] { return from_checks(check_virasoro_constraint(kVirasoroRange, jobs)); }},
        {"binomial identities and double-sum catalogue",
         [&] {
             return from_checks(concat(check_chu_vandermonde(kChuRange, kChuMaxN, jobs),
                                       check_upper_negation(kNegationRange, kNegationMaxK, jobs),
                                       check_sum_catalogue(kCatalogueRange, jobs)));
         }},
        {"ring-level properties, fixed seed", ring_properties},
        {"non-coboundary witnesses on [-6,6] re-verify by substitution", [&] { return noncoboundary(jobs); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o = criteria[i].run();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].title << " (" << ms.count()
                  << " ms) -- " << o.detail << std::endl;
        failures += o.pass ? 0 : 1;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
