#include "witt3/verify.hpp"

#include "witt3/coboundary.hpp"
#include "witt3/cocycles.hpp"
#include "witt3/identity_lab.hpp"
#include "witt3/isomorphism.hpp"

#include <array>
#include <chrono>
#include <cstdlib>
#include <stdexcept>

namespace witt3 {

using json = nlohmann::ordered_json;

namespace {

using MaybeFailure = std::optional<json>;

template <class Fn>
CheckResult sweep_check(std::string name, std::size_t count, unsigned jobs, Fn&& fn) {
    auto results = parallel_indexed<MaybeFailure>(count, jobs, fn);
    CheckResult c;
    c.name = std::move(name);
    std::size_t failures = 0;
    for (auto& r : results) {
        if (!r) continue;
        if (!c.counterexample) c.counterexample = std::move(*r);
        ++failures;
    }
    c.pass = failures == 0;
    c.detail = std::to_string(count) + " cases";
    if (failures) c.detail += ", " + std::to_string(failures) + " failed";
    return c;
}

const char* kind_char(BasisKind k) { return k == BasisKind::d ? "d" : "e"; }

std::string cocycle_name(CocycleId id) { return id == CocycleId::phi1 ? "phi1" : "phi2"; }

constexpr std::array<std::pair<BasisKind, BasisKind>, 4> kind_pairs{{
    {BasisKind::e, BasisKind::e},
    {BasisKind::e, BasisKind::d},
    {BasisKind::d, BasisKind::e},
    {BasisKind::d, BasisKind::d},
}};

std::string pair_label(BasisKind a, BasisKind b) { return std::string("(") + kind_char(a) + "," + kind_char(b) + ")"; }

json basis_map_json(const BasisMap& m) { return render_basis_map(m); }

// Der(S) basis used for cocycle-identity sweeps: s^n d and (s-1)^n d.
enum class SSweepKind { power, shifted };

DerS s_sweep_element(SSweepKind kind, Index n) {
    return {kind == SSweepKind::power ? SElement::monomial(n) : SElement::shifted_power(n)};
}

std::string s_sweep_label(SSweepKind kind, Index n) {
    return (kind == SSweepKind::power ? "s^" : "(s-1)^") + std::to_string(n);
}

Index abs_max(const Range& r) { return std::max(std::abs(r.lo), std::abs(r.hi)); }

}  // namespace

bool Report::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

json Report::to_json(bool include_timing) const {
    json j;
    j["suite"] = suite;
    j["range"] = json::array({range.lo, range.hi});
    j["checks"] = json::array();
    for (const auto& c : checks) {
        json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (c.counterexample) cj["counterexample"] = *c.counterexample;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        j["checks"].push_back(std::move(cj));
    }
    j["duration_ms"] = include_timing ? duration_ms : 0;
    return j;
}

std::vector<CheckResult> check_closed_vs_pullback(const Range& r, unsigned jobs) {
    std::vector<CheckResult> out;
    const auto g = grid(r);
    for (CocycleId id : {CocycleId::phi1, CocycleId::phi2}) {
        for (auto [kx, ky] : kind_pairs) {
            std::string name = cocycle_name(id) + "bar" + pair_label(kx, ky) + " closed = pullback";
            out.push_back(sweep_check(name, g.size(), jobs, [&, kx = kx, ky = ky](std::size_t i) -> MaybeFailure {
                auto [k, l] = g[i];
                BasisR x{kx, k}, y{ky, l};
                BigRational closed = bar_phi_closed(id, x, y);
                BigRational pulled = bar_phi_pullback(id, basis_element(x), basis_element(y));
                if (closed == pulled) return std::nullopt;
                return json{{"x", format_basis(x)}, {"y", format_basis(y)},
                            {"closed", to_string(closed)}, {"pullback", to_string(pulled)}};
            }));
        }
    }
    return out;
}

std::vector<CheckResult> check_theorem(const Range& r, unsigned jobs) {
    auto out = check_closed_vs_pullback(r, jobs);
    auto scaling = check_scaling(r, jobs);
    out.insert(out.end(), scaling.begin(), scaling.end());
    return out;
}

std::vector<CheckResult> check_scaling(const Range& r, unsigned jobs) {
    std::vector<CheckResult> out;
    const auto g = grid(r);
    for (auto kind : {BasisKind::e, BasisKind::d}) {
        std::string name = std::string("phi2bar = -2 phi1bar on (") + kind_char(kind) + "," + kind_char(kind) + ")";
        out.push_back(sweep_check(name, g.size(), jobs, [&](std::size_t i) -> MaybeFailure {
            auto [k, l] = g[i];
            DerR x = basis_element({kind, k}), y = basis_element({kind, l});
            BigRational v1 = bar_phi_pullback(CocycleId::phi1, x, y);
            BigRational v2 = bar_phi_pullback(CocycleId::phi2, x, y);
            if (v2 == -2 * v1) return std::nullopt;
            return json{{"k", k}, {"l", l}, {"phi1bar", to_string(v1)}, {"phi2bar", to_string(v2)}};
        }));
    }
    out.push_back(sweep_check("phi2bar(e,d) = 0", g.size(), jobs, [&](std::size_t i) -> MaybeFailure {
        auto [k, l] = g[i];
        BigRational v = bar_phi_pullback(CocycleId::phi2, basis_element(e_basis(k)), basis_element(d_basis(l)));
        if (v == 0) return std::nullopt;
        return json{{"k", k}, {"l", l}, {"phi2bar", to_string(v)}};
    }));
    return out;
}

std::vector<CheckResult> check_brackets(const Range& r, unsigned jobs) {
    std::vector<CheckResult> out;
    const auto g = grid(r);
    for (auto [kx, ky] : kind_pairs) {
        std::string name = std::string("[") + kind_char(kx) + "_m," + kind_char(ky) + "_n] relation";
        out.push_back(sweep_check(name, g.size(), jobs, [&, kx = kx, ky = ky](std::size_t i) -> MaybeFailure {
            auto [m, n] = g[i];
            BasisR x{kx, m}, y{ky, n};
            BasisMap direct = r_to_basis(bracket_r(basis_element(x), basis_element(y)));
            BasisMap closed = bracket_closed_form(x, y);
            if (direct == closed) return std::nullopt;
            return json{{"x", format_basis(x)}, {"y", format_basis(y)},
                        {"direct", basis_map_json(direct)}, {"closed", basis_map_json(closed)}};
        }));
    }
    return out;
}

std::vector<CheckResult> check_push_closed(const Range& r, unsigned jobs) {
    std::vector<CheckResult> out;
    const auto count = static_cast<std::size_t>(r.size());
    for (auto kind : {BasisKind::e, BasisKind::d}) {
        std::string name = std::string("push(") + kind_char(kind) + "_k) = closed expansion";
        out.push_back(sweep_check(name, count, jobs, [&](std::size_t i) -> MaybeFailure {
            BasisR b{kind, r.lo + static_cast<Index>(i)};
            DerS generic = push(basis_element(b));
            DerS closed = push_basis_closed(b);
            if (generic == closed) return std::nullopt;
            return json{{"x", format_basis(b)}, {"push", generic.h.render()}, {"closed", closed.h.render()}};
        }));
    }
    out.push_back(sweep_check("push(e_k) = descending-exponent expansion (k >= 0)", count, jobs,
                              [&](std::size_t i) -> MaybeFailure {
                                  Index k = r.lo + static_cast<Index>(i);
                                  if (k < 0) return std::nullopt;
                                  DerS a = push(basis_element(e_basis(k)));
                                  DerS b = push_e_descending_form(k);
                                  if (a == b) return std::nullopt;
                                  return json{{"k", k}, {"push", a.h.render()}, {"descending", b.h.render()}};
                              }));
    return out;
}

std::vector<CheckResult> check_lie_homomorphism(const Range& r, unsigned jobs) {
    std::vector<CheckResult> out;
    const auto g = grid(r);
    for (auto [kx, ky] : kind_pairs) {
        std::string name = "push[x,y] = [push x, push y] on " + pair_label(kx, ky);
        out.push_back(sweep_check(name, g.size(), jobs, [&, kx = kx, ky = ky](std::size_t i) -> MaybeFailure {
            auto [m, n] = g[i];
            DerR x = basis_element({kx, m}), y = basis_element({ky, n});
            DerS lhs = push(bracket_r(x, y));
            DerS rhs = bracket_s(push(x), push(y));
            if (lhs == rhs) return std::nullopt;
            return json{{"x", format_basis({kx, m})}, {"y", format_basis({ky, n})},
                        {"lhs", lhs.h.render()}, {"rhs", rhs.h.render()}};
        }));
    }
    return out;
}

std::vector<CheckResult> check_pushforward(const Range& r, unsigned jobs) {
    auto out = check_push_closed(r, jobs);
    auto hom = check_lie_homomorphism(r, jobs);
    out.insert(out.end(), hom.begin(), hom.end());
    return out;
}

std::vector<CheckResult> check_virasoro_constraint(const Range& r, unsigned jobs) {
    std::vector<CheckResult> out;
    const auto g = grid(r);
    for (CocycleId id : {CocycleId::phi1, CocycleId::phi2}) {
        std::string name = cocycle_name(id) + " virasoro constraint";
        out.push_back(sweep_check(name, g.size(), jobs, [&](std::size_t i) -> MaybeFailure {
            auto [k, l] = g[i];
            auto around_anchor = [&](Index e) {
                return DerS{anchor(id) == 0 ? SElement::monomial(e) : SElement::shifted_power(e)};
            };
            BigRational v = phi_S(id, around_anchor(k + 1), around_anchor(-l + 1));
            BigRational expected = k == l ? BigRational(big(l) * big(l) * big(l) - big(l)) : BigRational(0);
            if (v == expected) return std::nullopt;
            return json{{"k", k}, {"l", l}, {"value", to_string(v)}, {"expected", to_string(expected)}};
        }));
    }
    return out;
}

std::vector<CheckResult> check_cocycle_axioms(const Range& r, unsigned jobs) {
    std::vector<CheckResult> out;
    const Index n = r.size();
    const auto triples = static_cast<std::size_t>(n * n * n);
    auto split = [&](std::size_t idx) {
        std::array<Index, 4> v{};  // kind bits, i, j, k
        v[3] = r.lo + static_cast<Index>(idx % n);
        idx /= n;
        v[2] = r.lo + static_cast<Index>(idx % n);
        idx /= n;
        v[1] = r.lo + static_cast<Index>(idx % n);
        idx /= n;
        v[0] = static_cast<Index>(idx);
        return v;
    };

    for (CocycleId id : {CocycleId::phi1, CocycleId::phi2}) {
        auto form = [id](const DerS& a, const DerS& b) { return phi_S(id, a, b); };
        out.push_back(sweep_check(cocycle_name(id) + " cocycle axioms on Der(S)", 8 * triples, jobs,
                                  [&, form](std::size_t idx) -> MaybeFailure {
                                      auto v = split(idx);
                                      std::array<SSweepKind, 3> kinds;
                                      for (int b = 0; b < 3; ++b) {
                                          kinds[b] = (v[0] >> b) & 1 ? SSweepKind::shifted : SSweepKind::power;
                                      }
                                      DerS x = s_sweep_element(kinds[0], v[1]);
                                      DerS y = s_sweep_element(kinds[1], v[2]);
                                      DerS z = s_sweep_element(kinds[2], v[3]);
                                      Residuals res = cocycle_residuals(form, bracket_s, x, y, z);
                                      if (res.vanish()) return std::nullopt;
                                      return json{{"x", s_sweep_label(kinds[0], v[1])},
                                                  {"y", s_sweep_label(kinds[1], v[2])},
                                                  {"z", s_sweep_label(kinds[2], v[3])},
                                                  {"skew", to_string(res.skew)},
                                                  {"cocycle", to_string(res.cocycle)}};
                                  }));
    }

    for (CocycleId id : {CocycleId::phi1, CocycleId::phi2}) {
        for (bool closed : {false, true}) {
            auto form = [id, closed](const DerR& a, const DerR& b) {
                return closed ? bar_phi_closed_bilinear(id, a, b) : bar_phi_pullback(id, a, b);
            };
            std::string name = cocycle_name(id) + "bar (" + (closed ? "closed" : "pullback") + ") cocycle axioms on Der(R)";
            out.push_back(sweep_check(name, 8 * triples, jobs, [&, form](std::size_t idx) -> MaybeFailure {
                auto v = split(idx);
                std::array<BasisR, 3> b;
                for (int i = 0; i < 3; ++i) {
                    b[i] = {(v[0] >> i) & 1 ? BasisKind::d : BasisKind::e, v[i + 1]};
                }
                Residuals res = cocycle_residuals(form, bracket_r, basis_element(b[0]), basis_element(b[1]),
                                                  basis_element(b[2]));
                if (res.vanish()) return std::nullopt;
                return json{{"x", format_basis(b[0])}, {"y", format_basis(b[1])}, {"z", format_basis(b[2])},
                            {"skew", to_string(res.skew)}, {"cocycle", to_string(res.cocycle)}};
            }));
        }
    }

    return out;
}

std::vector<CheckResult> check_cocycle_identity(const Range& r, unsigned jobs) {
    auto out = check_cocycle_axioms(r, jobs);
    auto vir = check_virasoro_constraint(r, jobs);
    out.insert(out.end(), vir.begin(), vir.end());
    return out;
}

std::vector<CheckResult> check_chu_vandermonde(const Range& st, Index n_max, unsigned jobs) {
    const Index side = st.size();
    const std::size_t count = static_cast<std::size_t>(side * side * (n_max + 1));
    return {sweep_check("chu-vandermonde", count, jobs, [&](std::size_t idx) -> MaybeFailure {
        Index n = static_cast<Index>(idx % (n_max + 1));
        idx /= (n_max + 1);
        Index t = st.lo + static_cast<Index>(idx % side);
        Index s = st.lo + static_cast<Index>(idx / side);
        IdentityPair p = chu_vandermonde(s, t, n);
        if (p.holds()) return std::nullopt;
        return json{{"s", s}, {"t", t}, {"n", n}, {"lhs", to_string(p.lhs)}, {"rhs", to_string(p.rhs)}};
    })};
}

std::vector<CheckResult> check_upper_negation(const Range& n_range, Index k_max, unsigned jobs) {
    const std::size_t count = static_cast<std::size_t>(n_range.size() * (k_max + 1));
    return {sweep_check("upper negation", count, jobs, [&](std::size_t idx) -> MaybeFailure {
        Index k = static_cast<Index>(idx % (k_max + 1));
        Index n = n_range.lo + static_cast<Index>(idx / (k_max + 1));
        IdentityPair p = upper_negation(n, k);
        if (p.holds()) return std::nullopt;
        return json{{"n", n}, {"k", k}, {"lhs", to_string(p.lhs)}, {"rhs", to_string(p.rhs)}};
    })};
}

std::vector<CheckResult> check_sum_catalogue(const Range& r, unsigned jobs) {
    std::vector<CheckResult> out;
    const auto g = grid(r);
    for (const SumFamily& fam : sum_catalogue()) {
        std::string name = fam.id + (fam.known_erratum() ? " (pinned erratum)" : "");
        // For an erratum entry, a case "fails" when agreement does not match
        // the recorded locus: it must disagree exactly there and agree elsewhere.
        CheckResult c = sweep_check(name, g.size(), jobs, [&](std::size_t i) -> MaybeFailure {
            auto [k, l] = g[i];
            if (!fam.in_region(k, l)) return std::nullopt;
            IdentityPair p = sum_family_check(fam, k, l);
            bool expect_hold = !(fam.known_erratum() && fam.erratum_locus(k, l));
            if (p.holds() == expect_hold) return std::nullopt;
            return json{{"k", k}, {"l", l}, {"sum", to_string(p.lhs)}, {"closed", to_string(p.rhs)}};
        });
        std::size_t in_region = 0;
        for (auto [k, l] : g) in_region += fam.in_region(k, l) ? 1 : 0;
        c.detail = fam.location + "; " + std::to_string(in_region) + " points in " + fam.region_text +
                   (c.pass ? "" : "; " + c.detail);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CheckResult> check_identities(const Range& r, unsigned jobs) {
    const Index m = abs_max(r);
    auto out = check_chu_vandermonde(r, m, jobs);
    auto neg = check_upper_negation(r, m, jobs);
    out.insert(out.end(), neg.begin(), neg.end());

    const auto g = grid(r);
    // With extended binomials the recurrence holds everywhere except n = k = 0.
    out.push_back(sweep_check("pascal recurrence, (n,k) != (0,0)", g.size(), jobs, [&](std::size_t i) -> MaybeFailure {
        auto [n, k] = g[i];
        if (n == 0 && k == 0) return std::nullopt;
        if (binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)) return std::nullopt;
        return json{{"n", n}, {"k", k}};
    }));

    auto fams = check_sum_catalogue(r, jobs);
    out.insert(out.end(), fams.begin(), fams.end());
    return out;
}

std::vector<CheckResult> check_noncoboundary(const Range& r, unsigned jobs) {
    // Four independent searches; run them as a 4-element parallel map.
    auto results = parallel_indexed<CheckResult>(4, jobs, [&](std::size_t which) {
        CocycleId id = which % 2 == 0 ? CocycleId::phi1 : CocycleId::phi2;
        CheckResult c;
        if (which < 2) {
            c.name = cocycle_name(id) + " non-coboundary on Der(S)";
            BasisForm<SBasis> form = [id](const SBasis& a, const SBasis& b) { return phi_S_basis(id, a, b); };
            auto w = find_noncoboundary_witness(s_window(r.lo, r.hi), s_bracket_coords(), form);
            if (!w) {
                c.detail = "inconclusive";
                return c;
            }
            c.pass = verify_witness(*w, s_bracket_coords(), form);
            c.detail = "witness with " + std::to_string(w->equations.size()) + " equations" +
                       (c.pass ? ", re-verified" : ", RE-VERIFICATION FAILED");
            json eqs = json::array();
            for (const auto& e : w->equations) {
                eqs.push_back({format_s_basis(e.x), format_s_basis(e.y), to_string(e.value), to_string(e.multiplier)});
            }
            if (!c.pass) c.counterexample = eqs;
            return c;
        }
        c.name = cocycle_name(id) + "bar non-coboundary on Der(R)";
        BasisForm<BasisR> search_form = [id](const BasisR& a, const BasisR& b) {
            return bar_phi_pullback(id, basis_element(a), basis_element(b));
        };
        BasisForm<BasisR> check_form = [id](const BasisR& a, const BasisR& b) { return bar_phi_closed(id, a, b); };
        auto w = find_noncoboundary_witness(r_window(r.lo, r.hi), r_bracket_coords(), search_form);
        if (!w) {
            c.detail = "inconclusive";
            return c;
        }
        c.pass = verify_witness(*w, r_bracket_coords(), check_form);
        c.detail = "witness with " + std::to_string(w->equations.size()) + " equations" +
                   (c.pass ? ", re-verified" : ", RE-VERIFICATION FAILED");
        if (!c.pass) {
            json eqs = json::array();
            for (const auto& e : w->equations) {
                eqs.push_back({format_basis(e.x), format_basis(e.y), to_string(e.value), to_string(e.multiplier)});
            }
            c.counterexample = eqs;
        }
        return c;
    });
    return results;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"theorem",          "brackets",   "pushforward",
                                                "cocycle-identity", "identities", "noncoboundary"};
    return names;
}

Report run_suite(std::string_view suite, const Range& range, unsigned jobs) {
    if (range.empty()) throw std::invalid_argument("empty range");
    const auto start = std::chrono::steady_clock::now();
    Report rep;
    rep.suite = std::string(suite);
    rep.range = range;
    if (suite == "theorem") {
        rep.checks = check_theorem(range, jobs);
    } else if (suite == "brackets") {
        rep.checks = check_brackets(range, jobs);
    } else if (suite == "pushforward") {
        rep.checks = check_pushforward(range, jobs);
    } else if (suite == "cocycle-identity") {
        rep.checks = check_cocycle_identity(range, jobs);
    } else if (suite == "identities") {
        rep.checks = check_identities(range, jobs);
    } else if (suite == "noncoboundary") {
        rep.checks = check_noncoboundary(range, jobs);
    } else {
        throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    }
    rep.duration_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace witt3
