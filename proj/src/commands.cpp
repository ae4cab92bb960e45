#include "witt3/commands.hpp"

#include "witt3/cocycles.hpp"
#include "witt3/expr.hpp"
#include "witt3/isomorphism.hpp"
#include "witt3/verify.hpp"

#include <json.hpp>

#include <sstream>

namespace witt3 {

namespace {

CommandOutput usage_error(const std::string& message) { return {2, "", "error: " + message + "\n"}; }

bool valid_mode(const std::string& mode) { return mode == "closed" || mode == "pullback" || mode == "both"; }

std::optional<CocycleId> bar_id(const std::string& id) {
    if (id == "phi1bar") return CocycleId::phi1;
    if (id == "phi2bar") return CocycleId::phi2;
    return std::nullopt;
}

}  // namespace

CommandOutput cmd_bracket(const std::string& alg, const std::string& x, const std::string& y) {
    try {
        if (alg == "r") {
            DerR b = bracket_r(parse_der_r(x), parse_der_r(y));
            return {0, render_basis_map(r_to_basis(b)) + "\n", ""};
        }
        if (alg == "s") {
            DerS b = bracket_s(parse_der_s(x), parse_der_s(y));
            return {0, b.h.render() + "\n", ""};
        }
        return usage_error("unknown algebra '" + alg + "', expected r or s");
    } catch (const ParseError& e) {
        return usage_error(e.what());
    }
}

CommandOutput cmd_cocycle(const std::string& id, const std::string& x, const std::string& y,
                          const std::string& mode) {
    if (!valid_mode(mode)) return usage_error("unknown mode '" + mode + "', expected closed, pullback or both");
    try {
        if (id == "phi1" || id == "phi2") {
            BigRational v = phi_S(parse_cocycle_id(id), parse_der_s(x), parse_der_s(y));
            return {0, to_string(v) + "\n", ""};
        }
        auto cid = bar_id(id);
        if (!cid) return usage_error("unknown cocycle '" + id + "', expected phi1, phi2, phi1bar or phi2bar");
        DerR a = parse_der_r(x), b = parse_der_r(y);
        if (mode == "closed") return {0, to_string(bar_phi_closed_bilinear(*cid, a, b)) + "\n", ""};
        if (mode == "pullback") return {0, to_string(bar_phi_pullback(*cid, a, b)) + "\n", ""};
        BigRational c = bar_phi_closed_bilinear(*cid, a, b);
        BigRational p = bar_phi_pullback(*cid, a, b);
        bool same = c == p;
        return {same ? 0 : 1, to_string(c) + (same ? " == " : " != ") + to_string(p) + "\n", ""};
    } catch (const ParseError& e) {
        return usage_error(e.what());
    }
}

CommandOutput cmd_verify(const std::string& suite, const Range& range, unsigned jobs, bool timing) {
    if (range.empty()) return usage_error("empty range");
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == suite;
    if (!known) return usage_error("unknown suite '" + suite + "'");
    Report rep = run_suite(suite, range, jobs);
    return {rep.all_pass() ? 0 : 1, rep.to_json(timing).dump(2) + "\n", ""};
}

CommandOutput cmd_table(const std::string& id, const std::string& kind, const Range& range,
                        const std::string& format, const std::string& mode, unsigned jobs) {
    auto cid = bar_id(id);
    if (!cid) return usage_error("unknown table id '" + id + "', expected phi1bar or phi2bar");
    if (kind != "ee" && kind != "ed" && kind != "dd") return usage_error("unknown kind '" + kind + "'");
    if (format != "csv" && format != "json") return usage_error("unknown format '" + format + "'");
    if (!valid_mode(mode)) return usage_error("unknown mode '" + mode + "'");
    if (range.empty()) return usage_error("empty range");

    const BasisKind kx = kind[0] == 'd' ? BasisKind::d : BasisKind::e;
    const BasisKind ky = kind[1] == 'd' ? BasisKind::d : BasisKind::e;
    const auto g = grid(range);
    struct Cell {
        BigRational value;
        bool agree = true;
    };
    auto cells = parallel_indexed<Cell>(g.size(), jobs, [&](std::size_t i) {
        BasisR x{kx, g[i].first}, y{ky, g[i].second};
        if (mode == "closed") return Cell{bar_phi_closed(*cid, x, y)};
        BigRational p = bar_phi_pullback(*cid, basis_element(x), basis_element(y));
        if (mode == "pullback") return Cell{p};
        return Cell{p, p == bar_phi_closed(*cid, x, y)};
    });

    CommandOutput result;
    std::ostringstream err;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (cells[i].agree) continue;
        result.exit_code = 1;
        err << "mismatch at k=" << g[i].first << ", l=" << g[i].second << "\n";
    }
    result.err = err.str();

    if (format == "csv") {
        std::string out = "k,l,value\n";
        for (std::size_t i = 0; i < g.size(); ++i) {
            out += std::to_string(g[i].first) + "," + std::to_string(g[i].second) + "," + to_string(cells[i].value) + "\n";
        }
        result.out = std::move(out);
    } else {
        nlohmann::ordered_json j;
        j["id"] = id;
        j["kind"] = kind;
        j["range"] = {range.lo, range.hi};
        j["rows"] = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < g.size(); ++i) {
            j["rows"].push_back({{"k", g[i].first}, {"l", g[i].second}, {"value", to_string(cells[i].value)}});
        }
        result.out = j.dump(2) + "\n";
    }
    return result;
}

}  // namespace witt3
