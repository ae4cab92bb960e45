#include "witt3/derivations.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace witt3 {

namespace {

void accumulate(BasisMap& m, const BasisR& b, const BigRational& c) {
    if (c == 0) return;
    auto [it, inserted] = m.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

void append_signed_term(std::string& out, const BigRational& c, const std::string& label) {
    BigRational mag = c;
    if (out.empty()) {
        if (c != 1) out += to_string(c) + "*";
    } else {
        out += (c < 0) ? " - " : " + ";
        mag = abs(c);
        if (mag != 1) out += to_string(mag) + "*";
    }
    out += label;
}

}  // namespace

DerR basis_element(const BasisR& b) {
    return {b.kind == BasisKind::d ? RElement::u_times_t_power(b.index) : RElement::t_power(b.index)};
}

DerR bracket_r(const DerR& x, const DerR& y) {
    return {r_mul(x.g, r_apply_D(y.g)) - r_mul(y.g, r_apply_D(x.g))};
}

DerS bracket_s(const DerS& x, const DerS& y) {
    return {s_mul(x.h, s_derivative(y.h)) - s_mul(y.h, s_derivative(x.h))};
}

BasisMap r_to_basis(const DerR& x) {
    BasisMap m;
    for (const auto& [n, c] : x.g.a.terms()) m.emplace(e_basis(n), c);
    for (const auto& [n, c] : x.g.b.terms()) m.emplace(d_basis(n), c);
    return m;
}

DerR r_from_basis(const BasisMap& coords) {
    DerR x;
    for (const auto& [b, c] : coords) {
        if (b.kind == BasisKind::e) {
            x.g.a.add_term(b.index, c);
        } else {
            x.g.b.add_term(b.index, c);
        }
    }
    return x;
}

BasisMap bracket_closed_form(const BasisR& x, const BasisR& y) {
    BasisMap r;
    const Index m = x.index;
    const Index n = y.index;
    if (x.kind == BasisKind::d && y.kind == BasisKind::d) {
        accumulate(r, d_basis(m + n + 1), big(n - m));
        accumulate(r, d_basis(m + n), big(4 * (n - m)));
    } else if (x.kind == BasisKind::e && y.kind == BasisKind::e) {
        accumulate(r, d_basis(m + n - 1), big(n - m));
    } else if (x.kind == BasisKind::d) {
        accumulate(r, e_basis(m + n + 1), big(n - m - 1));
        accumulate(r, e_basis(m + n), big(4 * n - 4 * m - 2));
    } else {
        for (const auto& [b, c] : bracket_closed_form(y, x)) accumulate(r, b, -c);
    }
    return r;
}

std::string format_basis(const BasisR& b) {
    return std::string(b.kind == BasisKind::d ? "d:" : "e:") + std::to_string(b.index);
}

BasisR parse_basis(std::string_view token) {
    auto fail = [&] { return std::invalid_argument("invalid basis token '" + std::string(token) + "'"); };
    if (token.size() < 3 || token[1] != ':' || (token[0] != 'd' && token[0] != 'e')) throw fail();
    auto digits = token.substr(2);
    Index n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) throw fail();
    return {token[0] == 'd' ? BasisKind::d : BasisKind::e, n};
}

std::string render_basis_map(const BasisMap& coords) {
    if (coords.empty()) return "0";
    std::string out;
    // map order is (kind, index) ascending with d < e; walk each kind backwards
    std::vector<std::pair<BasisR, BigRational>> ds, es;
    for (const auto& entry : coords) (entry.first.kind == BasisKind::d ? ds : es).push_back(entry);
    for (auto* group : {&ds, &es}) {
        for (auto it = group->rbegin(); it != group->rend(); ++it) {
            append_signed_term(out, it->second, format_basis(it->first));
        }
    }
    return out;
}

DerS s_basis_element(const SBasis& b) {
    return {b.kind == SBasisKind::power ? SElement::monomial(b.index) : SElement::pole(b.index)};
}

SBasisMap s_to_basis(const DerS& x) {
    SBasisMap m;
    for (const auto& [n, c] : x.h.laurent().terms()) m.emplace(SBasis{SBasisKind::power, n}, c);
    for (const auto& [l, c] : x.h.poles()) m.emplace(SBasis{SBasisKind::pole, l}, c);
    return m;
}

std::string format_s_basis(const SBasis& b) {
    return std::string(b.kind == SBasisKind::power ? "s:" : "p:") + std::to_string(b.index);
}

}  // namespace witt3
