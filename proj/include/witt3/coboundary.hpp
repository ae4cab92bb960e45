#pragma once

// Finite certificates that a 2-cocycle is not a coboundary.
//
// A coboundary has the form phi(x, y) = mu([x, y]) for a linear functional
// mu. Restricting to a window of basis elements and to the pairs whose
// bracket stays inside the window gives a linear system in the unknown
// values mu(b). If that system is inconsistent, phi is not a coboundary.
// A consistent window proves nothing.

#include "witt3/cocycles.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace witt3 {

template <class Key>
struct WitnessEquation {
    Key x;
    Key y;
    std::map<Key, BigRational> bracket;  // coordinates of [x, y]
    BigRational value;                   // phi(x, y)
    BigRational multiplier;
};

/// sum_r multiplier_r * bracket_r == 0 while sum_r multiplier_r * value_r != 0.
template <class Key>
struct Witness {
    std::vector<WitnessEquation<Key>> equations;
};

template <class Key>
using BracketCoords = std::function<std::map<Key, BigRational>(const Key&, const Key&)>;
template <class Key>
using BasisForm = std::function<BigRational(const Key&, const Key&)>;

namespace detail {

template <class Key>
struct EliminationRow {
    std::map<Key, BigRational> coeffs;
    BigRational rhs;
    std::map<std::size_t, BigRational> combo;  // equation index -> multiplier

    void axpy(const BigRational& c, const EliminationRow& o) {
        auto add = [&c](auto& into, const auto& from) {
            for (const auto& [k, v] : from) {
                auto [it, inserted] = into.try_emplace(k, c * v);
                if (!inserted) {
                    it->second += c * v;
                    if (it->second == 0) into.erase(it);
                }
            }
        };
        add(coeffs, o.coeffs);
        add(combo, o.combo);
        rhs += c * o.rhs;
    }
};

}  // namespace detail

/// Searches the window for an inconsistent subsystem by exact elimination.
template <class Key>
std::optional<Witness<Key>> find_noncoboundary_witness(const std::vector<Key>& basis,
                                                       const BracketCoords<Key>& bracket,
                                                       const BasisForm<Key>& phi) {
    struct Equation {
        Key x, y;
        std::map<Key, BigRational> br;
        BigRational value;
    };
    const std::map<Key, bool> in_window = [&] {
        std::map<Key, bool> m;
        for (const auto& b : basis) m.emplace(b, true);
        return m;
    }();

    std::vector<Equation> eqs;
    std::map<Key, detail::EliminationRow<Key>> pivots;

    auto certificate = [&](const detail::EliminationRow<Key>& row) {
        Witness<Key> w;
        for (const auto& [idx, mult] : row.combo) {
            const Equation& e = eqs[idx];
            w.equations.push_back({e.x, e.y, e.br, e.value, mult});
        }
        return w;
    };

    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            auto br = bracket(basis[i], basis[j]);
            bool inside = true;
            for (const auto& entry : br) {
                if (!in_window.count(entry.first)) {
                    inside = false;
                    break;
                }
            }
            if (!inside) continue;
            BigRational value = phi(basis[i], basis[j]);
            if (br.empty() && value == 0) continue;

            eqs.push_back({basis[i], basis[j], br, value});
            detail::EliminationRow<Key> row{br, value, {{eqs.size() - 1, BigRational(1)}}};
            while (!row.coeffs.empty()) {
                auto lead = row.coeffs.begin();
                auto piv = pivots.find(lead->first);
                if (piv == pivots.end()) break;
                row.axpy(-lead->second, piv->second);
            }
            if (row.coeffs.empty()) {
                if (row.rhs != 0) return certificate(row);
                continue;
            }
            const BigRational inv = 1 / row.coeffs.begin()->second;
            detail::EliminationRow<Key> normalized;
            normalized.axpy(inv, row);
            pivots.emplace(normalized.coeffs.begin()->first, std::move(normalized));
        }
    }
    return std::nullopt;
}

/// Re-checks a witness by substitution: every recorded bracket and value is
/// recomputed, then the combination must kill the brackets but not the values.
template <class Key>
bool verify_witness(const Witness<Key>& w, const BracketCoords<Key>& bracket, const BasisForm<Key>& phi) {
    if (w.equations.empty()) return false;
    std::map<Key, BigRational> lhs;
    BigRational rhs = 0;
    for (const auto& e : w.equations) {
        auto br = bracket(e.x, e.y);
        if (br != e.bracket) return false;
        BigRational v = phi(e.x, e.y);
        if (v != e.value) return false;
        for (const auto& [k, c] : br) lhs[k] += e.multiplier * c;
        rhs += e.multiplier * v;
    }
    for (const auto& entry : lhs) {
        if (entry.second != 0) return false;
    }
    return rhs != 0;
}

/// Basis of Der(S) inside a window: s^n d for n in [lo, hi] and
/// (s-1)^-l d for l in [max(1, lo), hi].
std::vector<SBasis> s_window(Index lo, Index hi);
/// e_n and d_n for n in [lo, hi].
std::vector<BasisR> r_window(Index lo, Index hi);

BracketCoords<SBasis> s_bracket_coords();
BracketCoords<BasisR> r_bracket_coords();

}  // namespace witt3
