#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "isobaric/operators.hpp"
#include "isobaric/polynomial.hpp"

namespace isobaric {

/// A string of exponent vectors: starting from a generator (p, g2, tail) with
/// p in {0, 1}, the elements are (p + 2j, g2 - j, tail) for j = 0..g2. All
/// elements share the isobaric degree and the tail (alpha_3, ..., alpha_k);
/// consecutive elements differ by (+2, -1, 0, ..., 0). Strings with p = 0 are
/// even, with p = 1 odd.
struct StringFamily {
    ExponentVector generator;
    std::vector<ExponentVector> elements;

    bool is_even() const { return generator[0] == 0; }
    int degree() const { return generator.degree(); }
    int var_count() const { return generator.size(); }
};

/// The generator of the string containing alpha: with p = alpha_1 mod 2 and
/// j = (alpha_1 - p)/2, the generator is (p, alpha_2 + j, alpha_3, ...).
/// Idempotent on generators.
inline ExponentVector generator_of(const ExponentVector& alpha) {
    if (alpha.is_zero())
        throw std::invalid_argument("generator_of: undefined for the zero exponent vector");
    if (alpha.size() < 2)
        throw std::invalid_argument("generator_of: strings need at least two variables");
    std::vector<int> g = alpha.entries();
    int p = g[0] % 2;
    int j = (g[0] - p) / 2;
    g[0] = p;
    g[1] += j;
    return ExponentVector(std::move(g));
}

/// Expands a generator (first entry 0 or 1) into its full string.
inline StringFamily expand_string(const ExponentVector& generator) {
    if (generator.size() < 2)
        throw std::invalid_argument("expand_string: strings need at least two variables");
    if (generator[0] > 1)
        throw std::invalid_argument("expand_string: generator's first entry must be 0 or 1");
    StringFamily fam{generator, {}};
    int g2 = generator[1];
    fam.elements.reserve(g2 + 1);
    std::vector<int> e = generator.entries();
    for (int j = 0; j <= g2; ++j) {
        fam.elements.push_back(ExponentVector(e));
        e[0] += 2;
        e[1] -= 1;
    }
    return fam;
}

/// A string with a remembered coefficient per element (zeros included), in
/// element order.
struct WeightedString {
    StringFamily family;
    std::vector<Rational> coeffs;

    /// The polynomial carried by the string.
    Polynomial to_polynomial() const {
        Polynomial::TermMap t;
        for (std::size_t i = 0; i < family.elements.size(); ++i)
            if (!coeffs[i].is_zero()) t.emplace(family.elements[i], coeffs[i]);
        return Polynomial(family.degree(), family.var_count(), std::move(t));
    }
};

/// Splits p into its weighted strings. Every term of p lands in exactly one
/// string; elements of a family missing from p keep coefficient 0; families
/// whose coefficients are all zero do not appear. Families are listed by
/// generator in canonical term order and reassembling them recovers p.
inline std::vector<WeightedString> decompose(const Polynomial& p) {
    if (p.var_count() < 2)
        throw std::invalid_argument("decompose: strings need at least two variables");
    std::map<ExponentVector, bool, TermOrder> generators;
    for (const auto& [alpha, c] : p.terms())
        generators.emplace(alpha.is_zero() ? alpha : generator_of(alpha), true);
    std::vector<WeightedString> out;
    out.reserve(generators.size());
    for (const auto& [gen, unused] : generators) {
        WeightedString ws{expand_string(gen), {}};
        ws.coeffs.reserve(ws.family.elements.size());
        for (const auto& e : ws.family.elements) ws.coeffs.push_back(p.coeff(e));
        out.push_back(std::move(ws));
    }
    return out;
}

/// Exact pairwise cancellation test from the string mechanism: the weighted
/// string lies in the operator's kernel iff for every adjacent pair
/// (e_j, e_{j+1})
///
///   c_{j+1} (p+2j+2)(p+2j+1) = c_j (g2 - j) (sum_l a_l e_j[l] - a_2 + m).
///
/// D_11 kills the generator (first entry 0 or 1) and the non-D_11 part kills
/// the terminal element (second entry 0), so only the interior pairs matter.
/// This route never applies the operator itself.
inline bool domino_check(const StringFamily& fam,
                         const std::map<ExponentVector, Rational, TermOrder>& coeffs,
                         const OperatorSpec& spec) {
    if (spec.var_count() != fam.var_count())
        throw std::invalid_argument("domino_check: operator and string variable counts differ");
    auto coeff_of = [&](const ExponentVector& e) -> const Rational& {
        auto it = coeffs.find(e);
        if (it == coeffs.end())
            throw std::invalid_argument("domino_check: missing coefficient for " + e.to_string());
        return it->second;
    };
    int p = fam.generator[0];
    int g2 = fam.generator[1];
    for (int j = 0; j < g2; ++j) {
        const ExponentVector& ej = fam.elements[j];
        const Rational& cj = coeff_of(ej);
        const Rational& cj1 = coeff_of(fam.elements[j + 1]);
        Rational lhs = cj1 * Rational(static_cast<long long>(p + 2 * j + 2) * (p + 2 * j + 1));
        Rational factor = spec.m - spec.a[1];
        for (int l = 0; l < fam.var_count(); ++l)
            if (ej[l] != 0) factor += spec.a[l] * Rational(ej[l]);
        Rational rhs = cj * Rational(g2 - j) * factor;
        if (lhs != rhs) return false;
    }
    return true;
}

inline bool domino_check(const WeightedString& ws, const OperatorSpec& spec) {
    std::map<ExponentVector, Rational, TermOrder> coeffs;
    for (std::size_t i = 0; i < ws.family.elements.size(); ++i)
        coeffs.emplace(ws.family.elements[i], ws.coeffs[i]);
    return domino_check(ws.family, coeffs, spec);
}

/// Checks the biconditional "p is in the kernel iff all of its strings are",
/// with string membership decided by direct operator application.
inline bool verify_string_theorem(const Polynomial& p, const OperatorSpec& spec) {
    bool whole = is_in_kernel(spec, p);
    bool parts = true;
    for (const auto& ws : decompose(p))
        if (!is_in_kernel(spec, ws.to_polynomial())) {
            parts = false;
            break;
        }
    return whole == parts;
}

}  // namespace isobaric
