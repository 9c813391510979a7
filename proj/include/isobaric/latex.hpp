#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "isobaric/polynomial.hpp"

namespace isobaric {

namespace detail {

// Display order: ascending by partition, i.e. colexicographic on the exponent
// vector. This is the order the polynomials are conventionally typeset in
// (t_1^n first, t_n last) and differs from the canonical storage order.
inline bool display_less(const ExponentVector& a, const ExponentVector& b) {
    for (int i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

inline std::string latex_subscript(int j) {
    return j < 10 ? "_" + std::to_string(j) : "_{" + std::to_string(j) + "}";
}

inline std::string latex_monomial(const ExponentVector& alpha) {
    std::string s;
    for (int i = 0; i < alpha.size(); ++i) {
        int e = alpha[i];
        if (e == 0) continue;
        s += "t" + latex_subscript(i + 1);
        if (e > 1) s += e < 10 ? "^" + std::to_string(e) : "^{" + std::to_string(e) + "}";
    }
    return s;
}

inline std::string latex_magnitude(const Rational& c) {
    Rational m = c.is_negative() ? -c : c;
    if (m.is_integer()) return m.num().to_string();
    return "\\frac{" + m.num().to_string() + "}{" + m.den().to_string() + "}";
}

}  // namespace detail

/// Renders the polynomial as LaTeX, e.g. "t_1^4 + 3t_1^2t_2 + t_2^2 + 2t_1t_3 + t_4".
/// Unit coefficients are suppressed and non-integer ones become \frac{p}{q}.
inline std::string to_latex(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::vector<const ExponentVector*> order;
    order.reserve(p.terms().size());
    for (const auto& [alpha, c] : p.terms()) order.push_back(&alpha);
    std::sort(order.begin(), order.end(),
              [](const ExponentVector* a, const ExponentVector* b) {
                  return detail::display_less(*a, *b);
              });
    std::string out;
    bool first = true;
    for (const ExponentVector* alpha : order) {
        const Rational& c = p.coeff(*alpha);
        std::string mono = detail::latex_monomial(*alpha);
        std::string mag = detail::latex_magnitude(c);
        if (first) {
            if (c.is_negative()) out += "-";
            first = false;
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        if (mono.empty())
            out += mag;
        else
            out += (mag == "1" ? "" : mag) + mono;
    }
    return out;
}

}  // namespace isobaric
