#pragma once

#include <stdexcept>
#include <vector>

#include "isobaric/polynomial.hpp"

namespace isobaric {

/// Coefficients of the generalized operator
///
///   D_11 - sum_{j=1}^{k} a_j t_j D_2j - m D_2,
///
/// where D_ij is the second mixed partial d^2/dt_i dt_j and D_2 = d/dt_2.
/// classic(m, k) sets every a_j = 1, recovering the original operator family.
struct OperatorSpec {
    std::vector<Rational> a;
    Rational m;

    static OperatorSpec classic(Rational m, int k) {
        if (k < 2) throw std::invalid_argument("OperatorSpec: need at least two variables");
        return {std::vector<Rational>(k, Rational(1)), std::move(m)};
    }

    int var_count() const noexcept { return static_cast<int>(a.size()); }
};

/// Second mixed partial d^2 p / dt_i dt_j. Inputs of degree below i + j map to
/// the zero polynomial rather than erroring.
inline Polynomial second_partial(const Polynomial& p, int i, int j) {
    if (i < 1 || i > p.var_count() || j < 1 || j > p.var_count())
        throw std::invalid_argument("second_partial: variable index out of range");
    if (p.degree() < i + j) return Polynomial(0, p.var_count());
    return partial_derivative(partial_derivative(p, i), j);
}

/// Applies the generalized operator. Every surviving term drops degree by
/// exactly 2; inputs of degree 0 or 1 are annihilated.
inline Polynomial apply_operator(const OperatorSpec& spec, const Polynomial& p) {
    if (spec.var_count() != p.var_count())
        throw std::invalid_argument("apply_operator: operator and polynomial variable counts differ");
    if (p.var_count() < 2)
        throw std::invalid_argument("apply_operator: the operator needs at least two variables");
    int k = p.var_count();
    Polynomial out(p.degree() >= 2 ? p.degree() - 2 : 0, k);
    out = out + second_partial(p, 1, 1);
    for (int j = 1; j <= k; ++j) {
        if (spec.a[j - 1].is_zero()) continue;
        out = out - spec.a[j - 1] * multiply_by_variable(second_partial(p, 2, j), j);
    }
    if (!spec.m.is_zero()) out = out - spec.m * partial_derivative(p, 2);
    return out;
}

inline bool is_in_kernel(const OperatorSpec& spec, const Polynomial& p) {
    return apply_operator(spec, p).is_zero();
}

}  // namespace isobaric
