#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "isobaric/polynomial.hpp"

namespace isobaric {

/// Finite prefix (omega_1, ..., omega_N) of a weight vector. Indexing is
/// 1-based and strictly bounds-checked: reading past the stored length is an
/// error, never an implicit zero.
class WeightVector {
public:
    explicit WeightVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

    static WeightVector unit(int length) {
        return WeightVector(std::vector<Rational>(check_len(length), Rational(1)));
    }

    static WeightVector natural(int length) {
        std::vector<Rational> e;
        e.reserve(check_len(length));
        for (int j = 1; j <= length; ++j) e.emplace_back(j);
        return WeightVector(std::move(e));
    }

    /// Hook weight for the hook diagram (n-r, 1^r): r leading zeros, then
    /// (-1)^r repeated.
    static WeightVector hook(int r, int length) {
        if (r < 0) throw std::invalid_argument("WeightVector::hook: r must be >= 0");
        std::vector<Rational> e(check_len(length), Rational(0));
        Rational v(r % 2 == 0 ? 1 : -1);
        for (int j = r; j < length; ++j) e[j] = v;
        return WeightVector(std::move(e));
    }

    static WeightVector basis(int j, int length) {
        if (j < 1 || j > length) throw std::invalid_argument("WeightVector::basis: bad index");
        std::vector<Rational> e(length, Rational(0));
        e[j - 1] = Rational(1);
        return WeightVector(std::move(e));
    }

    int length() const noexcept { return static_cast<int>(entries_.size()); }
    const std::vector<Rational>& entries() const noexcept { return entries_; }

    const Rational& at(int j) const {
        if (j < 1 || j > length())
            throw std::out_of_range("WeightVector: index " + std::to_string(j) +
                                    " beyond stored length " + std::to_string(length()));
        return entries_[j - 1];
    }

    friend WeightVector operator+(const WeightVector& a, const WeightVector& b) {
        std::vector<Rational> e(std::max(a.length(), b.length()), Rational(0));
        for (int i = 0; i < a.length(); ++i) e[i] += a.entries_[i];
        for (int i = 0; i < b.length(); ++i) e[i] += b.entries_[i];
        return WeightVector(std::move(e));
    }

    friend WeightVector operator*(const Rational& c, const WeightVector& w) {
        std::vector<Rational> e;
        e.reserve(w.length());
        for (const auto& x : w.entries_) e.push_back(c * x);
        return WeightVector(std::move(e));
    }

    friend bool operator==(const WeightVector& a, const WeightVector& b) noexcept {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const WeightVector& a, const WeightVector& b) noexcept {
        return !(a == b);
    }

private:
    std::vector<Rational> entries_;

    static int check_len(int length) {
        if (length < 0) throw std::invalid_argument("WeightVector: negative length");
        return length;
    }
};

/// A weight vector together with its construction tag, for serialization.
struct NamedWeight {
    enum class Tag { unit, natural, hook, custom };

    Tag tag = Tag::custom;
    int hook_r = 0;
    WeightVector weights{std::vector<Rational>{}};

    static NamedWeight unit(int length) { return {Tag::unit, 0, WeightVector::unit(length)}; }
    static NamedWeight natural(int length) {
        return {Tag::natural, 0, WeightVector::natural(length)};
    }
    static NamedWeight hook(int r, int length) {
        return {Tag::hook, r, WeightVector::hook(r, length)};
    }
    static NamedWeight custom(WeightVector w) { return {Tag::custom, 0, std::move(w)}; }
};

/// Multinomial coefficient (sum alpha_i)! / prod(alpha_i!).
inline BigInt multinomial(const ExponentVector& alpha) {
    BigInt r = factorial(alpha.depth());
    for (int i = 0; i < alpha.size(); ++i)
        if (alpha[i] > 1) r = r / factorial(alpha[i]);
    return r;
}

/// Coefficient attached to the monomial t^alpha by the weight vector omega:
///
///   A_alpha = multinomial(alpha) * (sum_j alpha_j omega_j) / (sum_j alpha_j)
///
/// Only the weights of variables actually present in alpha are read, so omega
/// needs to cover indices up to the largest j with alpha_j > 0.
inline Rational weight_coefficient(const ExponentVector& alpha, const WeightVector& omega) {
    int depth = alpha.depth();
    if (depth == 0)
        throw std::invalid_argument("weight_coefficient: undefined for the constant monomial");
    Rational linear(0);
    for (int i = 0; i < alpha.size(); ++i)
        if (alpha[i] != 0) linear += Rational(alpha[i]) * omega.at(i + 1);
    return Rational(multinomial(alpha)) * linear / Rational(depth);
}

/// Weighted isobaric polynomial of degree n in k variables.
inline Polynomial wip(int n, int k, const WeightVector& omega) {
    if (n < 1) throw std::invalid_argument("wip: degree must be >= 1");
    if (k < 1) throw std::invalid_argument("wip: k must be >= 1");
    if (omega.length() < std::min(n, k))
        throw std::invalid_argument("wip: weight vector must cover indices 1.." +
                                    std::to_string(std::min(n, k)));
    Polynomial::TermMap t;
    for (const auto& alpha : enumerate_partitions(n, k)) {
        Rational c = weight_coefficient(alpha, omega);
        if (!c.is_zero()) t.emplace(alpha, std::move(c));
    }
    return Polynomial(n, k, std::move(t));
}

/// Generalized Fibonacci polynomial F_n: the unit-weight sequence.
inline Polynomial fibonacci_poly(int n, int k) {
    return wip(n, k, WeightVector::unit(std::min(n, k)));
}

/// Generalized Lucas polynomial G_n: the natural-weight sequence.
inline Polynomial lucas_poly(int n, int k) {
    return wip(n, k, WeightVector::natural(std::min(n, k)));
}

/// Reflect of the hook Schur polynomial of shape (n-r, 1^r); hook_reflect(n, 0, k)
/// is the Fibonacci polynomial.
inline Polynomial hook_reflect(int n, int r, int k) {
    if (r < 0 || r >= n)
        throw std::invalid_argument("hook_reflect: r must satisfy 0 <= r < n");
    return wip(n, k, WeightVector::hook(r, std::min(n, k)));
}

/// Independent oracle for the F-sequence: builds F_n from the linear
/// recurrence F_n = sum_{j=1}^{min(n,k)} t_j F_{n-j} with F_0 = 1, using only
/// polynomial addition and multiplication by variables.
inline Polynomial fibonacci_by_recurrence(int n, int k) {
    if (n < 0) throw std::invalid_argument("fibonacci_by_recurrence: degree must be >= 0");
    if (k < 1) throw std::invalid_argument("fibonacci_by_recurrence: k must be >= 1");
    std::vector<Polynomial> f;
    f.reserve(n + 1);
    f.push_back(Polynomial::constant(Rational(1), k));
    for (int m = 1; m <= n; ++m) {
        Polynomial acc(m, k);
        for (int j = 1; j <= std::min(m, k); ++j)
            acc = acc + multiply_by_variable(f[m - j], j);
        f.push_back(std::move(acc));
    }
    return f[n];
}

}  // namespace isobaric
