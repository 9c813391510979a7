#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "isobaric/exponent.hpp"
#include "isobaric/rational.hpp"

namespace isobaric {

/// Isobaric polynomial: a finite sum of monomials t^alpha, all of one isobaric
/// degree n in a fixed number of variables k, with exact rational coefficients.
/// Zero coefficients are never stored. The zero polynomial keeps its degree
/// tag but equality between zero polynomials ignores it. Polynomials over a
/// different variable count are distinct values and cannot be added.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rational, TermOrder>;

    /// The zero polynomial of the given degree tag.
    Polynomial(int degree, int k) : degree_(degree), k_(k) { check_shape(); }

    Polynomial(int degree, int k, TermMap terms)
        : degree_(degree), k_(k), terms_(std::move(terms)) {
        check_shape();
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->first.size() != k_)
                throw std::invalid_argument("Polynomial: exponent vector length must equal k");
            if (it->first.degree() != degree_)
                throw std::invalid_argument("Polynomial: term degree differs from polynomial degree");
            if (it->second.is_zero())
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    static Polynomial monomial(const ExponentVector& alpha, Rational coeff) {
        TermMap t;
        if (!coeff.is_zero()) t.emplace(alpha, std::move(coeff));
        return Polynomial(alpha.degree(), alpha.size(), std::move(t));
    }

    /// Degree-0 polynomial holding a single constant.
    static Polynomial constant(Rational value, int k) {
        return monomial(ExponentVector::zero(k), std::move(value));
    }

    int degree() const noexcept { return degree_; }
    int var_count() const noexcept { return k_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int term_count() const noexcept { return static_cast<int>(terms_.size()); }

    Rational coeff(const ExponentVector& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? Rational() : it->second;
    }

    Polynomial operator-() const {
        TermMap t;
        for (const auto& [alpha, c] : terms_) t.emplace(alpha, -c);
        return Polynomial(degree_, k_, std::move(t));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        if (a.k_ != b.k_)
            throw std::invalid_argument("Polynomial: variable count mismatch in addition");
        if (!a.is_zero() && !b.is_zero() && a.degree_ != b.degree_)
            throw std::invalid_argument("Polynomial: isobaric degree mismatch in addition");
        int deg = a.is_zero() && !b.is_zero() ? b.degree_ : a.degree_;
        TermMap t = a.terms_;
        for (const auto& [alpha, c] : b.terms_) {
            auto [it, inserted] = t.emplace(alpha, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) t.erase(it);
            }
        }
        return Polynomial(deg, a.k_, std::move(t));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        if (c.is_zero()) return Polynomial(p.degree_, p.k_);
        TermMap t;
        for (const auto& [alpha, x] : p.terms_) t.emplace(alpha, c * x);
        return Polynomial(p.degree_, p.k_, std::move(t));
    }
    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
        if (a.k_ != b.k_) return false;
        if (a.is_zero() && b.is_zero()) return true;
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) noexcept { return !(a == b); }

private:
    int degree_;
    int k_;
    TermMap terms_;

    void check_shape() const {
        if (degree_ < 0) throw std::invalid_argument("Polynomial: degree must be >= 0");
        if (k_ < 1) throw std::invalid_argument("Polynomial: k must be >= 1");
    }
};

/// Formal partial derivative with respect to t_j (1-based). The result has
/// degree p.degree() - j; inputs of degree below j differentiate to zero.
inline Polynomial partial_derivative(const Polynomial& p, int j) {
    if (j < 1 || j > p.var_count())
        throw std::invalid_argument("partial_derivative: variable index out of range");
    if (p.degree() < j) return Polynomial(0, p.var_count());
    Polynomial::TermMap t;
    for (const auto& [alpha, c] : p.terms()) {
        int aj = alpha[j - 1];
        if (aj == 0) continue;
        t.emplace(alpha.decremented(j), c * Rational(aj));
    }
    return Polynomial(p.degree() - j, p.var_count(), std::move(t));
}

/// Multiplication by the variable t_j; raises the degree by j.
inline Polynomial multiply_by_variable(const Polynomial& p, int j) {
    if (j < 1 || j > p.var_count())
        throw std::invalid_argument("multiply_by_variable: variable index out of range");
    Polynomial::TermMap t;
    for (const auto& [alpha, c] : p.terms()) t.emplace(alpha.incremented(j), c);
    return Polynomial(p.degree() + j, p.var_count(), std::move(t));
}

}  // namespace isobaric
