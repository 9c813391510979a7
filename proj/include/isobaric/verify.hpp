#pragma once

#include <chrono>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "isobaric/lattice.hpp"
#include "isobaric/solver.hpp"
#include "isobaric/strings.hpp"
#include "isobaric/weights.hpp"

namespace isobaric::verify {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline Rational random_rational(std::mt19937_64& rng, bool integral = false) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    return integral ? Rational(num(rng)) : Rational(BigInt(num(rng)), BigInt(den(rng)));
}

inline WeightVector random_weights(std::mt19937_64& rng, int len, bool integral = false) {
    std::vector<Rational> e;
    e.reserve(len);
    for (int i = 0; i < len; ++i) e.push_back(random_rational(rng, integral));
    return WeightVector(std::move(e));
}

inline Polynomial random_isobaric(std::mt19937_64& rng, int n, int k) {
    std::uniform_int_distribution<int> coin(0, 2);
    std::uniform_int_distribution<int> num(-9, 9);
    Polynomial::TermMap t;
    for (const auto& alpha : enumerate_partitions(n, k)) {
        if (coin(rng) == 0) continue;
        int p = num(rng);
        t.emplace(alpha, Rational(p == 0 ? 1 : p));
    }
    return Polynomial(n, k, std::move(t));
}

inline bool weight_form_is(const ExponentVector& alpha, const std::vector<long long>& expect) {
    for (int j = 1; j <= alpha.size(); ++j) {
        Rational comp =
            weight_coefficient(alpha, WeightVector::basis(j, std::max(j, alpha.size())));
        if (comp != Rational(expect[j - 1])) return false;
    }
    return true;
}

inline bool in_span(const std::vector<WeightVector>& basis, const std::vector<Rational>& v) {
    Matrix m;
    for (const auto& b : basis) m.push_back(b.entries());
    int cols = static_cast<int>(v.size());
    int r0 = rank(m, cols);
    m.push_back(v);
    return rank(m, cols) == r0;
}

inline std::string spec_label(const OperatorSpec& s) {
    std::string out = "a=(";
    for (std::size_t i = 0; i < s.a.size(); ++i) {
        if (i) out += ",";
        out += s.a[i].to_string();
    }
    return out + "), m=" + s.m.to_string();
}

}  // namespace detail

/// Criterion 1: the weight formula reproduces the pinned linear forms
/// omega_1 + omega_3, omega_2 and 6(omega_1 + 2 omega_2 + 2 omega_3).
inline CheckResult check_weight_formula() {
    detail::Stopwatch clock;
    CheckResult r{1, "weight coefficient spot values", false, "", 0.0};
    bool ok = detail::weight_form_is(ExponentVector({1, 0, 1}), {1, 0, 1}) &&
              detail::weight_form_is(ExponentVector({0, 2, 0}), {0, 1, 0}) &&
              detail::weight_form_is(ExponentVector({1, 2, 2}), {6, 12, 12});
    r.pass = ok;
    if (!ok) r.detail = "a pinned linear form does not match";
    r.ms = clock.ms();
    return r;
}

/// Criterion 2: F_4 golden value plus agreement of the weight construction
/// with the linear recurrence for all n <= n_max, k <= 8.
inline CheckResult check_fibonacci_golden(int n_max = 20) {
    detail::Stopwatch clock;
    CheckResult r{2, "unit-weight sequence: golden value and recurrence cross-check", false, "",
                  0.0};
    Polynomial f4_expected(4, 4,
                           {{ExponentVector({4, 0, 0, 0}), Rational(1)},
                            {ExponentVector({2, 1, 0, 0}), Rational(3)},
                            {ExponentVector({0, 2, 0, 0}), Rational(1)},
                            {ExponentVector({1, 0, 1, 0}), Rational(2)},
                            {ExponentVector({0, 0, 0, 1}), Rational(1)}});
    if (fibonacci_poly(4, 4) != f4_expected) {
        r.detail = "F_4 differs from the pinned polynomial";
        r.ms = clock.ms();
        return r;
    }
    for (int k = 1; k <= 8; ++k)
        for (int n = 1; n <= n_max; ++n)
            if (fibonacci_poly(n, k) != fibonacci_by_recurrence(n, k)) {
                r.detail = "mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(k);
                r.ms = clock.ms();
                return r;
            }
    r.pass = true;
    r.ms = clock.ms();
    return r;
}

/// Criterion 3: the m = 2 operator annihilates every F_n and the m = 1
/// operator every G_n, for n <= n_max, k in 2..8.
inline CheckResult check_kernel_theorem(int n_max = 20) {
    detail::Stopwatch clock;
    CheckResult r{3, "operator kernels of the F and G sequences", false, "", 0.0};
    for (int k = 2; k <= 8; ++k) {
        OperatorSpec t2 = OperatorSpec::classic(Rational(2), k);
        OperatorSpec t1 = OperatorSpec::classic(Rational(1), k);
        for (int n = 1; n <= n_max; ++n) {
            if (!is_in_kernel(t2, fibonacci_poly(n, k)) ||
                !is_in_kernel(t1, lucas_poly(n, k))) {
                r.detail = "failure at n=" + std::to_string(n) + ", k=" + std::to_string(k);
                r.ms = clock.ms();
                return r;
            }
        }
    }
    r.pass = true;
    r.ms = clock.ms();
    return r;
}

/// Criterion 4: every string of F_n solves the m = 2 equation and every
/// string of G_n the m = 1 equation, by the domino cancellation and by direct
/// application, and the two methods agree string by string.
inline CheckResult check_string_kernels(int n_max = 16) {
    detail::Stopwatch clock;
    CheckResult r{4, "string solutions via domino cancellation and direct application", false,
                  "", 0.0};
    for (int k = 2; k <= 6; ++k) {
        OperatorSpec t2 = OperatorSpec::classic(Rational(2), k);
        OperatorSpec t1 = OperatorSpec::classic(Rational(1), k);
        for (int n = 1; n <= n_max; ++n) {
            for (const auto& ws : decompose(fibonacci_poly(n, k))) {
                bool direct = is_in_kernel(t2, ws.to_polynomial());
                bool domino = domino_check(ws, t2);
                if (!direct || domino != direct) {
                    r.detail = "F string failure at n=" + std::to_string(n) +
                               ", k=" + std::to_string(k);
                    r.ms = clock.ms();
                    return r;
                }
            }
            for (const auto& ws : decompose(lucas_poly(n, k))) {
                bool direct = is_in_kernel(t1, ws.to_polynomial());
                bool domino = domino_check(ws, t1);
                if (!direct || domino != direct) {
                    r.detail = "G string failure at n=" + std::to_string(n) +
                               ", k=" + std::to_string(k);
                    r.ms = clock.ms();
                    return r;
                }
            }
        }
    }
    r.pass = true;
    r.ms = clock.ms();
    return r;
}

/// Criterion 5: the alternating sum of hook reflects rebuilds G_n.
inline CheckResult check_hook_alternating_sum(int n_max = 10) {
    detail::Stopwatch clock;
    CheckResult r{5, "alternating hook sum rebuilds the natural-weight sequence", false, "", 0.0};
    for (int k = 1; k <= 6; ++k)
        for (int n = 1; n <= n_max; ++n) {
            Polynomial sum(n, k);
            for (int hr = 0; hr < n; ++hr)
                sum = sum + Rational(hr % 2 == 0 ? 1 : -1) * hook_reflect(n, hr, k);
            if (sum != lucas_poly(n, k)) {
                r.detail = "mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(k);
                r.ms = clock.ms();
                return r;
            }
        }
    r.pass = true;
    r.ms = clock.ms();
    return r;
}

/// Criterion 6: solution families of the classic operators at k = 5, N = 8;
/// m = 1 gives the codimension-1 family 2 omega_1 = omega_2, m = 2 exactly
/// the unit-weight line, every other integer m in -3..5 only the zero family.
/// Also pins the degree <= 3 dichotomy on (omega_1, omega_2).
inline CheckResult check_classification() {
    detail::Stopwatch clock;
    CheckResult r{6, "kernel classification of the classic operators", false, "", 0.0};
    auto fail = [&](const std::string& msg) {
        r.detail = msg;
        r.ms = clock.ms();
        return r;
    };

    KernelReport r1 = classify(OperatorSpec::classic(Rational(1), 5), 5, 8);
    if (r1.cls != KernelClass::codim1 || r1.basis.size() != 4)
        return fail("m=1 family is not codimension 1");
    for (const auto& w : r1.basis)
        if (Rational(2) * w.at(1) != w.at(2)) return fail("m=1 basis violates 2w1=w2");
    std::vector<Rational> lead{Rational(1), Rational(2), Rational(0), Rational(0),
                               Rational(0), Rational(0), Rational(0), Rational(0)};
    if (!detail::in_span(r1.basis, lead)) return fail("m=1 family misses (1,2,0,...)");
    for (int j = 3; j <= 5; ++j) {
        std::vector<Rational> e(8, Rational(0));
        e[j - 1] = Rational(1);
        if (!detail::in_span(r1.basis, e))
            return fail("m=1 family misses free direction " + std::to_string(j));
    }

    KernelReport r2 = classify(OperatorSpec::classic(Rational(2), 5), 5, 8);
    std::vector<Rational> unit{Rational(1), Rational(1), Rational(1), Rational(1),
                               Rational(1), Rational(0), Rational(0), Rational(0)};
    if (r2.cls != KernelClass::line || r2.basis.size() != 1 || r2.basis[0].entries() != unit)
        return fail("m=2 family is not exactly the unit-weight line");

    for (long long m : {-3, -2, -1, 0, 3, 4, 5}) {
        KernelReport rm = classify(OperatorSpec::classic(Rational(m), 5), 5, 8);
        if (rm.cls != KernelClass::trivial)
            return fail("m=" + std::to_string(m) + " should have only the zero family");
    }

    // dichotomy from degrees 2 and 3: solutions need m=1 with w2=2w1,
    // or m=2 with w2=w1, or w1=w2=0
    for (long long num : {-3, -1, 0, 3, 4}) {
        auto basis =
            rational_nullspace(build_kernel_system(OperatorSpec::classic(Rational(num), 3), 3, 3));
        for (const auto& w : basis)
            if (!w.at(1).is_zero() || !w.at(2).is_zero())
                return fail("unexpected leading weights for m=" + std::to_string(num));
    }
    auto b1 = rational_nullspace(build_kernel_system(OperatorSpec::classic(Rational(1), 3), 3, 3));
    auto b2 = rational_nullspace(build_kernel_system(OperatorSpec::classic(Rational(2), 3), 3, 3));
    bool saw1 = false, saw2 = false;
    for (const auto& w : b1) {
        if (Rational(2) * w.at(1) != w.at(2)) return fail("m=1 dichotomy violated");
        saw1 = saw1 || !w.at(1).is_zero();
    }
    for (const auto& w : b2) {
        if (w.at(1) != w.at(2)) return fail("m=2 dichotomy violated");
        saw2 = saw2 || !w.at(1).is_zero();
    }
    if (!saw1 || !saw2) return fail("dichotomy families are missing");

    r.pass = true;
    r.ms = clock.ms();
    return r;
}

/// Criterion 7: the coefficient grid scan with a_j in {-1,0,1,2}^4 and
/// m in -2..3 at k = 4, N = 8 is required to report nontrivial families only
/// for a = (1,1,1,1) with m in {1,2}. The depth-8 truncation genuinely admits
/// additional tail-weight families, so this check reports what the scan finds
/// and also states the depth at which the grid collapses to the two expected
/// solutions.
inline CheckResult check_operator_scan() {
    detail::Stopwatch clock;
    CheckResult r{7, "coefficient grid scan at truncation depth 8", false, "", 0.0};
    std::vector<Rational> avals{Rational(-1), Rational(0), Rational(1), Rational(2)};
    std::vector<std::vector<Rational>> a_grids(4, avals);
    std::vector<Rational> m_grid;
    for (long long m = -2; m <= 3; ++m) m_grid.emplace_back(m);

    auto hits = scan(a_grids, m_grid, 4, 8);
    std::vector<Rational> ones(4, Rational(1));
    bool exact = hits.size() == 2;
    for (const auto& h : hits)
        exact = exact && h.spec.a == ones && (h.spec.m == Rational(1) || h.spec.m == Rational(2));

    if (exact) {
        r.pass = true;
        r.ms = clock.ms();
        return r;
    }

    std::ostringstream out;
    out << hits.size() << " nontrivial systems at depth 8, expected only a=(1,1,1,1) with m in "
        << "{1,2}; the extras are genuine solutions of the depth-8 truncation carrying weight "
        << "only on trailing variables (first extra: ";
    for (const auto& h : hits)
        if (!(h.spec.a == ones && (h.spec.m == Rational(1) || h.spec.m == Rational(2)))) {
            out << detail::spec_label(h.spec);
            break;
        }
    auto deep = scan(a_grids, m_grid, 4, 10);
    bool deep_exact = deep.size() == 2;
    for (const auto& h : deep)
        deep_exact =
            deep_exact && h.spec.a == ones && (h.spec.m == Rational(1) || h.spec.m == Rational(2));
    out << "); at depth 10 the same grid yields "
        << (deep_exact ? "exactly the two expected solutions" : "an unexpected set");
    r.detail = out.str();
    r.ms = clock.ms();
    return r;
}

/// Criterion 8: a polynomial solves the operator equation iff all of its
/// strings do, on 500 pseudo-random (polynomial, operator) pairs.
inline CheckResult check_string_biconditional(int n_max = 10) {
    detail::Stopwatch clock;
    CheckResult r{8, "kernel membership passes between polynomials and their strings", false, "",
                  0.0};
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> deg(2, std::max(2, n_max));
    std::uniform_int_distribution<int> kk(2, 5);
    std::uniform_int_distribution<int> aa(-2, 2);
    std::uniform_int_distribution<int> mm(-2, 3);
    std::uniform_int_distribution<int> style(0, 3);
    for (int trial = 0; trial < 500; ++trial) {
        int n = deg(rng), k = kk(rng);
        OperatorSpec spec;
        if (style(rng) == 0) {
            spec = OperatorSpec::classic(Rational(mm(rng)), k);
        } else {
            for (int j = 0; j < k; ++j) spec.a.emplace_back(aa(rng));
            spec.m = Rational(mm(rng));
        }
        Polynomial p = style(rng) < 2
                           ? detail::random_isobaric(rng, n, k)
                           : wip(n, k, detail::random_weights(rng, std::min(n, k)));
        if (!verify_string_theorem(p, spec)) {
            r.detail = "biconditional failed at trial " + std::to_string(trial) + " (" +
                       detail::spec_label(spec) + ")";
            r.ms = clock.ms();
            return r;
        }
    }
    r.pass = true;
    r.ms = clock.ms();
    return r;
}

/// Criterion 9: the lattices of consecutive string elements first meet at
/// the degree n-2 string one step down; pinned example: the string generated
/// by (0,2,1) meets at (2,0,1) and (0,1,1).
inline CheckResult check_intersection_strings(int n_max = 12) {
    detail::Stopwatch clock;
    CheckResult r{9, "lattice intersection nodes form the string two degrees down", false, "",
                  0.0};
    auto nodes = intersection_nodes(expand_string(ExponentVector({0, 2, 1})));
    if (nodes.size() != 2 || nodes[0] != ExponentVector({2, 0, 1}) ||
        nodes[1] != ExponentVector({0, 1, 1}) || nodes[0].degree() != 5 ||
        nodes[1].degree() != 5) {
        r.detail = "pinned intersection nodes of the (0,2,1) string are wrong";
        r.ms = clock.ms();
        return r;
    }

    std::mt19937_64 rng(0xa11ce);
    for (int k = 2; k <= 6; ++k)
        for (int n = 2; n <= n_max; ++n) {
            std::vector<WeightVector> weights{WeightVector::unit(std::min(n, k)),
                                              WeightVector::natural(std::min(n, k)),
                                              detail::random_weights(rng, std::min(n, k))};
            for (const auto& w : weights)
                for (const auto& ws : decompose(wip(n, k, w))) {
                    if (ws.family.elements.size() < 2) continue;
                    auto got = intersection_nodes(ws.family);
                    if (n == 2) {
                        if (!got.empty()) {
                            r.detail = "degree-2 string has nonempty intersections";
                            r.ms = clock.ms();
                            return r;
                        }
                        continue;
                    }
                    std::vector<int> g = ws.family.generator.entries();
                    g[1] -= 1;
                    auto down = expand_string(ExponentVector(g));
                    std::set<ExponentVector, TermOrder> expect(down.elements.begin(),
                                                               down.elements.end());
                    bool ok = got.size() == expect.size();
                    for (const auto& nd : got)
                        ok = ok && expect.count(nd) == 1 && nd.degree() == n - 2;
                    if (!ok) {
                        r.detail = "intersection mismatch at n=" + std::to_string(n) +
                                   ", k=" + std::to_string(k);
                        r.ms = clock.ms();
                        return r;
                    }
                }
        }
    r.pass = true;
    r.ms = clock.ms();
    return r;
}

/// Criterion 10: requires d/dt_j G_n = F_{n-j} exactly. The exact derivative
/// is n * F_{n-j} (already visible at n = 2: d/dt_1 G_2 = 2 t_1 = 2 F_1), so
/// this check reports the literal comparison and states the scaled identity
/// it verifies instead.
inline CheckResult check_lucas_derivative(int n_max = 12) {
    detail::Stopwatch clock;
    CheckResult r{10, "derivative identity between the G and F sequences", false, "", 0.0};
    std::string counter;
    bool literal = true;
    bool scaled = true;
    for (int k = 2; k <= 6 && (literal || scaled); ++k)
        for (int n = 2; n <= n_max; ++n)
            for (int j = 1; j <= std::min(n - 1, k); ++j) {
                Polynomial d = partial_derivative(lucas_poly(n, k), j);
                if (d != fibonacci_poly(n - j, k)) {
                    if (literal && counter.empty())
                        counter = "n=" + std::to_string(n) + ", j=" + std::to_string(j) +
                                  ", k=" + std::to_string(k);
                    literal = false;
                }
                if (d != Rational(n) * fibonacci_poly(n - j, k)) scaled = false;
            }
    r.pass = literal;
    if (!literal)
        r.detail = "literal identity dG_n/dt_j = F_{n-j} fails (first at " + counter +
                   ", where dG_2/dt_1 = 2 t_1 = 2 F_1); the exact relation dG_n/dt_j = " +
                   std::string("n F_{n-j} ") + (scaled ? "holds" : "ALSO fails") +
                   " over the full range";
    r.ms = clock.ms();
    return r;
}

/// Criterion 11: the sequences form a module over weight vectors (linearity
/// on 200 random pairs) and integer weights produce integer coefficients
/// (200 random integer weight vectors).
inline CheckResult check_module_structure(int n_max = 12) {
    detail::Stopwatch clock;
    CheckResult r{11, "module structure: linearity and integrality over weights", false, "", 0.0};
    std::mt19937_64 rng(0xbeef);
    std::uniform_int_distribution<int> kk(1, 5);
    std::uniform_int_distribution<int> deg_lin(1, std::min(8, n_max));
    for (int trial = 0; trial < 200; ++trial) {
        int n = deg_lin(rng), k = kk(rng);
        int len = std::min(n, k);
        WeightVector u = detail::random_weights(rng, len);
        WeightVector v = detail::random_weights(rng, len);
        Rational c = detail::random_rational(rng);
        if (wip(n, k, u + v) != wip(n, k, u) + wip(n, k, v) ||
            wip(n, k, c * u) != c * wip(n, k, u)) {
            r.detail = "linearity failed at trial " + std::to_string(trial);
            r.ms = clock.ms();
            return r;
        }
    }
    std::uniform_int_distribution<int> kk6(1, 6);
    std::uniform_int_distribution<int> deg_int(1, n_max);
    for (int trial = 0; trial < 200; ++trial) {
        int n = deg_int(rng), k = kk6(rng);
        Polynomial p = wip(n, k, detail::random_weights(rng, std::min(n, k), true));
        for (const auto& [alpha, c] : p.terms())
            if (!c.is_integer()) {
                r.detail = "non-integer coefficient at trial " + std::to_string(trial);
                r.ms = clock.ms();
                return r;
            }
    }
    r.pass = true;
    r.ms = clock.ms();
    return r;
}

/// Named suites exposed by the command line. n_max <= 0 keeps each check's
/// pinned default bound.
inline std::vector<CheckResult> run_suite(const std::string& suite, int n_max = 0) {
    auto bounded = [&](int pinned) { return n_max > 0 ? n_max : pinned; };
    std::vector<CheckResult> out;
    bool all = suite == "all";
    if (all) {
        out.push_back(check_weight_formula());
        out.push_back(check_fibonacci_golden(bounded(20)));
    }
    if (all || suite == "thm31") out.push_back(check_kernel_theorem(bounded(20)));
    if (all || suite == "thm32") out.push_back(check_string_kernels(bounded(16)));
    if (all || suite == "thm22") out.push_back(check_hook_alternating_sum(bounded(10)));
    if (all || suite == "prop41") out.push_back(check_classification());
    if (all || suite == "thm43") out.push_back(check_operator_scan());
    if (all || suite == "thm45") out.push_back(check_string_biconditional(bounded(10)));
    if (all || suite == "lattice") out.push_back(check_intersection_strings(bounded(12)));
    if (all) {
        out.push_back(check_lucas_derivative(bounded(12)));
        out.push_back(check_module_structure(bounded(12)));
    }
    if (out.empty()) throw std::invalid_argument("unknown verification suite: " + suite);
    return out;
}

}  // namespace isobaric::verify
