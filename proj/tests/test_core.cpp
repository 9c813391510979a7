#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "isobaric/exponent.hpp"
#include "isobaric/polynomial.hpp"

using namespace isobaric;

namespace {

// independent oracle: p(n, parts <= k) by the standard recurrence
long long partition_count(int n, int k) {
    std::vector<std::vector<long long>> p(n + 1, std::vector<long long>(k + 1, 0));
    for (int j = 0; j <= k; ++j) p[0][j] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j)
            p[i][j] = p[i][j - 1] + (i >= j ? p[i - j][j] : 0);
    return p[n][k];
}

ExponentVector ev(std::vector<int> e) { return ExponentVector(std::move(e)); }

Polynomial random_isobaric(std::mt19937_64& rng, int n, int k) {
    auto parts = enumerate_partitions(n, k);
    std::uniform_int_distribution<int> coin(0, 2);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    Polynomial::TermMap t;
    for (const auto& alpha : parts) {
        if (coin(rng) == 0) continue;
        int p = num(rng);
        if (p == 0) p = 1;
        t.emplace(alpha, Rational(BigInt(p), BigInt(den(rng))));
    }
    return Polynomial(n, k, std::move(t));
}

}  // namespace

TEST_CASE("bigint arithmetic") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-17).to_string() == "-17");
    CHECK((BigInt(1000000007LL) * BigInt(998244353LL)).to_string() == "998244359987710471");
    CHECK((BigInt::from_string("123456789012345678901234567890") +
           BigInt::from_string("987654321098765432109876543210"))
              .to_string() == "1111111110111111111011111111100");
    CHECK((BigInt(5) - BigInt(9)).to_string() == "-4");
    CHECK((BigInt(-5) - BigInt(-9)).to_string() == "4");

    BigInt a = BigInt::from_string("987654321987654321987654321");
    BigInt b = BigInt::from_string("12345678901234567");
    auto [q, r] = BigInt::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r >= BigInt(0));
    CHECK(r < b);

    // truncation toward zero
    CHECK((BigInt(-7) / BigInt(2)) == BigInt(-3));
    CHECK((BigInt(-7) % BigInt(2)) == BigInt(-1));
    CHECK((BigInt(7) / BigInt(-2)) == BigInt(-3));
    CHECK_THROWS_AS(BigInt::divmod(a, BigInt(0)), std::domain_error);

    CHECK(BigInt::gcd(BigInt(12), BigInt(-18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(BigInt::gcd(BigInt::from_string("2310"), BigInt::from_string("6468")) == BigInt(462));

    CHECK(factorial(0) == BigInt(1));
    CHECK(factorial(20).to_string() == "2432902008176640000");
    CHECK(factorial(25).to_string() == "15511210043330985984000000");

    CHECK(BigInt::from_string("-0042") == BigInt(-42));
    CHECK_THROWS_AS(BigInt::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string("12x"), std::invalid_argument);
}

TEST_CASE("bigint division and gcd on random wide values") {
    std::mt19937_64 rng(0xd1ce);
    auto random_big = [&](int limbs) {
        BigInt x(0);
        for (int i = 0; i < limbs; ++i)
            x = x * BigInt(1LL << 32) + BigInt(static_cast<long long>(rng() & 0xffffffffULL));
        return rng() & 1 ? -x : x;
    };
    for (int trial = 0; trial < 200; ++trial) {
        BigInt a = random_big(1 + static_cast<int>(rng() % 6));
        BigInt b = random_big(1 + static_cast<int>(rng() % 4));
        if (b.is_zero()) b = BigInt(7);
        auto [q, r] = BigInt::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        CHECK((r.is_zero() || r.is_negative() == a.is_negative()));

        BigInt g = BigInt::gcd(a, b);
        if (a.is_zero() && b.is_zero()) {
            CHECK(g.is_zero());
        } else {
            CHECK(!g.is_negative());
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());
            CHECK(BigInt::gcd(a / g, b / g) == BigInt(1));
        }
    }
}

TEST_CASE("rational invariants and arithmetic") {
    Rational half(BigInt(2), BigInt(4));
    CHECK(half.to_string() == "1/2");
    CHECK(Rational(BigInt(3), BigInt(-6)).to_string() == "-1/2");
    CHECK(Rational(BigInt(0), BigInt(7)) == Rational(0));
    CHECK((half + half) == Rational(1));
    CHECK((Rational(1, 1) - Rational(3)) == Rational(-2));
    CHECK((Rational(BigInt(2), BigInt(3)) * Rational(BigInt(9), BigInt(4))).to_string() == "3/2");
    CHECK((Rational(5) / Rational(-10)).to_string() == "-1/2");
    CHECK_THROWS_AS(Rational(5) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
    CHECK(Rational::from_string("-6/8").to_string() == "-3/4");
    CHECK(Rational::from_string("42") == Rational(42));
    CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(-1) < Rational(BigInt(-1), BigInt(2)));
}

TEST_CASE("exponent vectors") {
    ExponentVector a = ev({1, 2, 2});
    CHECK(a.degree() == 11);
    CHECK(a.depth() == 5);
    CHECK(ev({4, 0, 0, 0}).degree() == 4);
    CHECK(ev({0, 0, 0, 1}).degree() == 4);
    CHECK(a.incremented(3) == ev({1, 2, 3}));
    CHECK(a.decremented(1) == ev({0, 2, 2}));
    CHECK_THROWS_AS(ev({0, 1}).decremented(1), std::invalid_argument);
    CHECK_THROWS_AS(a.incremented(4), std::invalid_argument);
    CHECK_THROWS_AS(ev({-1}), std::invalid_argument);
    CHECK(ExponentVector::zero(3).is_zero());
    CHECK(a.to_string() == "(1,2,2)");
}

TEST_CASE("partition enumeration") {
    auto only = enumerate_partitions(1, 3);
    REQUIRE(only.size() == 1);
    CHECK(only[0] == ev({1, 0, 0}));

    auto p44 = enumerate_partitions(4, 4);
    REQUIRE(p44.size() == 5);
    // canonical order: lexicographic descending
    CHECK(p44[0] == ev({4, 0, 0, 0}));
    CHECK(p44[1] == ev({2, 1, 0, 0}));
    CHECK(p44[2] == ev({1, 0, 1, 0}));
    CHECK(p44[3] == ev({0, 2, 0, 0}));
    CHECK(p44[4] == ev({0, 0, 0, 1}));

    auto p73 = enumerate_partitions(7, 3);
    bool found = false;
    for (const auto& a : p73) found = found || a == ev({0, 2, 1});
    CHECK(found);

    auto p0 = enumerate_partitions(0, 4);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].is_zero());

    for (int n = 0; n <= 12; ++n)
        for (int k = 1; k <= 8; ++k) {
            auto parts = enumerate_partitions(n, k);
            CHECK(static_cast<long long>(parts.size()) == partition_count(n, k));
            for (const auto& a : parts) CHECK(a.degree() == n);
            // strictly lex-descending throughout
            for (std::size_t i = 0; i + 1 < parts.size(); ++i)
                CHECK(parts[i + 1].entries() < parts[i].entries());
        }
}

TEST_CASE("polynomial construction and invariants") {
    Polynomial z(3, 2);
    CHECK(z.is_zero());
    CHECK(z.degree() == 3);

    Polynomial t1sq = Polynomial::monomial(ev({2, 0}), Rational(1));
    CHECK(t1sq.degree() == 2);
    CHECK(t1sq.coeff(ev({2, 0})) == Rational(1));
    CHECK(t1sq.coeff(ev({0, 1})) == Rational(0));

    CHECK_THROWS_AS(Polynomial(2, 2, {{ev({1, 0}), Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial(2, 2, {{ev({0, 1, 0}), Rational(1)}}), std::invalid_argument);

    // zero coefficients are dropped on construction
    Polynomial dropped(2, 2, {{ev({2, 0}), Rational(0)}});
    CHECK(dropped.is_zero());

    // zero polynomials compare equal across degree tags, never across k
    CHECK(Polynomial(3, 2) == Polynomial(5, 2));
    CHECK(Polynomial(3, 2) != Polynomial(3, 3));
    CHECK(t1sq != Polynomial::monomial(ev({2, 0, 0}), Rational(1)));
}

TEST_CASE("polynomial addition") {
    Polynomial t1sq = Polynomial::monomial(ev({2, 0}), Rational(1));
    Polynomial t2 = Polynomial::monomial(ev({0, 1}), Rational(1));

    CHECK(t1sq + Polynomial(2, 2) == t1sq);
    CHECK(t1sq + (-t1sq) == Polynomial(2, 2));
    CHECK((t1sq + (-t1sq)).degree() == 2);

    // components assembled from two weight directions
    Polynomial sum = t1sq + t2;
    CHECK(sum.coeff(ev({2, 0})) == Rational(1));
    CHECK(sum.coeff(ev({0, 1})) == Rational(1));

    Polynomial t3 = Polynomial::monomial(ev({0, 0, 1}), Rational(1));
    CHECK_THROWS_AS(t1sq + t3, std::invalid_argument);
    Polynomial t1cube = Polynomial::monomial(ev({3, 0}), Rational(1));
    CHECK_THROWS_AS(t1sq + t1cube, std::invalid_argument);
}

TEST_CASE("scalar multiplication") {
    Polynomial p = Polynomial::monomial(ev({1, 0, 1}), Rational(1));
    CHECK(Rational(1) * p == p);
    CHECK((Rational(0) * p).is_zero());
    CHECK((Rational(0) * p).degree() == p.degree());
    CHECK((Rational(2) * p).coeff(ev({1, 0, 1})) == Rational(2));
}

TEST_CASE("partial derivative") {
    Polynomial t1sq = Polynomial::monomial(ev({2, 0}), Rational(1));
    Polynomial d = partial_derivative(t1sq, 1);
    CHECK(d == Polynomial::monomial(ev({1, 0}), Rational(2)));
    CHECK(d.degree() == 1);

    // d/dt_2 of t_1^2 + 2 t_2 is the constant 2
    Polynomial g2(2, 2, {{ev({2, 0}), Rational(1)}, {ev({0, 1}), Rational(2)}});
    Polynomial c = partial_derivative(g2, 2);
    CHECK(c == Polynomial::constant(Rational(2), 2));
    CHECK(c.degree() == 0);

    Polynomial t1t2 = Polynomial::monomial(ev({1, 1, 0}), Rational(1));
    CHECK(partial_derivative(t1t2, 3).is_zero());
    CHECK(partial_derivative(t1t2, 3).degree() == 0);
    CHECK_THROWS_AS(partial_derivative(t1t2, 4), std::invalid_argument);
    CHECK_THROWS_AS(partial_derivative(t1t2, 0), std::invalid_argument);
}

TEST_CASE("multiplication by a variable") {
    Polynomial t1 = Polynomial::monomial(ev({1, 0}), Rational(1));
    Polynomial r = multiply_by_variable(t1, 2);
    CHECK(r == Polynomial::monomial(ev({1, 1}), Rational(1)));
    CHECK(r.degree() == 3);

    CHECK(multiply_by_variable(Polynomial(4, 2), 1).is_zero());

    Polynomial t1t2 = Polynomial::monomial(ev({1, 1, 0}), Rational(1));
    Polynomial s = multiply_by_variable(t1t2, 3);
    CHECK(s == Polynomial::monomial(ev({1, 1, 1}), Rational(1)));
    CHECK(s.degree() == 6);
}

TEST_CASE("algebraic properties on random polynomials") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> deg(1, 8);
    std::uniform_int_distribution<int> kk(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        int n = deg(rng), k = kk(rng);
        Polynomial p = random_isobaric(rng, n, k);
        Polynomial q = random_isobaric(rng, n, k);
        Polynomial r = random_isobaric(rng, n, k);
        CHECK(p + q == q + p);
        CHECK((p + q) + r == p + (q + r));

        // d/dt_j (t_j p) - t_j d/dt_j (p) == p
        std::uniform_int_distribution<int> jj(1, k);
        int j = jj(rng);
        Polynomial lhs = partial_derivative(multiply_by_variable(p, j), j) -
                         multiply_by_variable(partial_derivative(p, j), j);
        CHECK(lhs == p);

        Polynomial s = p + q;
        for (const auto& [alpha, c] : s.terms()) {
            CHECK(alpha.degree() == n);
            CHECK(!c.is_zero());
        }
    }
}
