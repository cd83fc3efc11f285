#include <doctest.h>

#include <random>

#include "sgc/polynomial.hpp"

using sgc::ExactPolynomial;
using sgc::falling_factorial;
using sgc::Rational;

TEST_CASE("falling factorials") {
    CHECK(falling_factorial(0) == ExactPolynomial::constant(Rational(1)));
    // k(k-1) = k^2 - k
    CHECK(falling_factorial(2) == ExactPolynomial({Rational(0), Rational(-1), Rational(1)}));
    // k(k-1)(k-2) = k^3 - 3k^2 + 2k
    CHECK(falling_factorial(3) ==
          ExactPolynomial({Rational(0), Rational(2), Rational(-3), Rational(1)}));
    CHECK_THROWS_AS(falling_factorial(-1), sgc::ValidationError);
}

TEST_CASE("evaluation") {
    ExactPolynomial p({Rational(0), Rational(2), Rational(4)}); // 4k^2 + 2k
    CHECK(p.evaluate(Rational(-1)) == Rational(2));
    CHECK(p.evaluate(Rational(0)) == Rational(0));
    ExactPolynomial q({Rational(0), Rational(2)}); // 2k
    CHECK(q.evaluate(Rational(-1)) == Rational(-2));
    ExactPolynomial c({Rational(5), Rational(1)});
    CHECK(c.evaluate(Rational(0)) == c.coefficient(0));
}

TEST_CASE("normalization drops trailing zeros") {
    ExactPolynomial p({Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == 0);
    ExactPolynomial zero({Rational(0), Rational(0)});
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK((p - p).is_zero());
}

TEST_CASE("arithmetic") {
    ExactPolynomial k({Rational(0), Rational(1)});
    ExactPolynomial one = ExactPolynomial::constant(Rational(1));
    CHECK(k * k - k == falling_factorial(2));
    CHECK((k + one) * (k - one) == k * k - one);
    CHECK(ExactPolynomial::monomial(3, Rational(2)).evaluate(Rational(2)) == Rational(16));
    ExactPolynomial half = k / Rational(2);
    CHECK(half.evaluate(Rational(3)) == Rational(3, 2));
}

TEST_CASE("falling factorial basis round trip") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> coeffs;
        int deg = static_cast<int>(rng() % 6);
        for (int i = 0; i <= deg; ++i)
            coeffs.push_back(Rational(static_cast<long long>(rng() % 21) - 10,
                                      1 + static_cast<long long>(rng() % 4)));
        ExactPolynomial p(coeffs);
        CHECK(ExactPolynomial::from_falling_factorial(p.falling_factorial_coefficients()) == p);
    }
}

TEST_CASE("printing") {
    ExactPolynomial p({Rational(0), Rational(2), Rational(4)});
    CHECK(p.pretty() == "4k^2 + 2k");
    CHECK(p.coefficient_strings() == std::vector<std::string>{"0", "2", "4"});
    CHECK(ExactPolynomial().pretty() == "0");
    ExactPolynomial q({Rational(1), Rational(-1, 2)});
    CHECK(q.pretty() == "-(1/2)k + 1");
}
