#include <doctest.h>

#include <limits>

#include "sgc/rational.hpp"

using sgc::Rational;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(5) / Rational(2) == Rational(5, 2));
    CHECK(-Rational(1, 3) == Rational(-1, 3));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
}

TEST_CASE("rational integrality") {
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).as_integer() == 2);
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK(Rational(0).is_nonnegative_integer());
    CHECK_FALSE(Rational(-2).is_nonnegative_integer());
    CHECK_THROWS_AS(Rational(1, 2).as_integer(), sgc::InternalError);
}

TEST_CASE("rational strings") {
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational::from_string("7") == Rational(7));
    CHECK(Rational::from_string("-3/4") == Rational(-3, 4));
    CHECK_THROWS_AS(Rational::from_string("x"), sgc::ValidationError);
}

TEST_CASE("rational errors") {
    CHECK_THROWS_AS(Rational(1, 0), sgc::ValidationError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), sgc::ValidationError);
    // overflow is an error, never a wrap
    Rational big(std::numeric_limits<long long>::max());
    CHECK_THROWS_AS(big * big, sgc::CapacityError);
}
