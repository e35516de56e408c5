#include "doctest.h"
#include "logext/errors.hpp"
#include "logext/rational.hpp"

using namespace logext;

TEST_SUITE("rational") {

TEST_CASE("canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).denominator() == 2);
    CHECK(Rational(-6, -3) == Rational(2));
    CHECK(Rational(0, 5).str() == "0");
}

TEST_CASE("arithmetic") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b) == Rational(5, 6));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a * b) == Rational(1, 6));
    CHECK((a / b) == Rational(3, 2));
    CHECK((-a) == Rational(-1, 2));
    CHECK(a.abs() == a);
    CHECK((-a).abs() == a);
}

TEST_CASE("comparison") {
    CHECK(Rational(-1) < Rational(-1, 2));
    CHECK(Rational(2, 3) > Rational(1, 2));
    CHECK(Rational(7, 7) >= Rational(1));
    CHECK(Rational(0).is_zero());
    CHECK(Rational(3).is_integer());
    CHECK(!Rational(3, 2).is_integer());
    CHECK(Rational(-5).sign() == -1);
}

TEST_CASE("parse and str round trip") {
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK_THROWS_AS(Rational::parse("x"), Error);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
}

TEST_CASE("big values stay exact") {
    Rational big(1, 3);
    for (int i = 0; i < 40; ++i) big *= Rational(10);
    Rational back = big;
    for (int i = 0; i < 40; ++i) back /= Rational(10);
    CHECK(back == Rational(1, 3));
}

TEST_CASE("lcm_z") {
    CHECK(lcm_z(4, 6) == 12);
    CHECK(lcm_z(0, 5) == 5);
    CHECK(lcm_z(-3, 0) == 3);
    CHECK(lcm_z(-4, 6) == 12);
    CHECK(lcm_z(1, 1) == 1);
}

}  // TEST_SUITE
