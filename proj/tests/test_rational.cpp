#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bezsub/error.hpp"
#include "bezsub/rational.hpp"
#include "support.hpp"

using namespace bezsub;

TEST_CASE("construction is canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(2, 4).num() == 1);
    CHECK(Rational(2, 4).den() == 2);
    CHECK(Rational(1, -2).den() == 2);
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("from_string accepts exact rationals only") {
    CHECK(Rational::from_string("1/3") == Rational(1, 3));
    CHECK(Rational::from_string("-7") == Rational(-7));
    CHECK(Rational::from_string("+4") == Rational(4));
    CHECK(Rational::from_string("2/4") == Rational(1, 2));
    CHECK(Rational::from_string("-10/4") == Rational(-5, 2));

    for (const char* bad : {"", "1.5", "1/", "/2", "a", "1 /2", "1/-2", "--3", "1e3", "2/0x"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::from_string(bad), Error);
    }
    CHECK_THROWS_AS(Rational::from_string("1/0"), Error);
}

TEST_CASE("str round trips and never prints floats") {
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(-5).str() == "-5");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(-3, 9).str() == "-1/3");

    std::mt19937 rng(42);
    for (int i = 0; i < 200; ++i) {
        const Rational r = support::rnd_rational(rng, 5000, 300);
        CHECK(Rational::from_string(r.str()) == r);
    }
}

TEST_CASE("pow handles negative exponents and zero") {
    CHECK(Rational(2).pow(-3) == Rational(1, 8));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-2).pow(2) == Rational(4));
    CHECK(Rational(-2).pow(3) == Rational(-8));
    CHECK(Rational(0).pow(3) == Rational(0));
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK(Rational(7, 5).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).pow(-1), Error);
}

TEST_CASE("field arithmetic on random values") {
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        const Rational a = support::rnd_rational(rng, 50, 20);
        const Rational b = support::rnd_rational(rng, 50, 20);
        const Rational c = support::rnd_rational(rng, 50, 20);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}
