#include "evenzeta/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

using evenzeta::Rational;
using evenzeta::binomial;
using evenzeta::factorial;
using evenzeta::pow2;

TEST_CASE("construction canonicalizes") {
    REQUIRE(Rational(2, 4) == Rational(1, 2));
    REQUIRE(Rational(-2, 4) == Rational(-1, 2));
    REQUIRE(Rational(2, -4) == Rational(-1, 2));
    REQUIRE(Rational(0, 7) == Rational());
    REQUIRE(Rational(6, 3).is_integer());
    REQUIRE_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("from_string parses and validates") {
    REQUIRE(Rational::from_string("3/6") == Rational(1, 2));
    REQUIRE(Rational::from_string("-7") == Rational(-7));
    REQUIRE(Rational::from_string("0") == Rational());
    REQUIRE_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
    REQUIRE_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
    REQUIRE_THROWS_AS(Rational::from_string(""), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    Rational a(1, 6), b(1, 10);
    REQUIRE(a + b == Rational(4, 15));
    REQUIRE(a - b == Rational(1, 15));
    REQUIRE(a * b == Rational(1, 60));
    REQUIRE(a / b == Rational(5, 3));
    REQUIRE(-a == Rational(-1, 6));
    REQUIRE(Rational(-3, 4).abs() == Rational(3, 4));
    REQUIRE_THROWS_AS(a / Rational(), std::domain_error);
}

TEST_CASE("comparisons and sign") {
    REQUIRE(Rational(1, 3) < Rational(1, 2));
    REQUIRE(Rational(-1, 3) > Rational(-1, 2));
    REQUIRE(Rational(5, 5) <= Rational(1));
    REQUIRE(Rational(-2).sign() == -1);
    REQUIRE(Rational().sign() == 0);
    REQUIRE(Rational(1, 9).sign() == 1);
}

TEST_CASE("pow handles negative exponents") {
    REQUIRE(Rational(2, 3).pow(3) == Rational(8, 27));
    REQUIRE(Rational(2, 3).pow(-2) == Rational(9, 4));
    REQUIRE(Rational(5).pow(0) == Rational(1));
    REQUIRE_THROWS_AS(Rational().pow(-1), std::domain_error);
}

TEST_CASE("rendering") {
    REQUIRE(Rational(1, 2).to_string() == "1/2");
    REQUIRE(Rational(-3).to_string() == "-3");
    REQUIRE(Rational().to_string() == "0");
    REQUIRE(Rational(1, 3).to_double() == Catch::Approx(1.0 / 3));
}

TEST_CASE("binomial and factorial") {
    REQUIRE(binomial(5, 2) == 10);
    REQUIRE(binomial(0, 0) == 1);
    REQUIRE(binomial(3, 5) == 0);
    REQUIRE(binomial(40, 20) == mpz_class("137846528820"));
    REQUIRE(factorial(0) == 1);
    REQUIRE(factorial(10) == 3628800);
}

TEST_CASE("pow2 both directions") {
    REQUIRE(pow2(10) == Rational(1024));
    REQUIRE(pow2(0) == Rational(1));
    REQUIRE(pow2(-3) == Rational(1, 8));
}
