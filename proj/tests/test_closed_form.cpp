#include "evenzeta/closed_form.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

using evenzeta::EvenZetaSum;
using evenzeta::PiValue;
using evenzeta::Rational;
using evenzeta::e_row_sum;
using evenzeta::e_sum_theorem1;
using evenzeta::e_sum_theorem3;
using evenzeta::theorem1_zeta_coefficients;
using evenzeta::verify_bernoulli_identity;
using evenzeta::verify_gessel_viennot;
using evenzeta::zeta_even;

TEST_CASE("EvenZetaSum enforces its invariants") {
    EvenZetaSum s = EvenZetaSum::make(3, 2, PiValue::term(3, Rational(1, 1260)));
    REQUIRE(s.weight == 6); // stored as 2n
    REQUIRE(s.depth == 2);
    REQUIRE(s.coefficient() == Rational(1, 1260));
    REQUIRE_THROWS_AS(EvenZetaSum::make(3, 4, PiValue::term(3, Rational(1))), std::domain_error);
    REQUIRE_THROWS_AS(EvenZetaSum::make(3, 0, PiValue::term(3, Rational(1))), std::domain_error);
    REQUIRE_THROWS_AS(EvenZetaSum::make(3, 2, PiValue::term(2, Rational(1))), std::logic_error);
    REQUIRE_THROWS_AS(EvenZetaSum::make(3, 2, -PiValue::term(3, Rational(1))), std::logic_error);
}

TEST_CASE("depth one recovers zeta, depth equals weight gives the factorial form") {
    for (unsigned n = 1; n <= 20; ++n) {
        REQUIRE(e_sum_theorem1(n, 1).value == zeta_even(n));
        REQUIRE(e_sum_theorem1(n, n).value ==
                PiValue::term(n, Rational(1) / Rational(evenzeta::factorial(2 * n + 1))));
    }
}

TEST_CASE("alternating convolution fixtures") {
    REQUIRE(e_sum_theorem1(2, 2).value == PiValue::term(2, Rational(1, 120)));
    REQUIRE(e_sum_theorem1(3, 3).value == PiValue::term(3, Rational(1, 5040)));
    REQUIRE(e_sum_theorem1(4, 2).value == PiValue::term(4, Rational(1, 12600)));
    // Depth 2 collapses to three quarters of a single zeta value.
    for (unsigned n = 2; n <= 12; ++n)
        REQUIRE(e_sum_theorem1(n, 2).value == zeta_even(n).scaled(Rational(3, 4)));
}

TEST_CASE("zeta-product display coefficients") {
    // Coefficients of zeta(2n), zeta(2)zeta(2n-2), zeta(4)zeta(2n-4); the
    // internal pi^(2j) coefficients convert by factors of 6 and 90.
    struct Row {
        unsigned k;
        std::vector<Rational> display;
    };
    const std::vector<Row> rows = {
        {2, {Rational(3, 4)}},
        {3, {Rational(5, 8), Rational(-1, 4)}},
        {4, {Rational(35, 64), Rational(-5, 16)}},
        {5, {Rational(63, 128), Rational(-21, 64), Rational(3, 64)}},
        {6, {Rational(231, 512), Rational(-21, 64), Rational(21, 256)}},
    };
    const Rational convert[] = {Rational(1), Rational(6), Rational(90)};
    for (const auto& row : rows) {
        std::vector<Rational> c = theorem1_zeta_coefficients(row.k);
        REQUIRE(c.size() == row.display.size());
        for (std::size_t j = 0; j < c.size(); ++j) REQUIRE(c[j] * convert[j] == row.display[j]);
    }
}

TEST_CASE("Bernoulli closed form fixtures") {
    REQUIRE(e_sum_theorem3(1, 1).value == zeta_even(1));
    REQUIRE(e_sum_theorem3(4, 2).value == PiValue::term(4, Rational(1, 12600)));
    for (unsigned k = 1; k <= 20; ++k)
        REQUIRE(e_sum_theorem3(k, k).value ==
                PiValue::term(k, Rational(1) / Rational(evenzeta::factorial(2 * k + 1))));
}

TEST_CASE("the two closed forms agree") {
    for (unsigned n = 1; n <= 20; ++n)
        for (unsigned k = 1; k <= n; ++k)
            REQUIRE(e_sum_theorem1(n, k).value == e_sum_theorem3(n, k).value);
}

TEST_CASE("row sums over depth telescope to the closed form") {
    REQUIRE(e_row_sum(1) == PiValue::term(1, Rational(1, 6)));
    REQUIRE(e_row_sum(2) == PiValue::term(2, Rational(7, 360)));
    REQUIRE(e_row_sum(3) == PiValue::term(3, Rational(31, 15120)));
    for (unsigned n = 1; n <= 20; ++n) {
        PiValue total = PiValue::zero();
        for (unsigned k = 1; k <= n; ++k) total += e_sum_theorem1(n, k).value;
        REQUIRE(total == e_row_sum(n));
    }
    REQUIRE_THROWS_AS(e_row_sum(0), std::domain_error);
}

TEST_CASE("domain checks on the sum routines") {
    REQUIRE_THROWS_AS(e_sum_theorem1(3, 4), std::domain_error);
    REQUIRE_THROWS_AS(e_sum_theorem1(3, 0), std::domain_error);
    REQUIRE_THROWS_AS(e_sum_theorem3(0, 0), std::domain_error);
}

TEST_CASE("Bernoulli binomial identity inside the triangle") {
    auto check = verify_bernoulli_identity(1, 1);
    REQUIRE(check.ok);
    REQUIRE(check.lhs == Rational(1, 2));
    REQUIRE(check.rhs == Rational(1, 2));
    REQUIRE(check.to_string().find("equal:") == 0);
    REQUIRE(verify_bernoulli_identity(3, 2).ok);
    REQUIRE(verify_bernoulli_identity(10, 7).ok);
    REQUIRE_THROWS_AS(verify_bernoulli_identity(2, 3), std::domain_error);
}

TEST_CASE("lattice path evaluation above the diagonal") {
    auto gv12 = verify_gessel_viennot(1, 2);
    REQUIRE(gv12.ok);
    REQUIRE(gv12.lhs == Rational(3, 2));

    auto gv23 = verify_gessel_viennot(2, 3);
    REQUIRE(gv23.ok);
    REQUIRE(gv23.rhs.is_zero());

    auto gv24 = verify_gessel_viennot(2, 4);
    REQUIRE(gv24.ok);
    REQUIRE(gv24.rhs == Rational(5, 2));

    // The right side vanishes exactly on the band n < k < 2n.
    for (unsigned n = 2; n <= 8; ++n)
        for (unsigned k = n + 1; k <= 2 * n + 2; ++k) {
            auto check = verify_gessel_viennot(n, k);
            REQUIRE(check.ok);
            REQUIRE(check.rhs.is_zero() == (k < 2 * n));
        }

    REQUIRE_THROWS_AS(verify_gessel_viennot(3, 3), std::domain_error);
    REQUIRE_THROWS_AS(verify_gessel_viennot(3, 2), std::domain_error);
}
