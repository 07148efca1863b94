#include "evenzeta/symfunc.hpp"

#include "evenzeta/closed_form.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

using evenzeta::Partition;
using evenzeta::PiValue;
using evenzeta::Rational;
using evenzeta::SymPoly;
using evenzeta::VerifyReport;
using evenzeta::basis_e;
using evenzeta::basis_h;
using evenzeta::basis_p;
using evenzeta::e_sum_theorem1;
using evenzeta::monomial_mul;
using evenzeta::n_nk;
using evenzeta::partitions_of;
using evenzeta::partitions_with_length;
using evenzeta::report_check;
using evenzeta::to_p_basis;
using evenzeta::zt;
using evenzeta::zt_of_e;
using evenzeta::zt_of_h;

TEST_CASE("partition basics") {
    Partition lam({1, 3, 2});
    REQUIRE(lam.parts() == std::vector<unsigned>{3, 2, 1});
    REQUIRE(lam.weight() == 6);
    REQUIRE(lam.length() == 3);
    REQUIRE(lam.to_string() == "(3,2,1)");

    Partition rep({2, 2, 1});
    std::map<unsigned, unsigned> mult = {{1, 1}, {2, 2}};
    REQUIRE(rep.multiplicity() == mult);

    REQUIRE(Partition({2, 1}) < Partition({3}));
    REQUIRE_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("partition enumeration") {
    REQUIRE(partitions_of(0).size() == 1);
    REQUIRE(partitions_of(5).size() == 7);
    REQUIRE(partitions_of(10).size() == 42);
    REQUIRE(partitions_of(4).front() == Partition({4}));

    auto len2 = partitions_with_length(4, 2);
    REQUIRE(len2 == std::vector<Partition>{Partition({3, 1}), Partition({2, 2})});
}

TEST_CASE("monomial multiplication on small fixtures") {
    unsigned cap = 12;
    SymPoly m1 = SymPoly::monomial(Partition({1}), cap);
    SymPoly prod = monomial_mul(m1, m1);
    SymPoly expected = SymPoly::monomial(Partition({2}), cap);
    expected.add_term(Partition({1, 1}), Rational(2));
    REQUIRE(prod == expected);

    REQUIRE(basis_e(2, cap) == SymPoly::monomial(Partition({1, 1}), cap));
    SymPoly h2 = SymPoly::monomial(Partition({2}), cap);
    h2.add_term(Partition({1, 1}), Rational(1));
    REQUIRE(basis_h(2, cap) == h2);
    REQUIRE(basis_p(3, cap) == SymPoly::monomial(Partition({3}), cap));

    // e1^2 - 2 e2 = p2.
    SymPoly e1sq = monomial_mul(basis_e(1, cap), basis_e(1, cap));
    REQUIRE(e1sq - basis_e(2, cap).scaled(Rational(2)) == basis_p(2, cap));

    REQUIRE(monomial_mul(SymPoly::one(cap), basis_h(4, cap)) == basis_h(4, cap));
    REQUIRE(monomial_mul(basis_h(3, cap), basis_e(2, cap)) ==
            monomial_mul(basis_e(2, cap), basis_h(3, cap)));
}

TEST_CASE("products above the weight cap are dropped") {
    SymPoly p2 = basis_p(2, 3);
    REQUIRE(monomial_mul(p2, p2).is_zero());
    // Content at or below the cap is kept: p2*p1 = m(3) + m(2,1).
    SymPoly p2p1 = SymPoly::monomial(Partition({3}), 3);
    p2p1.add_term(Partition({2, 1}), Rational(1));
    REQUIRE(monomial_mul(basis_p(2, 3), basis_p(1, 3)) == p2p1);
}

TEST_CASE("integer fast path agrees with the rational path") {
    SymPoly a = basis_h(3, 12), b = basis_e(2, 12);
    SymPoly scaled = monomial_mul(a.scaled(Rational(1, 3)), b.scaled(Rational(1, 5)));
    REQUIRE(scaled == monomial_mul(a, b).scaled(Rational(1, 15)));
}

TEST_CASE("monomial count generating elements") {
    unsigned cap = 12;
    REQUIRE(n_nk(3, 2, cap) == SymPoly::monomial(Partition({2, 1}), cap));

    SymPoly n42 = SymPoly::monomial(Partition({3, 1}), cap);
    n42.add_term(Partition({2, 2}), Rational(1));
    REQUIRE(n_nk(4, 2, cap) == n42);

    for (unsigned k = 1; k <= 5; ++k) REQUIRE(n_nk(k, k, cap) == basis_e(k, cap));
    REQUIRE(n_nk(3, 5, cap).is_zero());

    for (unsigned n = 1; n <= 6; ++n) {
        SymPoly total = SymPoly::zero(cap);
        for (unsigned k = 1; k <= n; ++k) total += n_nk(n, k, cap);
        REQUIRE(total == basis_h(n, cap));
    }
    REQUIRE_THROWS_AS(n_nk(13, 2, 12), std::domain_error);
}

TEST_CASE("weight cap ceiling is enforced") {
    REQUIRE_THROWS_AS(SymPoly::zero(16), std::invalid_argument);
    REQUIRE_THROWS_AS(basis_h(3, 17), std::invalid_argument);
}

TEST_CASE("identity suites pass on a midsize range") {
    auto infprod = evenzeta::verify_infprod(8);
    REQUIRE(infprod.ok);
    REQUIRE(infprod.checked > 0);
    REQUIRE(evenzeta::verify_sfi(8).ok);
    REQUIRE(evenzeta::verify_nexp(8).ok);
    REQUIRE(evenzeta::verify_newton(10).ok);
}

TEST_CASE("report_check flags a mismatch") {
    VerifyReport rep{"negative control"};
    SymPoly lhs = basis_e(2, 12);
    SymPoly rhs = basis_e(2, 12);
    rhs.add_term(Partition({1}), Rational(1));
    REQUIRE_FALSE(report_check(rep, "perturbed", lhs, rhs));
    REQUIRE_FALSE(rep.ok);
    REQUIRE(rep.failed == 1);
}

TEST_CASE("power sum basis conversion fixtures") {
    std::map<Partition, Rational> e2 = {{Partition({1, 1}), Rational(1, 2)},
                                        {Partition({2}), Rational(-1, 2)}};
    REQUIRE(to_p_basis(basis_e(2, 12)) == e2);

    std::map<Partition, Rational> h2 = {{Partition({1, 1}), Rational(1, 2)},
                                        {Partition({2}), Rational(1, 2)}};
    REQUIRE(to_p_basis(basis_h(2, 12)) == h2);

    std::map<Partition, Rational> p5 = {{Partition({5}), Rational(1)}};
    REQUIRE(to_p_basis(basis_p(5, 12)) == p5);
}

TEST_CASE("power sum conversion round-trips random combinations") {
    std::mt19937 gen(42);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
    unsigned cap = 8;
    for (int trial = 0; trial < 10; ++trial) {
        std::map<Partition, Rational> expected;
        SymPoly poly = SymPoly::zero(cap);
        for (unsigned w = 1; w <= 5; ++w)
            for (const auto& lam : partitions_of(w)) {
                Rational c(num(gen), den(gen));
                if (c.is_zero()) continue;
                expected[lam] = c;
                SymPoly prod = SymPoly::one(cap);
                for (unsigned part : lam.parts()) prod = monomial_mul(prod, basis_p(part, cap));
                poly += prod.scaled(c);
            }
        REQUIRE(to_p_basis(poly) == expected);
    }
}

TEST_CASE("zeta specialization") {
    for (unsigned i = 1; i <= 8; ++i) {
        REQUIRE(zt(basis_e(i, 12)) == zt_of_e(i));
        REQUIRE(zt(basis_h(i, 12)) == zt_of_h(i));
    }
    REQUIRE(zt(SymPoly::one(12)) == PiValue::one());
}

TEST_CASE("zeta specialization is a ring homomorphism on samples") {
    SymPoly a = basis_h(3, 12), b = basis_e(2, 12), c = basis_p(4, 12);
    REQUIRE(zt(monomial_mul(a, b)) == zt(a) * zt(b));
    REQUIRE(zt(monomial_mul(monomial_mul(a, b), c)) == zt(a) * zt(b) * zt(c));
    REQUIRE(zt(a + b.scaled(Rational(2, 7))) == zt(a) + zt(b).scaled(Rational(2, 7)));
}

TEST_CASE("monomial sums specialize to the closed form") {
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned k = 1; k <= n; ++k)
            REQUIRE(zt(n_nk(n, k, 12)) == e_sum_theorem1(n, k).value);
}
