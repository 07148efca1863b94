#pragma once

#include "evenzeta/bernoulli.hpp"
#include "evenzeta/pi_value.hpp"
#include "evenzeta/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace evenzeta {

/// E(2n,k): the sum of all multiple zeta values with even arguments,
/// weight 2n and depth k. Always a single positive rational multiple
/// of pi^{2n}, which the factory enforces.
struct EvenZetaSum {
    unsigned weight = 0;  // 2n
    unsigned depth = 0;   // k
    PiValue value;

    static EvenZetaSum make(unsigned n, unsigned k, PiValue v) {
        if (k < 1 || k > n)
            throw std::domain_error("EvenZetaSum: need 1 <= k <= n");
        if (!v.single_term() || v.degree() != n || v.coeff(n).sign() <= 0)
            throw std::logic_error("EvenZetaSum: value must be a positive multiple of pi^(2n)");
        return EvenZetaSum{2 * n, k, std::move(v)};
    }

    Rational coefficient() const { return value.coeff(weight / 2); }
};

/// Coefficients c_j with E(2n,k) = sum_j c_j pi^{2j} zeta(2n-2j) for
/// j = 0..floor((k-1)/2). In particular c_0 = C(2k-1,k)/2^{2k-2}.
inline std::vector<Rational> theorem1_zeta_coefficients(unsigned k) {
    if (k < 1) throw std::domain_error("theorem1_zeta_coefficients: k must be positive");
    std::vector<Rational> c;
    for (unsigned j = 0; 2 * j + 1 <= k; ++j) {
        Rational t = Rational(binomial(2 * k - 2 * j - 1, k), factorial(2 * j + 1)) *
                     pow2(2 * static_cast<long>(j) + 2 - 2 * static_cast<long>(k));
        if (j % 2) t = -t;
        c.push_back(t);
    }
    return c;
}

/// E(2n,k) as the alternating zeta convolution, in the pi-power form that
/// never divides by a Bernoulli number.
inline EvenZetaSum e_sum_theorem1(unsigned n, unsigned k) {
    if (k < 1 || k > n) throw std::domain_error("e_sum_theorem1: need 1 <= k <= n");
    PiValue v;
    auto cs = theorem1_zeta_coefficients(k);
    for (unsigned j = 0; j < cs.size(); ++j)
        v += PiValue::term(j, cs[j]) * zeta_even(n - j);
    return EvenZetaSum::make(n, k, std::move(v));
}

/// E(2n,k) as a single Bernoulli sum times pi^{2n}/(2n+1)!.
inline EvenZetaSum e_sum_theorem3(unsigned n, unsigned k) {
    if (k < 1 || k > n) throw std::domain_error("e_sum_theorem3: need 1 <= k <= n");
    Rational s;
    for (unsigned i = 0; i <= n - k; ++i)
        s += Rational(binomial(n - i, k) * binomial(2 * n + 1, 2 * i)) * Rational(2) *
             (pow2(2 * static_cast<long>(i) - 1) - Rational(1)) * bernoulli(2 * i);
    Rational pref(mpz_class(1), factorial(2 * n + 1));
    if ((n - k) % 2 == 0) pref = -pref;  // (-1)^(n-k-1)
    return EvenZetaSum::make(n, k, PiValue::term(n, pref * s));
}

/// Sum over k of E(2n,k) in closed form:
/// 2(2^{2n-1}-1)(-1)^{n-1} B_{2n} pi^{2n} / (2n)!.
inline PiValue e_row_sum(unsigned n) {
    if (n < 1) throw std::domain_error("e_row_sum: n must be positive");
    return zt_of_h(n);
}

/// Outcome of an exact two-sided identity check.
struct IdentityCheck {
    bool ok = false;
    Rational lhs;
    Rational rhs;

    std::string to_string() const {
        return std::string(ok ? "equal" : "MISMATCH") + ": lhs = " + lhs.to_string() +
               ", rhs = " + rhs.to_string();
    }
};

namespace detail {

/// Left side shared by both Bernoulli-binomial identities:
/// sum_i C(2k-2i-1,k) C(2n+1,2i+1) B_{2n-2i}, i = 0..floor((k-1)/2).
/// Terms with 2i+1 > 2n+1 carry a zero binomial and are skipped, which
/// also keeps the Bernoulli index nonnegative when k exceeds n.
inline Rational bernoulli_identity_lhs(unsigned n, unsigned k) {
    Rational s;
    for (unsigned i = 0; 2 * i + 1 <= k && i <= n; ++i)
        s += Rational(binomial(2 * k - 2 * i - 1, k) * binomial(2 * n + 1, 2 * i + 1)) *
             bernoulli(2 * (n - i));
    return s;
}

}  // namespace detail

/// The Bernoulli-number identity equivalent to agreement of the two
/// closed forms, valid for k <= n. Both sides are evaluated independently.
inline IdentityCheck verify_bernoulli_identity(unsigned n, unsigned k) {
    if (k < 1 || k > n)
        throw std::domain_error("verify_bernoulli_identity: need 1 <= k <= n");
    Rational lhs = detail::bernoulli_identity_lhs(n, k);
    Rational s;
    for (unsigned i = 0; i <= n - k; ++i)
        s += Rational(binomial(n - i, k) * binomial(2 * n + 1, 2 * i)) *
             (pow2(2 * static_cast<long>(i) - 1) - Rational(1)) * bernoulli(2 * i);
    Rational rhs = pow2(2 * static_cast<long>(k) - 2 * static_cast<long>(n)) * s;
    if (k % 2) rhs = -rhs;
    return {lhs == rhs, std::move(lhs), std::move(rhs)};
}

/// Gessel-Viennot identity on the complementary range k > n: the same
/// left side equals (2n+1)/2 * C(2k-2n, k), zero unless k >= 2n.
inline IdentityCheck verify_gessel_viennot(unsigned n, unsigned k) {
    if (n < 1 || k <= n)
        throw std::domain_error("verify_gessel_viennot: need k > n >= 1");
    Rational lhs = detail::bernoulli_identity_lhs(n, k);
    Rational rhs = Rational(2 * static_cast<long>(n) + 1, 2) * Rational(binomial(2 * k - 2 * n, k));
    return {lhs == rhs, std::move(lhs), std::move(rhs)};
}

}  // namespace evenzeta
