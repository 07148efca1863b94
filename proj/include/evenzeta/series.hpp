#pragma once

#include "evenzeta/pi_value.hpp"
#include "evenzeta/rational.hpp"
#include "evenzeta/report.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace evenzeta {

/// Truncated power series Σ_n a_n·π^{2n}·t^n with rational a_n. The π^{2n}
/// factor is implicit in the grading and never stored, so arithmetic stays
/// exact. Operations on mismatched orders truncate to the smaller one.
class GradedSeries1 {
public:
    explicit GradedSeries1(unsigned order) : a_(order + 1) {}

    static GradedSeries1 constant(const Rational& c, unsigned order) {
        GradedSeries1 s(order);
        s.a_[0] = c;
        return s;
    }

    unsigned order() const { return static_cast<unsigned>(a_.size()) - 1; }
    const Rational& operator[](unsigned n) const { return a_.at(n); }
    Rational& operator[](unsigned n) { return a_.at(n); }

    GradedSeries1 truncated(unsigned new_order) const {
        GradedSeries1 r(std::min(new_order, order()));
        for (unsigned n = 0; n <= r.order(); ++n) r.a_[n] = a_[n];
        return r;
    }

    GradedSeries1 scaled(const Rational& c) const {
        GradedSeries1 r(order());
        for (unsigned n = 0; n <= order(); ++n) r.a_[n] = a_[n] * c;
        return r;
    }

    friend GradedSeries1 operator+(const GradedSeries1& x, const GradedSeries1& y) {
        GradedSeries1 r(std::min(x.order(), y.order()));
        for (unsigned n = 0; n <= r.order(); ++n) r.a_[n] = x.a_[n] + y.a_[n];
        return r;
    }

    friend GradedSeries1 operator-(const GradedSeries1& x, const GradedSeries1& y) {
        GradedSeries1 r(std::min(x.order(), y.order()));
        for (unsigned n = 0; n <= r.order(); ++n) r.a_[n] = x.a_[n] - y.a_[n];
        return r;
    }

    friend GradedSeries1 operator*(const GradedSeries1& x, const GradedSeries1& y) {
        GradedSeries1 r(std::min(x.order(), y.order()));
        for (unsigned n = 0; n <= r.order(); ++n)
            for (unsigned i = 0; i <= n; ++i) r.a_[n] += x.a_[i] * y.a_[n - i];
        return r;
    }

    friend bool operator==(const GradedSeries1& x, const GradedSeries1& y) {
        return x.a_ == y.a_;
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    GradedSeries1 reciprocal() const {
        if (a_[0].is_zero())
            throw std::domain_error("GradedSeries1: reciprocal needs a nonzero constant term");
        GradedSeries1 r(order());
        r.a_[0] = Rational(1) / a_[0];
        for (unsigned n = 1; n <= order(); ++n) {
            Rational s;
            for (unsigned i = 1; i <= n; ++i) s += a_[i] * r.a_[n - i];
            r.a_[n] = -s / a_[0];
        }
        return r;
    }

private:
    std::vector<Rational> a_;
};

/// Truncated bivariate series Σ a_{n,k}·π^{2n}·t^n·s^k, 0 ≤ n ≤ order_t,
/// 0 ≤ k ≤ order_s. Only s-degree ≤ t-degree entries are ever nonzero here.
class GradedSeries2 {
public:
    GradedSeries2(unsigned order_t, unsigned order_s)
        : c_(order_t + 1, std::vector<Rational>(order_s + 1)) {}

    unsigned order_t() const { return static_cast<unsigned>(c_.size()) - 1; }
    unsigned order_s() const { return static_cast<unsigned>(c_[0].size()) - 1; }

    const Rational& coeff(unsigned n, unsigned k) const { return c_.at(n).at(k); }
    Rational& at(unsigned n, unsigned k) { return c_.at(n).at(k); }

    /// Σ_k a_{n,k}: the value of row n at s = 1.
    Rational row_sum(unsigned n) const {
        Rational s;
        for (const auto& c : c_.at(n)) s += c;
        return s;
    }

private:
    std::vector<std::vector<Rational>> c_;
};

/// sin(π√t)/(π√t) as a graded series: a_j = (−1)^j/(2j+1)!.
inline GradedSeries1 sinc_series(unsigned order) {
    GradedSeries1 s(order);
    for (unsigned j = 0; j <= order; ++j) {
        Rational c(mpz_class(1), factorial(2 * j + 1));
        s[j] = j % 2 ? -c : c;
    }
    return s;
}

/// π√t/sin(π√t); coefficient n equals zt_of_h(n)/π^{2n}.
inline GradedSeries1 inv_sinc_series(unsigned order) {
    return sinc_series(order).reciprocal();
}

/// π√t·cot(π√t): a_0 = 1, a_i = −2·ζ(2i)/π^{2i} for i ≥ 1.
inline GradedSeries1 cot_series(unsigned order) {
    GradedSeries1 s(order);
    s[0] = Rational(1);
    for (unsigned i = 1; i <= order; ++i) s[i] = Rational(-2) * zeta_even(i).coeff(i);
    return s;
}

/// The generating function F(t,s) = sin(π√((1−s)t))/(√(1−s)·sin(π√t)),
/// expanded to the given orders. Coefficient (n,k) equals E(2n,k)/π^{2n}.
inline GradedSeries2 f_expand(unsigned order_t, unsigned order_s) {
    if (order_s > order_t) throw std::domain_error("f_expand: need order_s <= order_t");
    GradedSeries1 r = inv_sinc_series(order_t);
    GradedSeries2 f(order_t, order_s);
    for (unsigned k = 0; k <= order_s; ++k)
        for (unsigned n = k; n <= order_t; ++n) {
            Rational s;
            for (unsigned j = k; j <= n; ++j) {
                Rational a(binomial(j, k), factorial(2 * j + 1));
                if ((j + k) % 2) a = -a;
                s += a * r[n - j];
            }
            f.at(n, k) = s;
        }
    return f;
}

/// G_k(t), the s^k coefficient of F(t,s): the numerator transform
/// a_j = (−1)^{j+k}·C(j,k)/(2j+1)! times π√t/sin(π√t).
inline GradedSeries1 g_k_series(unsigned k, unsigned order) {
    if (order < k) throw std::domain_error("g_k_series: need order >= k");
    GradedSeries1 base(order);
    for (unsigned j = k; j <= order; ++j) {
        Rational c(binomial(j, k), factorial(2 * j + 1));
        if ((j + k) % 2) c = -c;
        base[j] = c;
    }
    return base * inv_sinc_series(order);
}

namespace detail {

using Poly = std::vector<Rational>;  // ascending powers of x

inline Poly poly_trimmed(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

inline bool poly_equal(const Poly& a, const Poly& b) {
    return poly_trimmed(a) == poly_trimmed(b);
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t j = 0; j < a.size(); ++j) r[j] += a[j];
    for (std::size_t j = 0; j < b.size(); ++j) r[j] += b[j];
    return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t j = 0; j < a.size(); ++j) r[j] += a[j];
    for (std::size_t j = 0; j < b.size(); ++j) r[j] -= b[j];
    return r;
}

inline Poly poly_scale(const Poly& a, const Rational& c) {
    Poly r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r[j] = a[j] * c;
    return r;
}

/// x·p'(x): coefficient j maps to j·p_j.
inline Poly poly_x_dx(const Poly& a) {
    Poly r(a.size());
    for (std::size_t j = 1; j < a.size(); ++j) r[j] = a[j] * Rational(static_cast<long>(j));
    return r;
}

inline Poly poly_mul_x(const Poly& a) {
    Poly r(a.size() + 1);
    for (std::size_t j = 0; j < a.size(); ++j) r[j + 1] = a[j];
    return r;
}

inline std::string poly_to_string(const Poly& p) {
    Poly t = poly_trimmed(p);
    if (t.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (t[j].is_zero()) continue;
        Rational c = t[j];
        if (first) {
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            c = c.abs();
        }
        out += c.to_string();
        if (j == 1) out += "*x";
        if (j > 1) out += "*x^" + std::to_string(j);
    }
    return out;
}

/// Substitute x = π²t: x^j becomes the graded monomial at position j.
inline GradedSeries1 poly_to_series(const Poly& p, unsigned order) {
    GradedSeries1 s(order);
    for (std::size_t j = 0; j < p.size() && j <= order; ++j)
        s[static_cast<unsigned>(j)] = p[j];
    return s;
}

}  // namespace detail

enum class PqKind { P, Q };

/// One of the rational polynomials P_k(x), Q_k(x) satisfying
/// G_k(t) = P_k(π²t)·π√t·cot(π√t) + Q_k(π²t).
struct PqPolynomial {
    PqKind kind = PqKind::P;
    unsigned index = 0;
    std::vector<Rational> coeffs;  // ascending powers of x

    Rational at(unsigned j) const {
        return j < coeffs.size() ? coeffs[j] : Rational();
    }
    unsigned degree() const {
        auto t = detail::poly_trimmed(coeffs);
        return t.empty() ? 0 : static_cast<unsigned>(t.size()) - 1;
    }
    std::string to_string() const { return detail::poly_to_string(coeffs); }
};

/// Closed forms: P_k(x) = −Σ_j (−4x)^j/(2^{2k−1}(2j+1)!)·C(2k−2j−1,k) over
/// 2j+1 ≤ k, and Q_k(x) = Σ_j (−4x)^j/(2^{2k}(2j)!)·C(2k−2j,k) over 2j ≤ k.
inline std::pair<PqPolynomial, PqPolynomial> pq_polynomials(unsigned k) {
    PqPolynomial p{PqKind::P, k, {}};
    PqPolynomial q{PqKind::Q, k, {}};
    if (k >= 1) {
        p.coeffs.assign((k - 1) / 2 + 1, Rational());
        for (unsigned j = 0; 2 * j + 1 <= k; ++j) {
            Rational c = Rational(binomial(2 * k - 2 * j - 1, k), factorial(2 * j + 1)) *
                         pow2(2 * static_cast<long>(j) - 2 * static_cast<long>(k) + 1);
            if (j % 2 == 0) c = -c;
            p.coeffs[j] = c;
        }
    }
    q.coeffs.assign(k / 2 + 1, Rational());
    for (unsigned j = 0; 2 * j <= k; ++j) {
        Rational c = Rational(binomial(2 * k - 2 * j, k), factorial(2 * j)) *
                     pow2(2 * static_cast<long>(j) - 2 * static_cast<long>(k));
        if (j % 2) c = -c;
        q.coeffs[j] = c;
    }
    return {std::move(p), std::move(q)};
}

/// One step of the P/Q recurrence: the pair (P_{k+1}, Q_{k+1}) implied
/// by (P_k, Q_k). Exposed so tests can drive it independently of the
/// closed forms.
inline std::pair<std::vector<Rational>, std::vector<Rational>> pq_recurrence_step(
    unsigned k, const std::vector<Rational>& p, const std::vector<Rational>& q) {
    using namespace detail;
    Rational inv(1, static_cast<long>(k) + 1);
    Poly pn = poly_scale(p, Rational(static_cast<long>(k)));
    pn = poly_sub(pn, poly_x_dx(p));
    pn = poly_sub(pn, poly_scale(q, Rational(1, 2)));
    pn = poly_scale(pn, inv);
    Poly qn = poly_scale(q, Rational(2 * static_cast<long>(k) + 1, 2));
    qn = poly_sub(qn, poly_x_dx(q));
    qn = poly_add(qn, poly_scale(poly_mul_x(p), Rational(1, 2)));
    qn = poly_scale(qn, inv);
    return {std::move(pn), std::move(qn)};
}

/// Checks the closed forms against both recurrences for 0 ≤ k < k_max.
inline VerifyReport verify_pq_recurrence(unsigned k_max) {
    VerifyReport rep("pq-recurrence");
    for (unsigned k = 0; k < k_max; ++k) {
        auto [p, q] = pq_polynomials(k);
        auto [pn, qn] = pq_recurrence_step(k, p.coeffs, q.coeffs);
        auto [pc, qc] = pq_polynomials(k + 1);
        bool okp = detail::poly_equal(pn, pc.coeffs);
        bool okq = detail::poly_equal(qn, qc.coeffs);
        std::string tag = "_" + std::to_string(k + 1) + " closed form vs recurrence";
        rep.add(okp, okp ? "P" + tag
                         : "P" + tag + ": closed " + detail::poly_to_string(pc.coeffs) +
                               ", recurrence " + detail::poly_to_string(pn));
        rep.add(okq, okq ? "Q" + tag
                         : "Q" + tag + ": closed " + detail::poly_to_string(qc.coeffs) +
                               ", recurrence " + detail::poly_to_string(qn));
    }
    return rep;
}

/// Checks G_k = P_k(π²t)·π√t·cot(π√t) + Q_k(π²t) coefficient-wise to the
/// given order.
inline VerifyReport verify_gfun(unsigned k, unsigned order) {
    if (order < k) throw std::domain_error("verify_gfun: need order >= k");
    VerifyReport rep("gfun");
    auto [p, q] = pq_polynomials(k);
    GradedSeries1 lhs = g_k_series(k, order);
    GradedSeries1 rhs = detail::poly_to_series(p.coeffs, order) * cot_series(order) +
                        detail::poly_to_series(q.coeffs, order);
    for (unsigned n = 0; n <= order; ++n)
        rep.add(lhs[n] == rhs[n], "G_" + std::to_string(k) + " coefficient t^" +
                                      std::to_string(n) + ": " + lhs[n].to_string() +
                                      " vs " + rhs[n].to_string());
    return rep;
}

}  // namespace evenzeta
