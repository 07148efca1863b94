#pragma once

#include "evenzeta/bernoulli.hpp"
#include "evenzeta/rational.hpp"

#include <mpfr.h>

#include <cstdio>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace evenzeta {

/// Decimal digits of pi used for float rendering. EVENZETA_PI_DIGITS
/// overrides the default of 50; values are clamped to [30, 10000].
inline int default_pi_digits() {
    if (const char* env = std::getenv("EVENZETA_PI_DIGITS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v < 30) v = 30;
        if (v > 10000) v = 10000;
        return static_cast<int>(v);
    }
    return 50;
}

/// Finite sum c_0 + c_1*pi^2 + c_2*pi^4 + ..., coefficients exact rationals.
/// Only even powers of pi are representable; the map key j stands for pi^(2j).
/// Zero coefficients are never stored.
class PiValue {
public:
    PiValue() = default;
    PiValue(const Rational& constant) { set(0, constant); }
    PiValue(long constant) { set(0, Rational(constant)); }

    /// c * pi^(2j)
    static PiValue term(unsigned j, const Rational& c) {
        PiValue v;
        v.set(j, c);
        return v;
    }
    static PiValue zero() { return PiValue(); }
    static PiValue one() { return PiValue(Rational(1)); }

    const std::map<unsigned, Rational>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool single_term() const { return c_.size() == 1; }

    /// Largest j with a nonzero pi^(2j) coefficient; zero value has degree 0.
    unsigned degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    Rational coeff(unsigned j) const {
        auto it = c_.find(j);
        return it == c_.end() ? Rational() : it->second;
    }

    PiValue& operator+=(const PiValue& o) {
        for (const auto& [j, c] : o.c_) add(j, c);
        return *this;
    }
    PiValue& operator-=(const PiValue& o) {
        for (const auto& [j, c] : o.c_) add(j, -c);
        return *this;
    }
    PiValue operator-() const {
        PiValue r;
        for (const auto& [j, c] : c_) r.c_.emplace(j, -c);
        return r;
    }
    friend PiValue operator+(PiValue a, const PiValue& b) { a += b; return a; }
    friend PiValue operator-(PiValue a, const PiValue& b) { a -= b; return a; }

    friend PiValue operator*(const PiValue& a, const PiValue& b) {
        PiValue r;
        for (const auto& [ja, ca] : a.c_)
            for (const auto& [jb, cb] : b.c_) r.add(ja + jb, ca * cb);
        return r;
    }
    PiValue& operator*=(const PiValue& o) { return *this = *this * o; }

    PiValue scaled(const Rational& s) const {
        PiValue r;
        if (s.is_zero()) return r;
        for (const auto& [j, c] : c_) r.c_.emplace(j, c * s);
        return r;
    }

    friend bool operator==(const PiValue& a, const PiValue& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PiValue& a, const PiValue& b) { return !(a == b); }

    /// Exact rendering, e.g. "5/8*pi^6" or "1 - 1/6*pi^2". Lossless via parse().
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [j, c] : c_) {
            Rational a = c;
            if (first) {
                first = false;
            } else {
                out += c.sign() < 0 ? " - " : " + ";
                a = c.abs();
            }
            out += a.to_string();
            if (j > 0) out += "*pi^" + std::to_string(2 * j);
        }
        return out;
    }

    /// Inverse of to_string(); accepts any sum of "a/b*pi^m" terms with even m.
    static PiValue parse(std::string_view s) {
        PiValue v;
        if (s.empty()) throw std::invalid_argument("PiValue: cannot parse an empty string");
        if (s == "0") return v;
        std::size_t pos = 0;
        int sign = 1;
        while (true) {
            std::size_t plus = s.find(" + ", pos);
            std::size_t minus = s.find(" - ", pos);
            std::size_t cut = std::min(plus, minus);
            std::size_t len = cut == std::string_view::npos ? cut : cut - pos;
            parse_term(v, s.substr(pos, len), sign);
            if (cut == std::string_view::npos) break;
            sign = cut == minus ? -1 : 1;
            pos = cut + 3;
        }
        return v;
    }

    /// Numeric value with pi taken to pi_digits decimal digits (0 = default).
    double to_double(int pi_digits = 0) const {
        double out = 0.0;
        with_mpfr(pi_digits, [&](mpfr_t acc) { out = mpfr_get_d(acc, MPFR_RNDN); });
        return out;
    }

    /// Decimal string with the given number of significant digits.
    std::string to_decimal(int significant_digits, int pi_digits = 0) const {
        if (significant_digits < 1) significant_digits = 1;
        std::string out;
        with_mpfr(pi_digits, [&](mpfr_t acc) {
            char fmt[16];
            std::snprintf(fmt, sizeof fmt, "%%.%dRg", significant_digits);
            char* buf = nullptr;
            mpfr_asprintf(&buf, fmt, acc);
            out = buf;
            mpfr_free_str(buf);
        });
        return out;
    }

private:
    std::map<unsigned, Rational> c_;

    void set(unsigned j, const Rational& c) {
        if (!c.is_zero()) c_[j] = c;
    }
    void add(unsigned j, const Rational& c) {
        auto it = c_.find(j);
        if (it == c_.end()) {
            if (!c.is_zero()) c_.emplace(j, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }

    template <typename F>
    void with_mpfr(int pi_digits, F&& consume) const {
        int digits = pi_digits > 0 ? pi_digits : default_pi_digits();
        if (digits < 30) digits = 30;
        auto prec = static_cast<mpfr_prec_t>(digits * 3.3219280948873623) + 64;
        mpfr_t pi2, term, acc;
        mpfr_init2(pi2, prec);
        mpfr_init2(term, prec);
        mpfr_init2(acc, prec);
        mpfr_const_pi(pi2, MPFR_RNDN);
        mpfr_sqr(pi2, pi2, MPFR_RNDN);
        mpfr_set_zero(acc, 1);
        for (const auto& [j, c] : c_) {
            if (j == 0)
                mpfr_set_q(term, c.mpq().get_mpq_t(), MPFR_RNDN);
            else {
                mpfr_pow_ui(term, pi2, j, MPFR_RNDN);
                mpfr_mul_q(term, term, c.mpq().get_mpq_t(), MPFR_RNDN);
            }
            mpfr_add(acc, acc, term, MPFR_RNDN);
        }
        consume(acc);
        mpfr_clear(acc);
        mpfr_clear(term);
        mpfr_clear(pi2);
    }

    static void parse_term(PiValue& v, std::string_view tok, int sign) {
        if (tok.empty()) throw std::invalid_argument("PiValue: empty term");
        std::string coeff_str;
        unsigned j = 0;
        std::size_t star = tok.find("*pi^");
        if (star == std::string_view::npos) {
            coeff_str = std::string(tok);
        } else {
            coeff_str = std::string(tok.substr(0, star));
            std::string pw(tok.substr(star + 4));
            if (pw.empty() || pw.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("PiValue: bad power in '" + std::string(tok) + "'");
            unsigned long m = std::strtoul(pw.c_str(), nullptr, 10);
            if (m == 0 || m % 2 != 0)
                throw std::invalid_argument("PiValue: pi power must be even and positive");
            j = static_cast<unsigned>(m / 2);
        }
        Rational c = Rational::from_string(coeff_str);
        if (sign < 0) c = -c;
        v.add(j, c);
    }
};

/// zeta(2n) = (-1)^(n-1) B_{2n} (2 pi)^{2n} / (2 (2n)!), as c * pi^(2n).
inline PiValue zeta_even(unsigned n) {
    if (n == 0) throw std::domain_error("zeta_even: argument must be positive");
    Rational c = bernoulli(2 * n) * pow2(2 * static_cast<long>(n)) /
                 Rational(2 * factorial(2 * n));
    if (n % 2 == 0) c = -c;
    return PiValue::term(n, c);
}

/// Image of the elementary symmetric function e_i: pi^(2i) / (2i+1)!.
inline PiValue zt_of_e(unsigned i) {
    return PiValue::term(i, Rational(mpz_class(1), factorial(2 * i + 1)));
}

/// Image of the complete symmetric function h_i:
/// 2 (2^{2i-1} - 1) (-1)^{i-1} B_{2i} pi^{2i} / (2i)!, with h_0 = 1.
inline PiValue zt_of_h(unsigned i) {
    if (i == 0) return PiValue::one();
    Rational c = Rational(2) * (pow2(2 * static_cast<long>(i) - 1) - Rational(1)) *
                 bernoulli(2 * i) / Rational(factorial(2 * i));
    if (i % 2 == 0) c = -c;
    return PiValue::term(i, c);
}

}  // namespace evenzeta
