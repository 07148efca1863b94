#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace evenzeta {

/// Exact arbitrary-precision rational, always canonical:
/// denominator > 0 and gcd(|numerator|, denominator) = 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(unsigned long n) : v_(n) {}
    Rational(mpz_class n) : v_(std::move(n)) {}
    Rational(long n, long d) { init(mpz_class(n), mpz_class(d)); }
    Rational(const mpz_class& n, const mpz_class& d) { init(n, d); }

    /// Parses "a" or "a/b" (base 10). Throws on malformed input or b = 0.
    static Rational from_string(const std::string& s) {
        mpq_class q;
        try {
            q = mpq_class(s, 10);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
        if (q.get_den() == 0)
            throw std::domain_error("Rational: zero denominator in '" + s + "'");
        q.canonicalize();
        return raw(std::move(q));
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& mpq() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return raw(mpq_class(-v_)); }
    Rational abs() const { return raw(mpq_class(::abs(v_))); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Integer power; e < 0 requires a nonzero value.
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        bool inv = e < 0;
        if (inv && is_zero()) throw std::domain_error("Rational: 0 to a negative power");
        unsigned long ue = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), ue);
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), ue);
        return inv ? Rational(d, n) : Rational(n, d);
    }

    /// "a" when integral, otherwise "a/b".
    std::string to_string() const { return v_.get_str(); }

    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;

    void init(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(n) / mpq_class(d);
    }
    static Rational raw(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);
        return r;
    }
};

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);  // 0 when k > n
    return b;
}

inline mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

/// 2^e as an exact rational; e may be negative.
inline Rational pow2(long e) {
    return Rational(2).pow(e);
}

}  // namespace evenzeta
