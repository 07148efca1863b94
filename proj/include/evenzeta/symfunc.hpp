#pragma once

#include "evenzeta/pi_value.hpp"
#include "evenzeta/rational.hpp"
#include "evenzeta/report.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace evenzeta {

inline constexpr unsigned kDefaultWeightCap = 12;
inline constexpr unsigned kMaxWeightCap = 15;  // exponents must fit in a nibble

/// Weakly decreasing tuple of positive integers. The empty partition has
/// weight 0. Ordered lexicographically on the parts vector.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<unsigned> parts)
        : Partition(std::vector<unsigned>(parts)) {}
    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
        if (!parts_.empty() && parts_.back() == 0)
            throw std::invalid_argument("Partition: parts must be positive");
    }

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned weight() const {
        unsigned w = 0;
        for (unsigned p : parts_) w += p;
        return w;
    }
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }

    /// part value -> how many times it occurs
    std::map<unsigned, unsigned> multiplicity() const {
        std::map<unsigned, unsigned> m;
        for (unsigned p : parts_) ++m[p];
        return m;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<unsigned> parts_;
};

namespace detail {

inline void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// All partitions of n, in descending lexicographic order.
inline std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    detail::partitions_rec(n, n == 0 ? 1 : n, cur, out);
    return out;
}

/// Partitions of n with exactly k parts.
inline std::vector<Partition> partitions_with_length(unsigned n, unsigned k) {
    std::vector<Partition> out;
    for (auto& lam : partitions_of(n))
        if (lam.length() == k) out.push_back(lam);
    return out;
}

/// Symmetric polynomial in the monomial basis, truncated beyond weight_cap.
/// Stored coefficients are always nonzero.
class SymPoly {
public:
    explicit SymPoly(unsigned weight_cap) : cap_(weight_cap) {
        if (weight_cap > kMaxWeightCap)
            throw std::invalid_argument("SymPoly: weight_cap above 15 is unsupported");
    }

    static SymPoly zero(unsigned cap) { return SymPoly(cap); }
    static SymPoly one(unsigned cap) {
        SymPoly s(cap);
        s.add_term(Partition{}, Rational(1));
        return s;
    }
    static SymPoly monomial(const Partition& lam, unsigned cap) {
        SymPoly s(cap);
        s.add_term(lam, Rational(1));
        return s;
    }

    unsigned weight_cap() const { return cap_; }
    const std::map<Partition, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    Rational coeff(const Partition& lam) const {
        auto it = t_.find(lam);
        return it == t_.end() ? Rational() : it->second;
    }

    void add_term(const Partition& lam, const Rational& c) {
        if (c.is_zero() || lam.weight() > cap_) return;
        auto it = t_.find(lam);
        if (it == t_.end()) {
            t_.emplace(lam, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }

    SymPoly& operator+=(const SymPoly& o) {
        for (const auto& [lam, c] : o.t_) add_term(lam, c);
        return *this;
    }
    SymPoly& operator-=(const SymPoly& o) {
        for (const auto& [lam, c] : o.t_) add_term(lam, -c);
        return *this;
    }
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { a += b; return a; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { a -= b; return a; }

    SymPoly scaled(const Rational& s) const {
        SymPoly r(cap_);
        if (s.is_zero()) return r;
        for (const auto& [lam, c] : t_) r.t_.emplace(lam, c * s);
        return r;
    }

    /// Equality of terms; caps need not match.
    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

    std::string to_string() const {
        if (t_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [lam, c] : t_) {
            Rational a = c;
            if (first) {
                first = false;
            } else {
                out += c.sign() < 0 ? " - " : " + ";
                a = c.abs();
            }
            if (lam.length() == 0) {
                out += a.to_string();
            } else {
                if (a != Rational(1)) out += a.to_string() + "*";
                out += "m" + lam.to_string();
            }
        }
        return out;
    }

private:
    unsigned cap_;
    std::map<Partition, Rational> t_;
};

namespace detail {

/// All distinct monomials of m_lambda in m_vars variables, as packed
/// exponent vectors: variable i occupies bits [4i, 4i+4). Valid because
/// every exponent is at most the weight cap, which is at most 15.
inline std::vector<std::uint64_t> monomial_keys(const Partition& lam, unsigned m_vars) {
    std::vector<unsigned> v(m_vars, 0);
    const auto& parts = lam.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) v[i] = parts[i];
    std::sort(v.begin(), v.end());
    std::vector<std::uint64_t> keys;
    do {
        std::uint64_t key = 0;
        for (unsigned i = 0; i < m_vars; ++i) key |= static_cast<std::uint64_t>(v[i]) << (4 * i);
        keys.push_back(key);
    } while (std::next_permutation(v.begin(), v.end()));
    return keys;
}

/// True when the packed exponent vector is weakly decreasing, i.e. is the
/// canonical representative of its partition.
inline bool nibbles_decreasing(std::uint64_t key, unsigned m_vars) {
    for (unsigned i = 0; i + 1 < m_vars; ++i) {
        std::uint64_t rest = key >> (4 * i + 4);
        if (rest == 0) return true;
        if (((key >> (4 * i)) & 0xF) < (rest & 0xF)) return false;
    }
    return true;
}

inline Partition partition_from_key(std::uint64_t key, unsigned m_vars) {
    std::vector<unsigned> parts;
    for (unsigned i = 0; i < m_vars; ++i) {
        unsigned e = static_cast<unsigned>((key >> (4 * i)) & 0xF);
        if (e == 0) break;  // decreasing keys have all zeros at the tail
        parts.push_back(e);
    }
    return Partition(std::move(parts));
}

inline mpz_class mpz_from_int128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    mpz_class r(static_cast<unsigned long>(u >> 64));
    r <<= 64;
    r += mpz_class(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull));
    if (neg) r = -r;
    return r;
}

struct ExpandedOperand {
    std::vector<std::vector<std::uint64_t>> keys;  // per term
    std::vector<unsigned> degree;                  // per term
    std::vector<Rational> coeff;                   // per term
    std::vector<long> small;                       // per term, valid if integral
    bool integral = true;
};

inline ExpandedOperand expand_operand(const SymPoly& a, unsigned m_vars) {
    ExpandedOperand e;
    constexpr long kSmallBound = 1L << 31;
    for (const auto& [lam, c] : a.terms()) {
        e.keys.push_back(monomial_keys(lam, m_vars));
        e.degree.push_back(lam.weight());
        e.coeff.push_back(c);
        long s = 0;
        if (e.integral && c.is_integer() && c.numerator().fits_slong_p()) {
            s = c.numerator().get_si();
            if (s > kSmallBound || s < -kSmallBound) e.integral = false;
        } else {
            e.integral = false;
        }
        e.small.push_back(s);
    }
    return e;
}

}  // namespace detail

/// Exact product of two monomial-basis symmetric polynomials, computed by
/// expansion in weight_cap concrete variables and re-collection of the
/// weakly decreasing exponent vectors. Truncates at the smaller cap.
inline SymPoly monomial_mul(const SymPoly& a, const SymPoly& b) {
    unsigned cap = std::min(a.weight_cap(), b.weight_cap());
    SymPoly out(cap);
    if (a.is_zero() || b.is_zero()) return out;

    // constants need no expansion
    auto constant_of = [](const SymPoly& s) -> const Rational* {
        if (s.terms().size() == 1 && s.terms().begin()->first.length() == 0)
            return &s.terms().begin()->second;
        return nullptr;
    };
    if (const Rational* ca = constant_of(a)) {
        for (const auto& [lam, c] : b.terms()) out.add_term(lam, c * *ca);
        return out;
    }
    if (const Rational* cb = constant_of(b)) {
        for (const auto& [lam, c] : a.terms()) out.add_term(lam, c * *cb);
        return out;
    }

    unsigned m_vars = cap;
    auto ea = detail::expand_operand(a, m_vars);
    auto eb = detail::expand_operand(b, m_vars);

    if (ea.integral && eb.integral) {
        std::unordered_map<std::uint64_t, __int128> acc;
        for (std::size_t i = 0; i < ea.keys.size(); ++i)
            for (std::size_t j = 0; j < eb.keys.size(); ++j) {
                if (ea.degree[i] + eb.degree[j] > cap) continue;
                __int128 c = static_cast<__int128>(ea.small[i]) * eb.small[j];
                for (std::uint64_t ka : ea.keys[i])
                    for (std::uint64_t kb : eb.keys[j]) {
                        std::uint64_t k = ka + kb;
                        if (detail::nibbles_decreasing(k, m_vars)) acc[k] += c;
                    }
            }
        for (const auto& [k, c] : acc)
            out.add_term(detail::partition_from_key(k, m_vars),
                         Rational(detail::mpz_from_int128(c)));
        return out;
    }

    std::unordered_map<std::uint64_t, Rational> acc;
    for (std::size_t i = 0; i < ea.keys.size(); ++i)
        for (std::size_t j = 0; j < eb.keys.size(); ++j) {
            if (ea.degree[i] + eb.degree[j] > cap) continue;
            Rational c = ea.coeff[i] * eb.coeff[j];
            for (std::uint64_t ka : ea.keys[i])
                for (std::uint64_t kb : eb.keys[j]) {
                    std::uint64_t k = ka + kb;
                    if (detail::nibbles_decreasing(k, m_vars)) acc[k] += c;
                }
        }
    for (const auto& [k, c] : acc)
        out.add_term(detail::partition_from_key(k, m_vars), c);
    return out;
}

/// e_i = m_{1^i}
inline SymPoly basis_e(unsigned i, unsigned cap = kDefaultWeightCap) {
    if (i > cap) throw std::domain_error("basis_e: index exceeds weight cap");
    return SymPoly::monomial(Partition(std::vector<unsigned>(i, 1)), cap);
}

/// h_i = sum of m_lambda over all partitions of i
inline SymPoly basis_h(unsigned i, unsigned cap = kDefaultWeightCap) {
    if (i > cap) throw std::domain_error("basis_h: index exceeds weight cap");
    SymPoly s(cap);
    for (const auto& lam : partitions_of(i)) s.add_term(lam, Rational(1));
    return s;
}

/// p_i = m_{(i)}, with p_0 = 1 as the empty product
inline SymPoly basis_p(unsigned i, unsigned cap = kDefaultWeightCap) {
    if (i > cap) throw std::domain_error("basis_p: index exceeds weight cap");
    if (i == 0) return SymPoly::one(cap);
    return SymPoly::monomial(Partition{i}, cap);
}

/// N_{n,k}: sum of m_lambda over partitions of n with exactly k parts.
/// Zero when k > n.
inline SymPoly n_nk(unsigned n, unsigned k, unsigned cap = kDefaultWeightCap) {
    if (n > cap) throw std::domain_error("n_nk: weight exceeds cap");
    SymPoly s(cap);
    for (const auto& lam : partitions_with_length(n, k)) s.add_term(lam, Rational(1));
    return s;
}

/// Adds one lhs-vs-rhs comparison line to a report; returns the outcome.
inline bool report_check(VerifyReport& rep, const std::string& tag, const SymPoly& lhs,
                         const SymPoly& rhs) {
    bool ok = lhs == rhs;
    rep.add(ok, ok ? tag : tag + ": lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string());
    return ok;
}

/// Product-expansion identity: sum_a C(a,k)(-1)^{a-k} e_a h_{n-a} = N_{n,k},
/// checked for k <= n <= n_max.
inline VerifyReport verify_infprod(unsigned n_max, unsigned cap = kDefaultWeightCap) {
    if (n_max > cap) throw std::domain_error("verify_infprod: bound exceeds weight cap");
    VerifyReport rep("infprod");
    for (unsigned n = 0; n <= n_max; ++n) {
        std::vector<SymPoly> eh;  // e_a * h_{n-a}
        for (unsigned a = 0; a <= n; ++a)
            eh.push_back(monomial_mul(basis_e(a, cap), basis_h(n - a, cap)));
        for (unsigned k = 0; k <= n; ++k) {
            SymPoly lhs(cap);
            for (unsigned a = k; a <= n; ++a) {
                Rational c(binomial(a, k));
                if ((a - k) % 2) c = -c;
                lhs += eh[a].scaled(c);
            }
            report_check(rep, "N_{" + std::to_string(n) + "," + std::to_string(k) + "} from e,h",
                         lhs, n_nk(n, k, cap));
        }
    }
    return rep;
}

/// Power-sum recurrence: sum_i p_i N_{n-i,k} = (n-k) N_{n,k} + (k+1) N_{n,k+1},
/// checked for 1 <= k < n <= n_max.
inline VerifyReport verify_sfi(unsigned n_max, unsigned cap = kDefaultWeightCap) {
    if (n_max > cap) throw std::domain_error("verify_sfi: bound exceeds weight cap");
    VerifyReport rep("sfi");
    for (unsigned n = 2; n <= n_max; ++n)
        for (unsigned k = 1; k < n; ++k) {
            SymPoly lhs(cap);
            for (unsigned i = 1; i <= n - k; ++i)
                lhs += monomial_mul(basis_p(i, cap), n_nk(n - i, k, cap));
            SymPoly rhs = n_nk(n, k, cap).scaled(Rational(static_cast<long>(n - k))) +
                          n_nk(n, k + 1, cap).scaled(Rational(static_cast<long>(k) + 1));
            report_check(rep, "p-sum identity at (n,k)=(" + std::to_string(n) + "," +
                                  std::to_string(k) + ")",
                         lhs, rhs);
        }
    return rep;
}

/// Near-diagonal expansion: N_{k+r,k} = sum_i (-1)^i C(k+i,i) h_{r-i} e_{k+i},
/// checked for k >= 1, r >= 0, k+r <= n_max.
inline VerifyReport verify_nexp(unsigned n_max, unsigned cap = kDefaultWeightCap) {
    if (n_max > cap) throw std::domain_error("verify_nexp: bound exceeds weight cap");
    VerifyReport rep("nexp");
    std::map<std::pair<unsigned, unsigned>, SymPoly> he;  // (b,a) -> h_b * e_a
    auto he_product = [&](unsigned b, unsigned a) -> const SymPoly& {
        auto it = he.find({b, a});
        if (it == he.end())
            it = he.emplace(std::make_pair(b, a),
                            monomial_mul(basis_h(b, cap), basis_e(a, cap)))
                     .first;
        return it->second;
    };
    for (unsigned k = 1; k <= n_max; ++k)
        for (unsigned r = 0; k + r <= n_max; ++r) {
            SymPoly rhs(cap);
            for (unsigned i = 0; i <= r; ++i) {
                Rational c(binomial(k + i, i));
                if (i % 2) c = -c;
                rhs += he_product(r - i, k + i).scaled(c);
            }
            report_check(rep, "N_{" + std::to_string(k + r) + "," + std::to_string(k) +
                                  "} expansion",
                         n_nk(k + r, k, cap), rhs);
        }
    return rep;
}

/// Newton's recurrence sum_{i=1}^r p_i h_{r-i} = r h_r, for 1 <= r <= N.
inline VerifyReport verify_newton(unsigned n_max, unsigned cap = kDefaultWeightCap) {
    if (n_max > cap) throw std::domain_error("verify_newton: bound exceeds weight cap");
    VerifyReport rep("newton");
    for (unsigned r = 1; r <= n_max; ++r) {
        SymPoly lhs(cap);
        for (unsigned i = 1; i <= r; ++i)
            lhs += monomial_mul(basis_p(i, cap), basis_h(r - i, cap));
        report_check(rep, "Newton recurrence at r=" + std::to_string(r), lhs,
                     basis_h(r, cap).scaled(Rational(static_cast<long>(r))));
    }
    return rep;
}

namespace detail {

/// Expansion of p_lambda = prod_i p_{lambda_i} in the monomial basis,
/// cached; entries are immutable once inserted.
inline const SymPoly& p_expansion_locked(std::map<std::pair<Partition, unsigned>, SymPoly>& cache,
                                         const Partition& lam, unsigned cap) {
    auto it = cache.find({lam, cap});
    if (it != cache.end()) return it->second;
    SymPoly val(cap);
    if (lam.length() == 0) {
        val = SymPoly::one(cap);
    } else if (lam.length() == 1) {
        val = basis_p(lam.parts()[0], cap);
    } else {
        std::vector<unsigned> rest(lam.parts().begin(), lam.parts().end() - 1);
        unsigned smallest = lam.parts().back();
        const SymPoly& sub = p_expansion_locked(cache, Partition(std::move(rest)), cap);
        val = monomial_mul(sub, basis_p(smallest, cap));
    }
    return cache.emplace(std::make_pair(lam, cap), std::move(val)).first->second;
}

inline const SymPoly& p_expansion(const Partition& lam, unsigned cap) {
    static std::map<std::pair<Partition, unsigned>, SymPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return p_expansion_locked(cache, lam, cap);
}

/// Bareiss fraction-free elimination, then rational back substitution.
/// a must be square and nonsingular.
inline std::vector<Rational> solve_integer_system(std::vector<std::vector<mpz_class>> a,
                                                  std::vector<mpz_class> b) {
    const std::size_t n = a.size();
    mpz_class prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) throw std::logic_error("solve_integer_system: singular matrix");
        if (piv != k) {
            std::swap(a[piv], a[k]);
            std::swap(b[piv], b[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            mpz_class num = a[k][k] * b[i] - a[i][k] * b[k];
            mpz_divexact(b[i].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    if (n > 0 && a[n - 1][n - 1] == 0)
        throw std::logic_error("solve_integer_system: singular matrix");
    std::vector<Rational> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational s(b[ii]);
        for (std::size_t j = ii + 1; j < n; ++j) s -= Rational(a[ii][j]) * x[j];
        x[ii] = s / Rational(a[ii][ii]);
    }
    return x;
}

}  // namespace detail

/// Coefficients c_lambda with a = sum c_lambda p_lambda, found per
/// homogeneous weight by expanding every p_lambda in the monomial basis
/// and solving the exact linear system.
inline std::map<Partition, Rational> to_p_basis(const SymPoly& a) {
    unsigned cap = a.weight_cap();
    std::map<unsigned, std::map<Partition, Rational>> by_weight;
    for (const auto& [lam, c] : a.terms()) by_weight[lam.weight()][lam] = c;

    std::map<Partition, Rational> out;
    for (const auto& [w, comp] : by_weight) {
        auto lams = partitions_of(w);
        const std::size_t n = lams.size();
        std::map<Partition, std::size_t> row_of;
        for (std::size_t i = 0; i < n; ++i) row_of[lams[i]] = i;

        std::vector<std::vector<mpz_class>> mat(n, std::vector<mpz_class>(n));
        for (std::size_t col = 0; col < n; ++col)
            for (const auto& [mu, c] : detail::p_expansion(lams[col], cap).terms()) {
                if (!c.is_integer())
                    throw std::logic_error("to_p_basis: non-integer p expansion");
                mat[row_of.at(mu)][col] = c.numerator();
            }

        mpz_class den(1);
        for (const auto& [mu, c] : comp)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
        std::vector<mpz_class> rhs(n);
        for (const auto& [mu, c] : comp)
            rhs[row_of.at(mu)] = c.numerator() * mpz_class(den / c.denominator());

        auto y = detail::solve_integer_system(std::move(mat), std::move(rhs));
        Rational scale(mpz_class(1), den);
        for (std::size_t i = 0; i < n; ++i) {
            Rational c = y[i] * scale;
            if (!c.is_zero()) out[lams[i]] = c;
        }
    }
    return out;
}

/// The Zt homomorphism: p_i maps to zeta(2i), extended multiplicatively
/// and linearly via the p-basis.
inline PiValue zt(const SymPoly& a) {
    PiValue out;
    for (const auto& [lam, c] : to_p_basis(a)) {
        PiValue t = PiValue::one();
        for (unsigned part : lam.parts()) t *= zeta_even(part);
        out += t.scaled(c);
    }
    return out;
}

}  // namespace evenzeta
