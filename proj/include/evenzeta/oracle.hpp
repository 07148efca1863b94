#pragma once

#include "evenzeta/pi_value.hpp"
#include "evenzeta/report.hpp"
#include "evenzeta/symfunc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace evenzeta {

/// Argument tuple (i_1,...,i_k) of a multiple zeta value. Convergence
/// requires i_1 >= 2, which construction enforces.
struct MzvArgs {
    std::vector<unsigned> args;

    explicit MzvArgs(std::vector<unsigned> a) : args(std::move(a)) {
        if (args.empty()) throw std::invalid_argument("MzvArgs: empty argument list");
        for (unsigned i : args)
            if (i < 1) throw std::invalid_argument("MzvArgs: arguments must be positive");
        if (args.front() < 2)
            throw std::invalid_argument("MzvArgs: i_1 must be at least 2 (divergent otherwise)");
    }

    unsigned depth() const { return static_cast<unsigned>(args.size()); }
    unsigned weight() const {
        unsigned w = 0;
        for (unsigned i : args) w += i;
        return w;
    }
    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(args[i]);
        }
        return s + ")";
    }
};

/// Truncated-sum estimate. error_hint is the difference between the
/// estimates at L and 2L: a tail-size indicator (error ~ c/L for the
/// slowest i_1 = 2 tails, faster otherwise), not a proved bound.
struct OracleEstimate {
    double value = 0.0;
    unsigned long limit = 0;
    bool extrapolated = false;
    double error_hint = 0.0;
};

namespace detail {

inline double inv_pow(unsigned long n, unsigned i) {
    double inv = 1.0 / static_cast<double>(n);
    double p = 1.0;
    for (; i; --i) p *= inv;
    return p;
}

/// Applies the truncation policy to the partial sums at L and 2L.
inline OracleEstimate make_estimate(double s_l, double s_2l, unsigned long l, unsigned i1,
                                    bool extrapolate) {
    OracleEstimate est;
    est.limit = l;
    est.error_hint = std::abs(s_2l - s_l);
    if (extrapolate && i1 == 2) {
        // linear extrapolation in 1/L cancels the c/L tail
        est.value = 2.0 * s_2l - s_l;
        est.extrapolated = true;
    } else {
        est.value = extrapolate ? s_2l : s_l;
    }
    return est;
}

}  // namespace detail

/// Truncated MZV: sum over L >= n_1 > ... > n_k >= 1 of prod n_j^{-i_j},
/// via the prefix-sum dynamic program T_j(m) = sum_{n<m} n^{-i_j} T_{j+1}(n)
/// built innermost first, cost O(k L). Partial sums are taken to both L
/// and 2L; with extrapolation enabled, the i_1 = 2 case (slowest tail)
/// gets a two-point Richardson step and others keep the 2L truncation.
inline OracleEstimate mzv_numeric(const MzvArgs& a, unsigned long l, bool extrapolate = true) {
    const unsigned k = a.depth();
    if (l < k) throw std::invalid_argument("mzv_numeric: limit must be at least the depth");
    const unsigned long m = 2 * l;
    std::vector<double> tail(m + 1, 1.0);
    for (unsigned j = k; j >= 2; --j) {
        double run = 0.0;
        for (unsigned long t = 1; t <= m; ++t) {
            double inner = tail[t];
            tail[t] = run;
            run += detail::inv_pow(t, a.args[j - 1]) * inner;
        }
    }
    double run = 0.0, s_l = 0.0;
    for (unsigned long t = 1; t <= m; ++t) {
        run += detail::inv_pow(t, a.args[0]) * tail[t];
        if (t == l) s_l = run;
    }
    return detail::make_estimate(s_l, run, l, a.args[0], extrapolate);
}

/// All compositions (2a_1,...,2a_k) of 2n into k even positive parts,
/// first part descending (so (6,2) precedes (4,4)). Empty when k > n
/// or k = 0.
inline std::vector<MzvArgs> even_compositions(unsigned n, unsigned k) {
    std::vector<MzvArgs> out;
    if (k < 1 || k > n) return out;
    std::vector<unsigned> cur(k);
    auto rec = [&](auto&& self, unsigned pos, unsigned left) -> void {
        if (pos + 1 == k) {
            cur[pos] = 2 * left;
            out.emplace_back(cur);
            return;
        }
        for (unsigned a = left - (k - pos - 1); a >= 1; --a) {
            cur[pos] = 2 * a;
            self(self, pos + 1, left - a);
        }
    };
    rec(rec, 0, n);
    return out;
}

/// E(2n,k) by brute force: the truncated MZV summed over all even
/// compositions, sharing each suffix's prefix-sum table across the
/// compositions that end with it.
inline OracleEstimate e_sum_numeric(unsigned n, unsigned k, unsigned long l,
                                    bool extrapolate = true) {
    if (k < 1 || k > n) throw std::domain_error("e_sum_numeric: need 1 <= k <= n");
    if (l < k) throw std::invalid_argument("e_sum_numeric: limit must be at least the depth");
    const unsigned long m = 2 * l;
    OracleEstimate total;
    total.limit = l;

    // Parts are assigned innermost first, so siblings at each level reuse
    // the shared tail table below them.
    auto rec = [&](auto&& self, const std::vector<double>& tail, unsigned parts_left,
                   unsigned weight_left) -> void {
        if (parts_left == 1) {
            unsigned i1 = 2 * weight_left;
            double run = 0.0, s_l = 0.0;
            for (unsigned long t = 1; t <= m; ++t) {
                run += detail::inv_pow(t, i1) * tail[t];
                if (t == l) s_l = run;
            }
            OracleEstimate est = detail::make_estimate(s_l, run, l, i1, extrapolate);
            total.value += est.value;
            total.error_hint += est.error_hint;
            total.extrapolated = total.extrapolated || est.extrapolated;
            return;
        }
        for (unsigned a = 1; a + (parts_left - 1) <= weight_left; ++a) {
            std::vector<double> next(m + 1);
            double run = 0.0;
            for (unsigned long t = 1; t <= m; ++t) {
                next[t] = run;
                run += detail::inv_pow(t, 2 * a) * tail[t];
            }
            self(self, next, parts_left - 1, weight_left - a);
        }
    };
    std::vector<double> ones(m + 1, 1.0);
    rec(rec, ones, k, n);
    return total;
}

/// Numeric Zt image of the monomial symmetric function m_lambda: the sum
/// of MZVs over the distinct rearrangements of the doubled parts (which
/// equals the full symmetrized sum divided by |Iso|, the product of the
/// multiplicity factorials).
inline OracleEstimate zt_monomial_numeric(const Partition& lam, unsigned long l,
                                          bool extrapolate = true) {
    if (lam.length() == 0)
        throw std::invalid_argument("zt_monomial_numeric: partition must be nonempty");
    std::vector<unsigned> args;
    for (unsigned p : lam.parts()) args.push_back(2 * p);
    std::sort(args.begin(), args.end());
    OracleEstimate total;
    total.limit = l;
    do {
        OracleEstimate est = mzv_numeric(MzvArgs(args), l, extrapolate);
        total.value += est.value;
        total.error_hint += est.error_hint;
        total.extrapolated = total.extrapolated || est.extrapolated;
    } while (std::next_permutation(args.begin(), args.end()));
    return total;
}

/// Euler's two double-zeta identities at weight 2n, checked numerically:
/// the alternating sum of zeta(i, 2n-i) equals zeta(2n)/2 and the plain
/// sum equals zeta(2n). Also re-derives the even-even part (3/4 of the
/// row: E(2n,2)) from their half-sum.
inline VerifyReport euler_double_checks(unsigned n, unsigned long l, double rel_tol = 1e-6) {
    if (n < 2) throw std::domain_error("euler_double_checks: need n >= 2");
    VerifyReport rep("euler-double");
    double target = zeta_even(n).to_double();
    double plain = 0.0, alternating = 0.0, hint = 0.0;
    for (unsigned i = 2; i <= 2 * n - 1; ++i) {
        OracleEstimate est = mzv_numeric(MzvArgs({i, 2 * n - i}), l);
        plain += est.value;
        alternating += (i % 2 ? -est.value : est.value);
        hint += est.error_hint;
    }
    auto check = [&](const std::string& name, double got, double want) {
        double rel = std::abs(got - want) / std::abs(want);
        rep.add(rel <= rel_tol, name + " at 2n=" + std::to_string(2 * n) + ": got " +
                                    std::to_string(got) + ", want " + std::to_string(want) +
                                    ", rel err " + std::to_string(rel));
    };
    check("alternating double-zeta sum = zeta(2n)/2", alternating, target / 2);
    check("plain double-zeta sum = zeta(2n)", plain, target);
    check("(plain + alternating)/2 = E(2n,2)", (plain + alternating) / 2,
          e_sum_numeric(n, 2, l).value);
    rep.note("tail model: residual ~ c/L before extrapolation; summed |S(2L)-S(L)| = " +
             std::to_string(hint));
    return rep;
}

}  // namespace evenzeta
