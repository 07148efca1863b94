#include "evenzeta/evenzeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace evenzeta;

constexpr unsigned kExactDefault = 40;    // exact-identity suites
constexpr unsigned kSeriesDefault = 12;   // gfun / pq-recurrence order
constexpr unsigned kSymfuncDefault = 10;  // weight bound, cap 12
constexpr unsigned kOracleDefault = 5;

struct Options {
    unsigned n = 0;
    unsigned k = 0;
    std::string method = "theorem1";
    std::string format = "human";
    std::string suite;
    unsigned max = 0;  // 0 means the suite default
    unsigned max_weight = kSymfuncDefault;
    unsigned long limit = 100000;
    bool no_extrapolate = false;
};

PiValue exact_by_method(const std::string& method, unsigned n, unsigned k) {
    if (method == "theorem1") return e_sum_theorem1(n, k).value;
    if (method == "theorem3") return e_sum_theorem3(n, k).value;
    if (method == "series") return PiValue::term(n, f_expand(n, k).coeff(n, k));
    // symfunc
    unsigned cap = std::max(kDefaultWeightCap, n);
    return zt(n_nk(n, k, cap));
}

int run_value(const Options& opt) {
    if (opt.k < 1 || opt.k > opt.n) {
        std::cerr << "error: need 1 <= k <= n (E(2n,k) vanishes for k > n)\n";
        return 2;
    }
    OutputRecord rec;
    if (opt.method == "oracle") {
        OracleEstimate est = e_sum_numeric(opt.n, opt.k, opt.limit, !opt.no_extrapolate);
        rec = OutputRecord::numeric(2 * opt.n, opt.k, est.value);
    } else {
        if (opt.method == "symfunc" && opt.n > kMaxWeightCap) {
            std::cerr << "error: symfunc method supports n <= " << kMaxWeightCap << "\n";
            return 2;
        }
        rec = OutputRecord::exact(2 * opt.n, opt.k, exact_by_method(opt.method, opt.n, opt.k),
                                  opt.method);
    }
    if (opt.format == "json") {
        std::cout << rec.to_json().dump() << "\n";
    } else if (opt.format == "csv") {
        std::cout << OutputRecord::csv_header() << "\n" << rec.to_csv() << "\n";
    } else {
        std::cout << rec.to_human() << "\n";
    }
    return 0;
}

int run_table(const Options& opt) {
    unsigned n_max = opt.max ? opt.max : 5;
    std::vector<OutputRecord> recs;
    for (unsigned n = 1; n <= n_max; ++n) {
        PiValue row;
        for (unsigned k = 1; k <= n; ++k) {
            PiValue v = e_sum_theorem1(n, k).value;
            row += v;
            recs.push_back(OutputRecord::exact(2 * n, k, v, "theorem1"));
        }
        recs.push_back(OutputRecord::exact(2 * n, 0, row, "theorem1"));  // row sum
    }
    if (opt.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : recs) arr.push_back(r.to_json());
        std::cout << arr.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << OutputRecord::csv_header() << "\n";
        for (const auto& r : recs) std::cout << r.to_csv() << "\n";
    } else {
        for (const auto& r : recs) {
            if (r.depth == 0)
                std::cout << "sum_k E(" << r.weight << ",k) = " << r.to_human() << "\n";
            else
                std::cout << "E(" << r.weight << "," << r.depth << ") = " << r.to_human() << "\n";
        }
    }
    return 0;
}

VerifyReport suite_cross_route(unsigned n_max) {
    VerifyReport rep("cross-route");
    GradedSeries2 f = f_expand(n_max, n_max);
    for (unsigned n = 1; n <= n_max; ++n)
        for (unsigned k = 1; k <= n; ++k) {
            PiValue v1 = e_sum_theorem1(n, k).value;
            bool ok = v1 == e_sum_theorem3(n, k).value &&
                      v1 == PiValue::term(n, f.coeff(n, k));
            rep.add(ok, "E(" + std::to_string(2 * n) + "," + std::to_string(k) +
                            ") theorem1 = theorem3 = series" + (ok ? "" : " MISMATCH"));
        }
    return rep;
}

VerifyReport suite_bernoulli_identity(unsigned n_max) {
    VerifyReport rep("bernoulli-identity");
    for (unsigned n = 1; n <= n_max; ++n)
        for (unsigned k = 1; k <= n; ++k) {
            IdentityCheck c = verify_bernoulli_identity(n, k);
            rep.add(c.ok, "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ") " +
                              c.to_string());
        }
    return rep;
}

VerifyReport suite_gessel_viennot(unsigned n_max) {
    VerifyReport rep("gessel-viennot");
    for (unsigned n = 1; n <= n_max; ++n)
        for (unsigned k = n + 1; k <= n_max; ++k) {
            IdentityCheck c = verify_gessel_viennot(n, k);
            rep.add(c.ok, "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ") " +
                              c.to_string());
        }
    return rep;
}

VerifyReport suite_gfun(unsigned order) {
    VerifyReport rep("gfun");
    for (unsigned k = 0; k <= order; ++k) rep.merge(verify_gfun(k, order));
    // the series coefficients are the closed-form values
    for (unsigned k = 1; k <= order; ++k) {
        GradedSeries1 g = g_k_series(k, order);
        for (unsigned n = k; n <= order; ++n)
            rep.add(PiValue::term(n, g[n]) == e_sum_theorem1(n, k).value,
                    "G_" + std::to_string(k) + " coefficient " + std::to_string(n) +
                        " = E(" + std::to_string(2 * n) + "," + std::to_string(k) + ")");
    }
    return rep;
}

VerifyReport suite_oracle(unsigned n_max, unsigned long limit, bool extrapolate) {
    VerifyReport rep("oracle");
    auto rel_check = [&](const std::string& tag, double got, double want, double tol) {
        double rel = std::abs(got - want) / std::abs(want);
        rep.add(rel <= tol, tag + ": rel err " + std::to_string(rel) + " (tol " +
                                std::to_string(tol) + ")");
    };
    rel_check("zeta(2) truncated sum", mzv_numeric(MzvArgs({2}), limit, extrapolate).value,
              zeta_even(1).to_double(), 1e-5);
    rel_check("zeta(2,2) truncated sum", mzv_numeric(MzvArgs({2, 2}), limit, extrapolate).value,
              zt_of_e(2).to_double(), 1e-6);
    for (unsigned n = 1; n <= n_max; ++n)
        for (unsigned k = 1; k <= n; ++k)
            rel_check("E(" + std::to_string(2 * n) + "," + std::to_string(k) + ") brute force",
                      e_sum_numeric(n, k, limit, extrapolate).value,
                      e_sum_theorem1(n, k).value.to_double(), 1e-5);
    return rep;
}

VerifyReport suite_euler_double(unsigned n_max, unsigned long limit) {
    VerifyReport rep("euler-double");
    for (unsigned n = 2; n <= n_max; ++n) rep.merge(euler_double_checks(n, limit));
    return rep;
}

int run_verify(const Options& opt) {
    std::vector<VerifyReport> reports;
    auto run_one = [&](const std::string& s) {
        if (s == "cross-route") reports.push_back(suite_cross_route(opt.max ? opt.max : kExactDefault));
        if (s == "bernoulli-identity")
            reports.push_back(suite_bernoulli_identity(opt.max ? opt.max : kExactDefault));
        if (s == "gessel-viennot")
            reports.push_back(suite_gessel_viennot(opt.max ? opt.max : kExactDefault));
        if (s == "gfun") reports.push_back(suite_gfun(opt.max ? opt.max : kSeriesDefault));
        if (s == "pq-recurrence")
            reports.push_back(verify_pq_recurrence(opt.max ? opt.max : kSeriesDefault));
        if (s == "infprod") reports.push_back(verify_infprod(opt.max_weight));
        if (s == "sfi") reports.push_back(verify_sfi(opt.max_weight));
        if (s == "nexp") reports.push_back(verify_nexp(opt.max_weight));
        if (s == "oracle")
            reports.push_back(suite_oracle(opt.max ? opt.max : kOracleDefault, opt.limit,
                                           !opt.no_extrapolate));
        if (s == "euler-double")
            reports.push_back(suite_euler_double(opt.max ? opt.max : 4, opt.limit));
    };
    if (opt.suite == "all") {
        for (const char* s : {"cross-route", "bernoulli-identity", "gessel-viennot", "gfun",
                              "pq-recurrence", "infprod", "sfi", "nexp", "oracle", "euler-double"})
            run_one(s);
    } else {
        run_one(opt.suite);
    }
    bool all_ok = true;
    for (const auto& rep : reports) {
        std::cout << rep.to_string() << "\n";
        all_ok = all_ok && rep.ok;
    }
    std::cout << (all_ok ? "ALL SUITES PASS" : "SUITE FAILURES PRESENT") << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sums of multiple zeta values with even arguments, by four exact routes "
                 "and a brute-force oracle. Weights are printed as 2n; flags take n."};
    app.require_subcommand(1);
    Options opt;

    CLI::App* value = app.add_subcommand("value", "One E(2n,k) value by a chosen method");
    value->add_option("--n", opt.n, "half the weight: computes E(2n,k)")->required();
    value->add_option("--k", opt.k, "depth")->required();
    value->add_option("--method", opt.method, "computation route")
        ->check(CLI::IsMember({"theorem1", "theorem3", "series", "symfunc", "oracle"}));
    value->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    value->add_option("--limit", opt.limit, "oracle summation bound L");
    value->add_flag("--no-extrapolate", opt.no_extrapolate, "oracle: plain truncation at L");

    CLI::App* table = app.add_subcommand("table", "All E(2n,k) with row sums, up to --max");
    table->add_option("--max", opt.max, "largest n (default 5)");
    table->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}));

    CLI::App* verify = app.add_subcommand("verify", "Identity verification suites");
    verify->add_option("--suite", opt.suite, "suite name or 'all'")
        ->required()
        ->check(CLI::IsMember({"cross-route", "bernoulli-identity", "gessel-viennot", "gfun",
                               "pq-recurrence", "infprod", "sfi", "nexp", "oracle",
                               "euler-double", "all"}));
    verify->add_option("--max", opt.max,
                       "main bound: n for exact suites, order for gfun/pq-recurrence "
                       "(0 = suite default)");
    verify->add_option("--max-weight", opt.max_weight, "weight bound for infprod/sfi/nexp");
    verify->add_option("--limit", opt.limit, "oracle summation bound L");
    verify->add_flag("--no-extrapolate", opt.no_extrapolate, "oracle: plain truncation at L");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (value->parsed()) return run_value(opt);
        if (table->parsed()) return run_table(opt);
        return run_verify(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
