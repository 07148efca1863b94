#pragma once

#include "evenzeta/pi_value.hpp"
#include "evenzeta/rational.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>

namespace evenzeta {

/// One machine-readable row. Exact-route records carry the rational
/// coefficient of pi^{pi_power}; oracle records leave the coefficient
/// strings empty and carry only the float. Row-sum records use depth 0.
struct OutputRecord {
    unsigned weight = 0;
    unsigned depth = 0;
    unsigned pi_power = 0;
    std::string coeff_num;
    std::string coeff_den;
    std::string float_value;
    std::string method;

    static OutputRecord exact(unsigned weight, unsigned depth, const PiValue& value,
                              const std::string& method) {
        OutputRecord r;
        r.weight = weight;
        r.depth = depth;
        r.pi_power = weight;
        Rational c = value.coeff(weight / 2);
        r.coeff_num = c.numerator().get_str();
        r.coeff_den = c.denominator().get_str();
        r.float_value = value.to_decimal(15);
        r.method = method;
        return r;
    }

    static OutputRecord numeric(unsigned weight, unsigned depth, double value,
                                const std::string& method = "oracle") {
        OutputRecord r;
        r.weight = weight;
        r.depth = depth;
        r.pi_power = weight;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.15g", value);
        r.float_value = buf;
        r.method = method;
        return r;
    }

    bool is_exact() const { return !coeff_num.empty(); }

    /// The "a/b*pi^m" rendering, identical to PiValue::to_string for the
    /// single-term values this record holds; oracle rows fall back to the
    /// float.
    std::string to_human() const {
        if (!is_exact()) return float_value;
        std::string s = coeff_num;
        if (coeff_den != "1") s += "/" + coeff_den;
        if (pi_power > 0) s += "*pi^" + std::to_string(pi_power);
        return s;
    }

    nlohmann::json to_json() const {
        return nlohmann::json{{"weight", weight},       {"depth", depth},
                              {"pi_power", pi_power},   {"coeff_num", coeff_num},
                              {"coeff_den", coeff_den}, {"float_value", float_value},
                              {"method", method}};
    }

    static std::string csv_header() {
        return "weight,depth,pi_power,coeff_num,coeff_den,float_value,method";
    }

    std::string to_csv() const {
        return std::to_string(weight) + "," + std::to_string(depth) + "," +
               std::to_string(pi_power) + "," + coeff_num + "," + coeff_den + "," +
               float_value + "," + method;
    }
};

}  // namespace evenzeta
