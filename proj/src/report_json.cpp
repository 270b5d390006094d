#include "iqlat/report_json.hpp"

#include <cstdio>
#include <sstream>

namespace iqlat {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

namespace {

std::string int_pair(const AlgInt& z) {
    return "[" + int128_str(z.a) + "," + int128_str(z.b) + "]";
}

template <class T, class Fn>
std::string json_array(const std::vector<T>& items, Fn&& render) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ",";
        out += render(items[i]);
    }
    out += "]";
    return out;
}

} // namespace

std::string to_json(const ThetaTable& table, std::int64_t d) {
    std::string out = "{\"coeffs\":[";
    for (std::size_t i = 0; i < table.coeffs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(table.coeffs[i]);
    }
    out += "],\"d\":" + std::to_string(d);
    out += ",\"max_norm\":" + std::to_string(table.max_norm) + "}";
    return out;
}

std::string to_json(const Shell& shell, std::int64_t d) {
    std::string out = "{\"d\":" + std::to_string(d);
    out += ",\"m\":" + std::to_string(shell.m);
    out += ",\"points\":" + json_array(shell.points, int_pair);
    out += ",\"size\":" + std::to_string(shell.size()) + "}";
    return out;
}

std::string to_json(const DesignReport& report) {
    std::string out = "{\"d\":" + std::to_string(report.d);
    out += ",\"m\":" + std::to_string(report.m);
    out += ",\"size\":" + std::to_string(report.shell_size);
    out += ",\"strength\":" + std::to_string(report.strength);
    out += ",\"S\":" + json_array(report.power_sums, [](const PowerSumEntry& e) {
        return "[" + std::to_string(e.k) + "," + int128_str(e.value.a) + "," +
               int128_str(e.value.b) + "]";
    });
    out += ",\"analytic_residual\":";
    out += report.analytic_residual ? fmt_double(*report.analytic_residual) : "null";
    out += "}";
    return out;
}

std::string to_json(const SurveyResult& result) {
    // elapsed_seconds deliberately stays off the data stream (it is not a
    // function of the input); the CLI reports timing on stderr.
    std::string out = "{\"checked\":" + std::to_string(result.checked);
    out += ",\"d\":" + std::to_string(result.d);
    out += ",\"max_norm\":" + std::to_string(result.max_norm);
    out += ",\"violations\":" + json_array(result.violations, [](const SurveyViolation& v) {
        return "{\"S\":" + int_pair(v.value) + ",\"k\":" + std::to_string(v.k) +
               ",\"m\":" + std::to_string(v.m) + "}";
    });
    out += "}";
    return out;
}

std::string to_json(const MultiplicativityResult& result) {
    std::string out = "{\"checked_pairs\":" + std::to_string(result.checked_pairs);
    out += ",\"d\":" + std::to_string(result.d);
    out += ",\"max_product\":" + std::to_string(result.max_product);
    out += ",\"violations\":" +
           json_array(result.violations, [](const MultiplicativityViolation& v) {
               return "{\"a_m\":" + std::to_string(v.a_m) + ",\"a_mn\":" + std::to_string(v.a_mn) +
                      ",\"a_n\":" + std::to_string(v.a_n) + ",\"m\":" + std::to_string(v.m) +
                      ",\"n\":" + std::to_string(v.n) + "}";
           });
    out += "}";
    return out;
}

std::string to_json(const CountFormulaResult& result) {
    std::string out = "{\"d\":" + std::to_string(result.d);
    out += ",\"max_norm\":" + std::to_string(result.max_norm);
    out += ",\"violations\":" + json_array(result.violations, [](const CountFormulaViolation& v) {
        return "{\"enumerated\":" + std::to_string(v.enumerated) +
               ",\"m\":" + std::to_string(v.m) +
               ",\"predicted\":" + std::to_string(v.predicted) + "}";
    });
    out += "}";
    return out;
}

std::string to_json(const CalcutResult& result) {
    std::string out = "{\"box\":" + std::to_string(result.box);
    out += ",\"checked\":" + std::to_string(result.checked);
    out += ",\"counterexamples\":" +
           json_array(result.counterexamples, [](const CalcutCounterexample& c) {
               return "{\"n\":" + std::to_string(c.n) + ",\"z\":" + int_pair(c.z) + "}";
           });
    out += ",\"d\":" + std::to_string(result.d);
    out += ",\"max_power\":" + std::to_string(result.max_power) + "}";
    return out;
}

std::string to_json(const SineProductResult& result) {
    std::string out = "{\"checked\":" + std::to_string(result.checked);
    out += ",\"d\":" + std::to_string(result.d);
    out += ",\"max_norm\":" + std::to_string(result.max_norm);
    out += ",\"tolerance\":" + fmt_double(result.tolerance);
    out += ",\"violations\":" + json_array(result.violations, [](const SineProductViolation& v) {
        return "{\"analytic\":" + fmt_double(v.analytic) + ",\"exact\":" + fmt_double(v.exact) +
               ",\"m\":" + std::to_string(v.m) + "}";
    });
    out += "}";
    return out;
}

} // namespace iqlat
