#pragma once

// JSON/CSV/text renderings of results. Exact rationals travel as "p/q" strings and big integers as
// decimal strings; zeta terms are keyed by the integer s.

#include "beukers/integral.hpp"
#include "beukers/pfd.hpp"
#include "beukers/verify.hpp"
#include "beukers/zeta.hpp"
#include "beukers/zeta5.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace beukers::report {

using nlohmann::json;

/// Fixed-point rendering; the JSON number is parsed back from the same text so that the
/// CSV and JSON payloads agree digit for digit.
struct Number {
    std::string text;
    double value;
};

inline Number fixed(double v, int decimals)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return {buf, std::stod(buf)};
}

inline Number scientific(double v, int decimals)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", decimals, v);
    return {buf, std::stod(buf)};
}

inline json combo_json(const ZetaCombo& v)
{
    json terms = json::object();
    for (const auto& [s, q] : v.terms()) terms[std::to_string(s)] = to_string(q);
    return {{"terms", terms}, {"constant", to_string(v.constant())}};
}

inline ZetaCombo combo_from_json(const json& j)
{
    ZetaCombo v = ZetaCombo::rational(parse_rational(j.at("constant").get<std::string>()));
    for (const auto& [key, q] : j.at("terms").items()) v.add_term(std::stoi(key), parse_rational(q.get<std::string>()));
    return v;
}

inline json pfd_json(const PfdCoefficients& coeffs)
{
    const auto& spec = coeffs.spec();
    json out;
    out["points"] = spec.points();
    out["multiplicities"] = spec.multiplicities();
    if (spec.simple()) {
        json lambda = json::array();
        for (const auto& row : coeffs.table()) lambda.push_back(to_string(row.front()));
        out["lambda"] = lambda;
    } else {
        json mu = json::array();
        for (const auto& row : coeffs.table()) {
            json r = json::array();
            for (const auto& q : row) r.push_back(to_string(q));
            mu.push_back(r);
        }
        out["mu"] = mu;
    }
    out["sum_mu1"] = to_string(coeffs.simple_pole_sum());
    return out;
}

inline json eval_json(const IntegralSpec& spec, const ZetaCombo& v, const Number& value)
{
    json out = combo_json(v);
    out["m"] = spec.m();
    out["a"] = spec.exponents();
    out["value"] = value.value;
    out["q"] = to_string(combo_denominator(v));
    return out;
}

inline json denominator_json(const DenominatorReport& r)
{
    return {{"m", r.spec.m()}, {"a", r.spec.exponents()}, {"q", to_string(r.q)}, {"bound", to_string(r.bound)},
            {"divides", r.divides}};
}

struct TableRowText {
    unsigned n;
    Number lower, value, upper, scaled;
    std::string A, B, d;
};

inline TableRowText table_row(const ApproxRow& row, int decimals)
{
    return {row.n, fixed(row.lower, decimals), fixed(row.value, decimals), fixed(row.upper, decimals),
            row.scaled < 1e6 ? fixed(row.scaled, decimals) : scientific(row.scaled, 6), to_string(row.A),
            to_string(row.B), to_string(row.d)};
}

inline const std::vector<std::string>& table_columns()
{
    static const std::vector<std::string> cols{"n", "lower", "J3", "upper", "A", "B", "d", "scaled"};
    return cols;
}

inline json table_json(const std::vector<TableRowText>& rows)
{
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"n", r.n}, {"lower", r.lower.value}, {"J3", r.value.value}, {"upper", r.upper.value},
                       {"A", r.A}, {"B", r.B}, {"d", r.d}, {"scaled", r.scaled.value}});
    return out;
}

inline std::string table_csv(const std::vector<TableRowText>& rows)
{
    std::string out;
    const auto& cols = table_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
    out += "\n";
    for (const auto& r : rows)
        out += std::to_string(r.n) + "," + r.lower.text + "," + r.value.text + "," + r.upper.text + "," + r.A + "," +
               r.B + "," + r.d + "," + r.scaled.text + "\n";
    return out;
}

inline json verify_json(const VerifyReport& report)
{
    json checks = json::array();
    std::uint64_t failures = 0;
    for (const auto& c : report.checks) {
        json entry{{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}};
        if (c.failed) entry["first_failure"] = c.first_failure;
        checks.push_back(entry);
        failures += c.failed;
    }
    return {{"checks", checks}, {"failures", failures}, {"ok", report.ok()}};
}

} // namespace beukers::report
