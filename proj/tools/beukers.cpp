// beukers: command-line front end for the generalized Beukers integral library.

#include "beukers/integral.hpp"
#include "beukers/parse.hpp"
#include "beukers/pfd.hpp"
#include "beukers/report.hpp"
#include "beukers/verify.hpp"
#include "beukers/zeta.hpp"
#include "beukers/zeta5.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

namespace {

using beukers::report::json;

enum class Format { json, csv, text };

struct Globals {
    Format format = Format::json;
    double precision = 1e-10;
    bool precision_given = false;
};

int decimals_for(double tol) { return std::clamp(static_cast<int>(std::ceil(-std::log10(tol))), 1, 15); }

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// Flat key/value objects only; used by the small single-record commands.
void emit_record(const Globals& g, const std::vector<std::pair<std::string, std::string>>& fields, const json& j)
{
    switch (g.format) {
    case Format::json:
        emit_json(j);
        break;
    case Format::csv: {
        std::string head, body;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            head += (i ? "," : "") + fields[i].first;
            body += (i ? "," : "") + fields[i].second;
        }
        std::cout << head << "\n" << body << "\n";
        break;
    }
    case Format::text:
        for (const auto& [k, v] : fields) std::cout << k << ": " << v << "\n";
        break;
    }
}

int cmd_pfd(const Globals& g, const std::string& spec_text)
{
    const auto parsed = beukers::parse_points(spec_text);
    const auto ms = beukers::MultisetSpec::from_exponents(parsed.values);
    const auto coeffs = ms.simple() ? beukers::as_coefficients(ms.points(), beukers::homogeneous_pfd(ms.points()))
                                    : beukers::inhomogeneous_pfd(ms);
    const json j = beukers::report::pfd_json(coeffs);
    if (g.format == Format::json) {
        emit_json(j);
        return 0;
    }
    if (g.format == Format::csv) std::cout << "point,multiplicity,j,coefficient\n";
    for (std::size_t i = 0; i < ms.distinct(); ++i)
        for (unsigned jj = 1; jj <= ms.multiplicities()[i]; ++jj) {
            const auto c = beukers::to_string(coeffs.mu(i, jj));
            if (g.format == Format::csv)
                std::cout << ms.points()[i] << "," << ms.multiplicities()[i] << "," << jj << "," << c << "\n";
            else
                std::cout << (ms.simple() ? "lambda" : "mu") << "[" << ms.points()[i] << "," << jj << "] = " << c << "\n";
        }
    if (g.format == Format::text) std::cout << "sum of simple-pole coefficients = " << j["sum_mu1"].get<std::string>() << "\n";
    return 0;
}

int cmd_eval(const Globals& g, unsigned m, const std::string& a_text)
{
    const beukers::IntegralSpec spec(m, beukers::parse_exponents(a_text));
    const auto v = beukers::eval_general(spec);
    const auto value = beukers::report::fixed(beukers::to_double(beukers::combo_eval(v, beukers::PrecisionBudget(g.precision))),
                                              decimals_for(g.precision));
    const json j = beukers::report::eval_json(spec, v, value);
    emit_record(g,
                {{"integral", spec.describe()},
                 {"closed_form", beukers::to_string(v)},
                 {"value", value.text},
                 {"q", j["q"].get<std::string>()}},
                j);
    return 0;
}

int cmd_denom(const Globals& g, unsigned m, const std::string& a_text)
{
    const beukers::IntegralSpec spec(m, beukers::parse_exponents(a_text));
    const auto r = beukers::check_denominator(spec);
    emit_record(g,
                {{"integral", spec.describe()},
                 {"q", beukers::to_string(r.q)},
                 {"bound", beukers::to_string(r.bound)},
                 {"divides", r.divides ? "true" : "false"}},
                beukers::report::denominator_json(r));
    return r.divides ? 0 : 1;
}

int cmd_table(const Globals& g, unsigned n_max)
{
    if (n_max < 1) throw std::invalid_argument("zeta5-table: n must be >= 1");
    const int decimals = g.precision_given ? decimals_for(g.precision) : 4;
    const beukers::PrecisionBudget budget(std::min(g.precision, 1e-12));
    std::vector<beukers::report::TableRowText> rows;
    for (unsigned n = 1; n <= n_max; ++n) rows.push_back(beukers::report::table_row(beukers::approx_row(n, budget), decimals));

    switch (g.format) {
    case Format::json:
        emit_json(beukers::report::table_json(rows));
        break;
    case Format::csv:
        std::cout << beukers::report::table_csv(rows);
        break;
    case Format::text:
        std::printf("%4s  %12s  %12s  %12s  %14s\n", "n", "6/(n+1)^4", "J3(n)", "6pi^2/(n+.5)^2", "d_n^5 J3(n)");
        for (const auto& r : rows)
            std::printf("%4u  %12s  %12s  %12s  %14s\n", r.n, r.lower.text.c_str(), r.value.text.c_str(),
                        r.upper.text.c_str(), r.scaled.text.c_str());
        std::printf("\n%4s  %s\n", "n", "A_n, B_n, d_n");
        for (const auto& r : rows) std::printf("%4u  %s, %s, %s\n", r.n, r.A.c_str(), r.B.c_str(), r.d.c_str());
        break;
    }
    return 0;
}

int cmd_bounds(const Globals& g, unsigned n)
{
    const auto b = beukers::bounds(n);
    const int decimals = g.precision_given ? decimals_for(g.precision) : 4;
    const auto lo = beukers::report::fixed(b.lower, decimals);
    const auto hi = beukers::report::fixed(b.upper, decimals);
    emit_record(g, {{"n", std::to_string(n)}, {"lower", lo.text}, {"upper", hi.text}},
                json{{"n", n}, {"lower", lo.value}, {"upper", hi.value}});
    return 0;
}

int cmd_verify(const Globals& g, const beukers::VerifyGrid& grid, const std::string& fault)
{
    beukers::Fault f = beukers::Fault::none;
    if (fault == "mu-sign")
        f = beukers::Fault::mu_sign;
    else if (!fault.empty() && fault != "none")
        throw std::invalid_argument("verify: unknown fault '" + fault + "'");

    const auto report = beukers::run_verification(grid, f);
    switch (g.format) {
    case Format::json:
        emit_json(beukers::report::verify_json(report));
        break;
    case Format::csv:
        std::cout << "check,passed,failed\n";
        for (const auto& c : report.checks) std::cout << c.name << "," << c.passed << "," << c.failed << "\n";
        break;
    case Format::text:
        for (const auto& c : report.checks) {
            std::cout << (c.failed ? "FAIL " : "ok   ") << c.name << ": " << c.passed << " passed, " << c.failed << " failed";
            if (c.failed) std::cout << " (first: " << c.first_failure << ")";
            std::cout << "\n";
        }
        break;
    }
    return report.ok() ? 0 : 1;
}

int cmd_mc(const Globals& g, unsigned n, std::uint64_t samples, std::uint64_t seed)
{
    const auto r = beukers::mc_check_r2(n, samples, seed);
    auto num = [](double v) { return beukers::report::scientific(v, 9); };
    const auto est = num(r.estimate), tgt = num(r.target), rel = num(r.relative_error), se = num(r.std_error);
    emit_record(g,
                {{"n", std::to_string(n)},
                 {"samples", std::to_string(samples)},
                 {"seed", std::to_string(seed)},
                 {"estimate", est.text},
                 {"target", tgt.text},
                 {"relative_error", rel.text},
                 {"std_error", se.text}},
                json{{"n", n},
                     {"samples", samples},
                     {"seed", seed},
                     {"estimate", est.value},
                     {"target", tgt.value},
                     {"relative_error", rel.value},
                     {"std_error", se.value}});
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact evaluation of generalized Beukers integrals and the zeta(5) approximation table"};
    app.require_subcommand(1);

    Globals g;
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    auto* prec = app.add_option("--precision", g.precision, "Absolute tolerance of numeric values")->check(CLI::PositiveNumber);
    app.fallthrough();

    std::string spec_text;
    auto* pfd = app.add_subcommand("pfd", "Partial fraction coefficients for a point list such as 0^2,1");
    pfd->add_option("spec", spec_text, "Points: item(,item)* with item := integer[^multiplicity]")->required();

    unsigned m = 0;
    std::string a_text;
    auto* eval = app.add_subcommand("eval", "Closed form of I_m(a_1..a_n)");
    eval->add_option("-m", m, "Log power m")->required();
    eval->add_option("-a", a_text, "Exponents, comma separated")->required();

    auto* denom = app.add_subcommand("denom-check", "Check the denominator bound for I_m(a_1..a_n)");
    denom->add_option("-m", m, "Log power m")->required();
    denom->add_option("-a", a_text, "Exponents, comma separated")->required();

    unsigned n = 1;
    auto* table = app.add_subcommand("zeta5-table", "Rows of the J3(n) approximation table");
    table->add_option("-n", n, "Largest n")->required()->check(CLI::PositiveNumber);

    auto* bnd = app.add_subcommand("bounds", "Lower and upper bounds on J3(n)");
    bnd->add_option("-n", n, "n")->required()->check(CLI::PositiveNumber);

    beukers::VerifyGrid grid;
    std::string fault;
    auto* verify = app.add_subcommand("verify", "Run the invariant suite over a parameter grid");
    verify->add_option("--max-m", grid.max_m, "Largest m")->capture_default_str();
    verify->add_option("--max-n", grid.max_n, "Largest n")->capture_default_str();
    verify->add_option("--max-a", grid.max_a, "Largest exponent")->capture_default_str();
    verify->add_option("--max-j3", grid.max_j3, "Largest n for the J3 bound envelope")->capture_default_str();
    verify->add_option("--inject-fault", fault, "Negative control: corrupt the mu tables (mu-sign)");

    std::uint64_t samples = 10'000'000, seed = 1;
    auto* mc = app.add_subcommand("mc-r2", "Monte Carlo check of J3(n) = 6 R2(n)");
    mc->add_option("-n", n, "n")->required()->check(CLI::PositiveNumber);
    mc->add_option("--samples", samples, "Sample count")->capture_default_str()->check(CLI::PositiveNumber);
    mc->add_option("--seed", seed, "Generator seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    g.format = format == "csv" ? Format::csv : format == "text" ? Format::text : Format::json;
    g.precision_given = prec->count() > 0;
    if (g.precision_given) grid.oracle_tol = std::max(g.precision, 1e-11);

    try {
        if (*pfd) return cmd_pfd(g, spec_text);
        if (*eval) return cmd_eval(g, m, a_text);
        if (*denom) return cmd_denom(g, m, a_text);
        if (*table) return cmd_table(g, n);
        if (*bnd) return cmd_bounds(g, n);
        if (*verify) return cmd_verify(g, grid, fault);
        if (*mc) return cmd_mc(g, n, samples, seed);
    } catch (const beukers::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
