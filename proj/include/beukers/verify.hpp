#pragma once

// Grid-driven invariant sweep behind `beukers verify`.

#include "beukers/integral.hpp"
#include "beukers/oracle.hpp"
#include "beukers/pfd.hpp"
#include "beukers/zeta5.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace beukers {

/// Calls visit(a) for every nondecreasing tuple a of length n with entries in [0, max_a].
inline void for_each_sorted_tuple(unsigned n, std::int64_t max_a, const std::function<void(const std::vector<std::int64_t>&)>& visit)
{
    std::vector<std::int64_t> a(n, 0);
    auto rec = [&](auto&& self, unsigned pos, std::int64_t from) -> void {
        if (pos == n) {
            visit(a);
            return;
        }
        for (std::int64_t v = from; v <= max_a; ++v) {
            a[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 0);
}

struct VerifyGrid {
    unsigned max_m = 1;
    unsigned max_n = 2;
    std::int64_t max_a = 2;
    unsigned max_j3 = 10;
    double oracle_tol = 1e-8;
};

enum class Fault { none, mu_sign };

struct CheckTally {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::string first_failure;

    void record(bool ok, const std::function<std::string()>& describe)
    {
        if (ok) {
            ++passed;
            return;
        }
        if (failed++ == 0) first_failure = describe();
    }
};

struct VerifyReport {
    std::vector<CheckTally> checks;
    bool ok() const
    {
        for (const auto& c : checks)
            if (c.failed != 0) return false;
        return true;
    }
};

namespace detail {

inline PfdCoefficients decompose(const MultisetSpec& ms, Fault fault)
{
    PfdCoefficients coeffs = inhomogeneous_pfd(ms);
    if (fault == Fault::mu_sign && ms.distinct() > 1) {
        const auto& b = ms.multiplicities();
        for (std::size_t i = 0; i < ms.distinct(); ++i)
            for (unsigned j = 1; j <= b[i]; ++j) coeffs.mu(i, j) = -coeffs.mu(i, j);
        coeffs.mu(0, 1) += 1;  // also break sum mu_i1 = 0
    }
    return coeffs;
}

inline ZetaCombo evaluate(const IntegralSpec& spec, Fault fault)
{
    const MultisetSpec ms = spec.multiset();
    if (fault == Fault::none || spec.n() == 1 || ms.distinct() == 1) return eval_general(spec);
    return eval_from_pfd(spec.m(), decompose(ms, fault));
}

} // namespace detail

inline VerifyReport run_verification(const VerifyGrid& grid, Fault fault = Fault::none)
{
    auto tally = [](std::string name) {
        CheckTally t;
        t.name = std::move(name);
        return t;
    };
    CheckTally pfd = tally("pfd_identities"), oracle = tally("oracle_equivalence"), pair = tally("pair_consistency"),
               denom = tally("denominator_bound"), positive = tally("positivity"), envelope = tally("bound_envelope");
    const PrecisionBudget eval_budget(grid.oracle_tol / 100);
    const PrecisionBudget series_budget(grid.oracle_tol / 10);

    for (unsigned n = 1; n <= grid.max_n; ++n) {
        for_each_sorted_tuple(n, grid.max_a, [&](const std::vector<std::int64_t>& a) {
            const MultisetSpec ms = MultisetSpec::from_exponents(a);
            const PfdCoefficients coeffs = detail::decompose(ms, fault);
            std::vector<Rational> points;
            for (unsigned k = 1; k <= n + 1; ++k) points.emplace_back(k);
            const bool sums_ok = ms.distinct() < 2 || coeffs.simple_pole_sum() == 0;
            pfd.record(sums_ok && verify_pfd(coeffs, points), [&] { return IntegralSpec(1, a).describe(); });

            for (unsigned m = (n == 1 ? 1u : 0u); m <= grid.max_m; ++m) {
                const IntegralSpec spec(m, a);
                const ZetaCombo closed = detail::evaluate(spec, fault);
                const double value = to_double(combo_eval(closed, eval_budget));
                double reference = NAN;
                try {
                    reference = series_oracle(m, a, series_budget).value;
                } catch (const QuadratureError&) {
                }
                oracle.record(std::fabs(value - reference) < grid.oracle_tol, [&] { return spec.describe(); });
                positive.record(value > 0, [&] { return spec.describe(); });
                if (n == 2) pair.record(closed == eval_pair(m, a[0], a[1]), [&] { return spec.describe(); });
                if (n >= 2) {
                    const Integer bound = denominator_bound(spec);
                    const Integer q = combo_denominator(closed);
                    denom.record(bound % q == 0, [&] { return spec.describe(); });
                }
            }
        });
    }

    for (unsigned n = 1; n <= grid.max_j3; ++n) {
        const auto row = approx_row(n, PrecisionBudget(1e-12));
        envelope.record(row.lower <= row.value && row.value <= row.upper, [&] { return "J3(" + std::to_string(n) + ")"; });
    }

    VerifyReport report;
    report.checks = {pfd, oracle, pair, denom, positive, envelope};
    return report;
}

} // namespace beukers
