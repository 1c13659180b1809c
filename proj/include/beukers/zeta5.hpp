#pragma once

// Rational approximations A_n zeta(5) + B_n over d_n^5 built from the shifted Legendre polynomials,
// together with the numeric checks that bracket them.

#include "beukers/arith.hpp"
#include "beukers/integral.hpp"
#include "beukers/oracle.hpp"
#include "beukers/zeta.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace beukers {

/// P_n(x) = (1/n!) d^n/dx^n (x - x^2)^n = sum_j coeffs[j] x^j.
struct LegendreCoeffs {
    unsigned degree = 0;
    std::vector<Integer> coeffs;
};

/// p_j = (-1)^j C(n, j) C(n + j, n): differentiating x^{n+j} n times gives (n+j)!/j! x^j.
inline LegendreCoeffs legendre_coeffs(unsigned n)
{
    LegendreCoeffs p{n, {}};
    p.coeffs.reserve(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        Integer v = binomial(n, j) * binomial(n + j, n);
        p.coeffs.push_back(j % 2 ? Integer(-v) : v);
    }
    return p;
}

/// J3(n) = -int_{(0,1)^2} log^3(xy) P_n(x) P_n(y) / (1 - xy) = 6 sum_{i,j} p_i p_j I_3(i, j).
inline ZetaCombo j3_exact(unsigned n)
{
    if (n < 1) throw std::invalid_argument("j3_exact: n must be >= 1");
    const auto p = legendre_coeffs(n).coeffs;
    ZetaCombo total;
    for (unsigned i = 0; i <= n; ++i) {
        for (unsigned j = i; j <= n; ++j) {
            Rational weight(p[i] * p[j] * 6);
            if (i != j) weight *= 2;  // I_3(i, j) = I_3(j, i)
            total += eval_pair(3, i, j) * weight;
        }
    }
    return total;
}

struct Bounds {
    double lower;
    double upper;
};

/// 6/(n+1)^4 <= J3(n) <= 6 pi^2/(n + 1/2)^2.
inline Bounds bounds(unsigned n)
{
    if (n < 1) throw std::invalid_argument("bounds: n must be >= 1");
    DigitsGuard guard(50);
    const Real pi = boost::math::constants::pi<Real>();
    const Real nn(n);
    const Real lower = Real(6) / pow(nn + 1, 4);
    const Real upper = 6 * pi * pi / pow(nn + Real(0.5), 2);
    return {to_double(lower), to_double(upper)};
}

struct ApproxRow {
    unsigned n = 0;
    Integer A, B, d;
    double value = 0;   // J3(n)
    double lower = 0;   // 6/(n+1)^4
    double upper = 0;   // 6 pi^2/(n+1/2)^2
    double scaled = 0;  // d_n^5 J3(n)
};

inline ApproxRow approx_row(unsigned n, const PrecisionBudget& budget)
{
    const ZetaCombo j3 = j3_exact(n);
    for (const auto& [s, c] : j3.terms())
        if (s != 5) throw std::logic_error("approx_row: unexpected zeta(" + std::to_string(s) + ") term");

    ApproxRow row;
    row.n = n;
    row.d = lcm_range(n);
    const Integer d5 = pow(row.d, 5u);
    const Rational alpha = j3.coefficient(5) * d5;
    const Rational beta = j3.constant() * d5;
    if (!is_integer(alpha) || !is_integer(beta))
        throw std::logic_error("approx_row: d_n^5 J3(" + std::to_string(n) + ") has non-integral coefficients");
    row.A = numerator_of(alpha);
    row.B = numerator_of(beta);

    const Real v = combo_eval(j3, budget);
    row.value = to_double(v);
    row.scaled = to_double(v * Real(d5));
    const auto [lo, hi] = bounds(n);
    row.lower = lo;
    row.upper = hi;
    return row;
}

struct DivergenceScan {
    std::vector<std::pair<unsigned, double>> rows;  // (n, d_n^5 J3(n))
    bool all_exceed_one = false;
    /// Smallest n0 < n_max with the scaled sequence strictly increasing on [n0, n_max], if any.
    std::optional<unsigned> increasing_from;
    /// Every n at which the scaled value drops below its predecessor.
    std::vector<unsigned> drops;
};

inline DivergenceScan divergence_scan(unsigned n_max, const PrecisionBudget& budget = PrecisionBudget(1e-10))
{
    if (n_max < 2) throw std::invalid_argument("divergence_scan: n_max must be >= 2");
    DivergenceScan scan;
    for (unsigned n = 1; n <= n_max; ++n) scan.rows.emplace_back(n, approx_row(n, budget).scaled);

    scan.all_exceed_one = std::all_of(scan.rows.begin(), scan.rows.end(), [](const auto& r) { return r.second > 1.0; });
    for (std::size_t i = 1; i < scan.rows.size(); ++i)
        if (!(scan.rows[i].second > scan.rows[i - 1].second)) scan.drops.push_back(scan.rows[i].first);

    unsigned start = n_max;
    while (start > 1 && scan.rows[start - 1].second > scan.rows[start - 2].second) --start;
    if (start < n_max) scan.increasing_from = start;
    return scan;
}

struct LogBracket {
    double lower, log_x, upper;
};

/// m(1 - x^{-1/m}) <= log x <= m(x^{1/m} - 1).
inline LogBracket log_bracket(double x, unsigned m)
{
    if (!(x > 0)) throw std::invalid_argument("log_bracket: x must be positive");
    if (m < 2) throw std::invalid_argument("log_bracket: m must be >= 2");
    const double lx = std::log(x);
    const double md = m;
    // expm1 keeps the bracket sharp near x = 1.
    return {-md * std::expm1(-lx / md), lx, md * std::expm1(lx / md)};
}

/// True iff the bracket holds, strictly away from x = 1 and with equality at x = 1.
inline bool log_inequality_check(double x, unsigned m)
{
    const auto b = log_bracket(x, m);
    if (x == 1.0) return b.lower == b.log_x && b.log_x == b.upper;
    return b.lower < b.log_x && b.log_x < b.upper;
}

struct TransformSides {
    double lhs, rhs, error;
};

namespace detail {

// int_0^1 s^a (1-s)^b / (1 - f s)^p ds
inline QuadResult kernel_integral(double a, double b, double p, double f, double tol)
{
    auto integrand = [&](double s, double sc) {
        const UnitPoint pt(s, sc);
        return std::pow(pt.x, a) * std::pow(pt.one_minus_x, b) * std::pow(1.0 - f * pt.x, -p);
    };
    double err = 0, l1 = 0;
    const double v = tanh_sinh_rule().integrate(integrand, 0.0, 1.0, tol, &err, &l1);
    return {v, err};
}

} // namespace detail

/// Both sides of L(a, b; n+1) = (1-f)^{b-n} L(b, a; a+b+1-n), L(a, b; p) = int_0^1 s^a (1-s)^b/(1-fs)^p ds.
inline TransformSides canonical_transform_sides(double a, double b, unsigned n, double f, const PrecisionBudget& budget)
{
    if (!(a >= 0) || !(b >= 0)) throw std::domain_error("canonical_transform: a and b must be nonnegative");
    if (!(f > 0 && f < 1)) throw std::domain_error("canonical_transform: f must lie in (0, 1)");
    const double tol = budget.tol() * 1e-3;
    const auto left = detail::kernel_integral(a, b, n + 1.0, f, tol);
    const auto right = detail::kernel_integral(b, a, a + b + 1.0 - n, f, tol);
    const double scale = std::pow(1.0 - f, b - static_cast<double>(n));
    return {left.value, scale * right.value, left.error + scale * right.error};
}

/// Agreement of the two sides to budget.tol(), relative to max(1, |lhs|).
inline bool canonical_transform_check(double a, double b, unsigned n, double f, const PrecisionBudget& budget)
{
    const auto t = canonical_transform_sides(a, b, n, f, budget);
    return std::fabs(t.lhs - t.rhs) <= budget.tol() * std::max(1.0, std::fabs(t.lhs));
}

/// log(s(1-u) / (u(1-s))) / (s - u), finite and positive on (0,1)^2; 1/(s(1-s)) on the diagonal.
inline double log_ratio_kernel(double s, double u)
{
    const double base = u * (1.0 - s);
    const double d = (s - u) / base;  // s(1-u)/(u(1-s)) = 1 + d
    const double factor = std::fabs(d) < 1e-8 ? 1.0 - d / 2 + d * d / 3 : std::log1p(d) / d;
    return factor / base;
}

struct McResult {
    double estimate = 0;
    double target = 0;
    double relative_error = 0;
    double std_error = 0;
};

namespace detail {

struct BatchSums {
    double sum = 0, sum_sq = 0;
};

inline double unit_open(std::mt19937_64& rng)
{
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

inline BatchSums r2_batch(unsigned n, std::uint64_t count, std::uint64_t seed, std::uint64_t batch)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(batch), static_cast<std::uint32_t>(batch >> 32)};
    std::mt19937_64 rng(seq);
    BatchSums out;
    const double nn = n;
    for (std::uint64_t i = 0; i < count; ++i) {
        const double x = unit_open(rng), y = unit_open(rng), s = unit_open(rng), u = unit_open(rng);
        const double one_minus_fs = (1.0 - s) + x * y * s;  // 1 - (1 - xy) s
        const double poly = std::pow(x * (1 - x) * y * (1 - y) * s * (1 - u), nn);
        const double v = poly / std::pow(one_minus_fs, nn + 1) * log_ratio_kernel(s, u);
        out.sum += v;
        out.sum_sq += v * v;
    }
    return out;
}

} // namespace detail

/// Monte Carlo estimate of R2(n) over (0,1)^4, compared against J3(n)/6.
/// Samples are split into a fixed number of independently seeded batches reduced in batch order,
/// so the estimate depends only on (n, samples, seed), not on the thread count.
inline McResult mc_check_r2(unsigned n, std::uint64_t samples, std::uint64_t seed, unsigned threads = 0)
{
    if (n < 1) throw std::invalid_argument("mc_check_r2: n must be >= 1");
    if (samples < 1) throw std::invalid_argument("mc_check_r2: samples must be >= 1");
    constexpr std::uint64_t batches = 64;
    std::vector<detail::BatchSums> sums(batches);
    auto batch_size = [&](std::uint64_t b) { return samples / batches + (b < samples % batches ? 1 : 0); };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, batches));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::uint64_t b = t; b < batches; b += threads) sums[b] = detail::r2_batch(n, batch_size(b), seed, b);
            });
    }
    double sum = 0, sum_sq = 0;
    for (const auto& s : sums) {
        sum += s.sum;
        sum_sq += s.sum_sq;
    }
    const double N = static_cast<double>(samples);
    McResult r;
    r.estimate = sum / N;
    const double var = std::max(0.0, sum_sq / N - r.estimate * r.estimate);
    r.std_error = std::sqrt(var / N);
    r.target = to_double(combo_eval(j3_exact(n), PrecisionBudget(1e-12))) / 6.0;
    r.relative_error = std::fabs(r.estimate - r.target) / r.target;
    return r;
}

} // namespace beukers
