#pragma once

// Exact values q0 + sum_s q_s * zeta(s) and their certified numeric evaluation.

#include "beukers/arith.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace beukers {

using Real = boost::multiprecision::mpfr_float;

/// Sets the default decimal precision of Real for the enclosing scope.
class DigitsGuard {
public:
    explicit DigitsGuard(unsigned digits10) : saved_(Real::default_precision()) { Real::default_precision(digits10); }
    ~DigitsGuard() { Real::default_precision(saved_); }
    DigitsGuard(const DigitsGuard&) = delete;
    DigitsGuard& operator=(const DigitsGuard&) = delete;

private:
    unsigned saved_;
};

/// Maximum permitted absolute error of a numeric evaluation.
class PrecisionBudget {
public:
    explicit PrecisionBudget(double tol) : tol_(tol)
    {
        if (!(tol > 0) || !std::isfinite(tol)) throw std::invalid_argument("PrecisionBudget: tol must be positive");
    }
    double tol() const noexcept { return tol_; }

    /// Decimal digits that make rounding negligible next to tol, for values of size `magnitude`.
    unsigned working_digits(double magnitude = 1.0) const
    {
        const double want = -std::log10(tol_) + std::log10(std::max(magnitude, 1.0)) + 20.0;
        return static_cast<unsigned>(std::max(30.0, std::ceil(want)));
    }

private:
    double tol_;
};

/// Sparse formal combination; zero coefficients are never stored and all indices are >= 2.
class ZetaCombo {
public:
    ZetaCombo() = default;

    static ZetaCombo rational(Rational q)
    {
        ZetaCombo c;
        c.constant_ = std::move(q);
        return c;
    }

    static ZetaCombo zeta(int s, const Rational& coefficient = 1)
    {
        ZetaCombo c;
        c.add_term(s, coefficient);
        return c;
    }

    const Rational& constant() const noexcept { return constant_; }
    const std::map<int, Rational>& terms() const noexcept { return terms_; }

    Rational coefficient(int s) const
    {
        auto it = terms_.find(s);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_rational() const noexcept { return terms_.empty(); }
    bool is_zero() const noexcept { return terms_.empty() && constant_ == 0; }

    void add_constant(const Rational& q) { constant_ += q; }

    void add_term(int s, const Rational& coefficient)
    {
        if (s < 2) throw std::invalid_argument("ZetaCombo: zeta index must be >= 2");
        if (coefficient == 0) return;
        auto [it, inserted] = terms_.try_emplace(s, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second == 0) terms_.erase(it);
        }
    }

    ZetaCombo& operator+=(const ZetaCombo& o)
    {
        constant_ += o.constant_;
        for (const auto& [s, q] : o.terms_) add_term(s, q);
        return *this;
    }

    ZetaCombo& operator-=(const ZetaCombo& o) { return *this += o * Rational(-1); }

    ZetaCombo& operator*=(const Rational& k)
    {
        if (k == 0) return *this = ZetaCombo{};
        constant_ *= k;
        for (auto& [s, q] : terms_) q *= k;
        return *this;
    }

    friend ZetaCombo operator+(ZetaCombo a, const ZetaCombo& b) { return a += b; }
    friend ZetaCombo operator-(ZetaCombo a, const ZetaCombo& b) { return a -= b; }
    friend ZetaCombo operator*(ZetaCombo a, const Rational& k) { return a *= k; }
    friend ZetaCombo operator*(const Rational& k, ZetaCombo a) { return a *= k; }

    friend bool operator==(const ZetaCombo&, const ZetaCombo&) = default;

private:
    Rational constant_ = 0;
    std::map<int, Rational> terms_;
};

inline std::string to_string(const ZetaCombo& v)
{
    std::string out;
    for (const auto& [s, q] : v.terms()) {
        if (!out.empty()) out += q < 0 ? " - " : " + ";
        else if (q < 0) out += "-";
        const Rational mag = q < 0 ? Rational(-q) : q;
        if (mag != 1) out += to_string(mag) + "*";
        out += "zeta(" + std::to_string(s) + ")";
    }
    if (v.constant() != 0 || out.empty()) {
        if (out.empty()) return to_string(v.constant());
        out += v.constant() < 0 ? " - " : " + ";
        out += to_string(v.constant() < 0 ? Rational(-v.constant()) : v.constant());
    }
    return out;
}

/// zeta(s, a+1) = zeta(s) - H_s(a).
inline ZetaCombo hurwitz_combo(int s, std::int64_t a)
{
    if (s < 2) throw std::invalid_argument("hurwitz_combo: s must be >= 2");
    if (a < 0) throw std::invalid_argument("hurwitz_combo: shift must be >= 0");
    ZetaCombo v = ZetaCombo::zeta(s);
    v.add_constant(-harmonic(static_cast<unsigned>(s), a));
    return v;
}

/// Least positive q making q * (every stored rational) integral; 1 for the zero combo.
inline Integer combo_denominator(const ZetaCombo& v)
{
    Integer q = reduced_denominator(v.constant());
    for (const auto& [s, c] : v.terms()) q = lcm(q, reduced_denominator(c));
    return q;
}

namespace detail {

// Width of the tail bracket for sum_{k>=K} k^{-s}:
//   lower = K^{1-s}/(s-1) + K^{-s}/2        (trapezoid over a convex summand)
//   upper = (K-1/2)^{1-s}/(s-1)             (midpoint over a convex summand)
inline Real zeta_tail_lower(int s, const Real& K)
{
    return pow(K, 1 - s) / (s - 1) + pow(K, -s) / 2;
}

inline Real zeta_tail_upper(int s, const Real& K)
{
    return pow(K - Real(0.5), 1 - s) / (s - 1);
}

} // namespace detail

/// zeta(s) to within budget.tol(): direct sum below K plus the midpoint of a certified tail bracket.
/// The result carries budget.working_digits() of precision.
inline Real zeta_numeric(int s, const PrecisionBudget& budget)
{
    if (s < 2) throw std::invalid_argument("zeta_numeric: s must be >= 2");
    DigitsGuard guard(budget.working_digits());

    const Real target = Real(budget.tol()) / 4;
    long K = 8;
    for (;;) {
        const Real k(K);
        const Real width = detail::zeta_tail_upper(s, k) - detail::zeta_tail_lower(s, k);
        if (width / 2 <= target) break;
        if (K > (1L << 40)) throw std::runtime_error("zeta_numeric: tolerance unreachable");
        K *= 2;
    }
    Real sum = 0;
    for (long k = K - 1; k >= 1; --k) sum += pow(Real(k), -s);
    const Real k(K);
    sum += (detail::zeta_tail_lower(s, k) + detail::zeta_tail_upper(s, k)) / 2;
    return sum;
}

inline Real to_real(const Rational& q, unsigned digits10)
{
    DigitsGuard guard(digits10);
    return Real(q);
}

/// Numeric value of v with total error < budget.tol(); the tolerance is split evenly across zeta terms.
inline Real combo_eval(const ZetaCombo& v, const PrecisionBudget& budget)
{
    double magnitude = 1.0;
    for (const auto& [s, c] : v.terms()) magnitude = std::max(magnitude, std::fabs(c.convert_to<double>()));
    magnitude = std::max(magnitude, std::fabs(v.constant().convert_to<double>()));
    const unsigned digits = budget.working_digits(magnitude);
    DigitsGuard guard(digits);

    Real total = Real(v.constant());
    const double share = v.terms().empty() ? budget.tol() : budget.tol() / static_cast<double>(v.terms().size());
    for (const auto& [s, c] : v.terms()) {
        const double scale = std::max(1.0, std::fabs(c.convert_to<double>()));
        const Real z = zeta_numeric(s, PrecisionBudget(share / (2.0 * scale)));
        total += Real(c) * Real(z, digits);
    }
    return total;
}

inline double to_double(const Real& x) { return x.convert_to<double>(); }

} // namespace beukers
