#pragma once

// Closed forms for the generalized Beukers integral
//
//   I_m(a_1..a_n) = (-1)^m/m! * int_{(0,1)^n} log^m(prod x_i) prod x_i^{a_i} / (1 - prod x_i) dx
//
// as exact rational combinations of zeta values, plus the denominator bound on the result.

#include "beukers/arith.hpp"
#include "beukers/pfd.hpp"
#include "beukers/zeta.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace beukers {

class IntegralSpec {
public:
    IntegralSpec(unsigned m, std::vector<std::int64_t> exponents) : m_(m), a_(std::move(exponents))
    {
        if (a_.empty()) throw std::invalid_argument("IntegralSpec: need at least one exponent");
        for (auto v : a_)
            if (v < 0) throw std::invalid_argument("IntegralSpec: exponents must be nonnegative");
        if (a_.size() == 1 && m_ == 0)
            throw std::domain_error("IntegralSpec: I_0(a) diverges (n = 1 requires m >= 1)");
    }

    unsigned m() const noexcept { return m_; }
    const std::vector<std::int64_t>& exponents() const noexcept { return a_; }
    unsigned n() const noexcept { return static_cast<unsigned>(a_.size()); }
    MultisetSpec multiset() const { return MultisetSpec::from_exponents(a_); }

    std::string describe() const
    {
        std::string s = "I_" + std::to_string(m_) + "(";
        for (std::size_t i = 0; i < a_.size(); ++i) s += (i ? "," : "") + std::to_string(a_[i]);
        return s + ")";
    }

private:
    unsigned m_;
    std::vector<std::int64_t> a_;
};

/// n = 1: I_m(a) = zeta(m+1, a+1).
inline ZetaCombo eval_single(unsigned m, std::int64_t a)
{
    if (m == 0) throw std::domain_error("eval_single: I_0(a) diverges");
    return hurwitz_combo(static_cast<int>(m) + 1, a);
}

/// n = 2, kept as a separate route from eval_general.
inline ZetaCombo eval_pair(unsigned m, std::int64_t a, std::int64_t b)
{
    if (a < 0 || b < 0) throw std::invalid_argument("eval_pair: exponents must be nonnegative");
    if (a == b) return hurwitz_combo(static_cast<int>(m) + 2, a) * Rational(m + 1);
    const auto lo = std::min(a, b);
    const auto hi = std::max(a, b);
    return ZetaCombo::rational((harmonic(m + 1, hi) - harmonic(m + 1, lo)) / Rational(hi - lo));
}

/// Evaluates from an already-computed decomposition of the shifted multiset.
/// The simple-pole part telescopes to a rational because sum_i mu_i1 = 0.
inline ZetaCombo eval_from_pfd(unsigned m, const PfdCoefficients& coeffs)
{
    const auto& c = coeffs.spec().points();
    const auto& b = coeffs.spec().multiplicities();
    const std::size_t r = c.size();

    ZetaCombo out;
    const Rational top = harmonic(m + 1, c.back());
    for (std::size_t i = 0; i + 1 < r; ++i) out.add_constant(coeffs.mu(i, 1) * (top - harmonic(m + 1, c[i])));
    for (std::size_t i = 0; i < r; ++i) {
        for (unsigned j = 2; j <= b[i]; ++j) {
            const Rational weight = Rational(binomial(m + j - 1, m)) * coeffs.mu(i, j);
            out += hurwitz_combo(static_cast<int>(m + j), c[i]) * weight;
        }
    }
    return out;
}

/// General n >= 2 closed form; n == 1 dispatches to eval_single.
inline ZetaCombo eval_general(const IntegralSpec& spec)
{
    if (spec.n() == 1) return eval_single(spec.m(), spec.exponents().front());
    const MultisetSpec ms = spec.multiset();
    const unsigned m = spec.m();
    if (ms.distinct() == 1) {
        const unsigned n = spec.n();
        return hurwitz_combo(static_cast<int>(n + m), ms.points().front()) * Rational(binomial(m + n - 1, m));
    }
    return eval_from_pfd(m, inhomogeneous_pfd(ms));
}

/// Upper bound that the denominator q of I_m(a) must divide.
///   r = 1: lcm(1..c_1)^{n+m}
///   r > 1: (b+ - 1)! * lcm(1..c_r)^{m+b+} * prod_{s<t} (c_t - c_s)^{n-1}
inline Integer denominator_bound(const IntegralSpec& spec)
{
    if (spec.n() < 2) throw std::invalid_argument("denominator_bound: requires n >= 2");
    const MultisetSpec ms = spec.multiset();
    const auto& c = ms.points();
    const unsigned n = spec.n();
    const unsigned m = spec.m();
    if (ms.distinct() == 1) return pow(lcm_upto(c.front()), n + m);

    const unsigned bplus = ms.max_multiplicity();
    Integer bound = factorial(bplus - 1) * pow(lcm_upto(c.back()), m + bplus);
    for (std::size_t s = 0; s < c.size(); ++s)
        for (std::size_t t = s + 1; t < c.size(); ++t) bound *= pow(Integer(c[t] - c[s]), n - 1);
    return bound;
}

struct DenominatorReport {
    IntegralSpec spec;
    Integer q;
    Integer bound;
    bool divides;
};

inline DenominatorReport check_denominator(const IntegralSpec& spec)
{
    const Integer bound = denominator_bound(spec);
    const Integer q = combo_denominator(eval_general(spec));
    return DenominatorReport{spec, q, bound, bound % q == 0};
}

} // namespace beukers
