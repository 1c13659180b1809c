#pragma once

// Numeric referees for the closed forms. Nothing here touches the partial fraction machinery:
// the series route sums the integrand's expansion term by term, the quadrature routes integrate
// the defining log-kernel directly.

#include "beukers/zeta.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace beukers {

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what + " (achieved error " + std::to_string(achieved) + ")"), achieved_(achieved)
    {
    }
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

struct SeriesTailBound {
    long terms_used = 0;        // K: terms k = 0..K-1 summed directly
    double tail_estimate = 0;   // upper bound on sum_{k >= K}
};

struct SeriesEstimate {
    double value = 0;
    double error_bound = 0;
    SeriesTailBound tail;
};

struct QuadResult {
    double value = 0;
    double error = 0;
};

namespace detail {

inline void compositions(unsigned parts, unsigned total, std::vector<std::vector<unsigned>>& out)
{
    std::vector<unsigned> cur(parts, 0);
    auto rec = [&](auto&& self, unsigned pos, unsigned left) -> void {
        if (pos + 1 == parts) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, total);
}

} // namespace detail

/// The k-th summand of I_m(a) viewed as a function of real k:
///   sum over m_1 + ... + m_n = m of prod_i (1 + a_i + k)^{-(1 + m_i)},
/// i.e. (-1)^m/m! * d^m/dt^m prod_i 1/(1 + a_i + k + t) at t = 0.
class SeriesSummand {
public:
    SeriesSummand(unsigned m, std::span<const std::int64_t> a) : shifts_(a.begin(), a.end())
    {
        if (a.empty()) throw std::invalid_argument("SeriesSummand: empty exponent list");
        detail::compositions(static_cast<unsigned>(a.size()), m, comps_);
    }

    double operator()(double k) const
    {
        double total = 0;
        for (const auto& comp : comps_) {
            double prod = 1;
            for (std::size_t i = 0; i < shifts_.size(); ++i)
                prod *= std::pow(1.0 + static_cast<double>(shifts_[i]) + k, -(1.0 + comp[i]));
            total += prod;
        }
        return total;
    }

    std::size_t composition_count() const noexcept { return comps_.size(); }

private:
    std::vector<std::int64_t> shifts_;
    std::vector<std::vector<unsigned>> comps_;
};

/// sum_{k>=0} of the series summand. The tail beyond K is bracketed using convexity of the summand:
///   int_K^inf f + f(K)/2  <=  sum_{k>=K} f(k)  <=  int_{K-1/2}^inf f,
/// and the midpoint is used.
inline SeriesEstimate series_oracle(unsigned m, std::span<const std::int64_t> a, const PrecisionBudget& budget)
{
    if (a.empty()) throw std::invalid_argument("series_oracle: empty exponent list");
    for (auto v : a)
        if (v < 0) throw std::invalid_argument("series_oracle: exponents must be nonnegative");
    if (a.size() == 1 && m == 0) throw std::domain_error("series_oracle: I_0(a) diverges");

    const SeriesSummand f(m, a);
    using boost::math::quadrature::gauss_kronrod;
    constexpr double eps = std::numeric_limits<double>::epsilon();

    for (long K = 16;; K *= 2) {
        const double k0 = static_cast<double>(K);
        double err_far = 0, err_near = 0;
        // x = K / t maps [K, inf) onto (0, 1].
        const double far = gauss_kronrod<double, 31>::integrate(
            [&](double t) { return t <= 0 ? 0.0 : f(k0 / t) * k0 / (t * t); }, 0.0, 1.0, 10, 1e-12, &err_far);
        const double near = gauss_kronrod<double, 31>::integrate(f, k0 - 0.5, k0, 10, 1e-12, &err_near);
        const double lower = far + f(k0) / 2;
        const double upper = far + near;
        const double half_width = std::fabs(upper - lower) / 2 + err_far + err_near;

        if (half_width < budget.tol() / 2 || K > (1L << 24)) {
            double head = 0;
            for (long k = K - 1; k >= 0; --k) head += f(static_cast<double>(k));
            const double value = head + (lower + upper) / 2;
            const double rounding = 4.0 * eps * static_cast<double>(K) * std::fabs(value);
            SeriesEstimate out;
            out.value = value;
            out.error_bound = half_width + rounding;
            out.tail = SeriesTailBound{K, upper + err_far + err_near};
            if (out.error_bound >= budget.tol())
                throw QuadratureError("series_oracle: tolerance not met", out.error_bound);
            return out;
        }
    }
}

namespace detail {

// Non-const: the complement-aware overload is not const-callable in older Boost.
inline boost::math::quadrature::tanh_sinh<double>& tanh_sinh_rule()
{
    thread_local boost::math::quadrature::tanh_sinh<double> rule(10);
    return rule;
}

// log(x) and 1 - x from tanh_sinh's (x, distance-to-nearest-endpoint) pair on [0, 1].
struct UnitPoint {
    double x, one_minus_x, log_x;
    UnitPoint(double x_, double xc)
    {
        if (xc > 0) {  // right half: xc = 1 - x exactly
            x = 1.0 - xc;
            one_minus_x = xc;
            log_x = std::log1p(-xc);
        } else {
            x = x_;
            one_minus_x = 1.0 - x_;
            log_x = std::log(x_);
        }
    }
};

inline double inverse_factorial(unsigned m)
{
    double f = 1;
    for (unsigned k = 2; k <= m; ++k) f *= k;
    return 1.0 / f;
}

} // namespace detail

/// (-1)^m/m! * int_0^1 log^m(x) x^a / (1 - x) dx, which equals zeta(m+1, a+1).
inline QuadResult quad_oracle_1d(unsigned m, std::int64_t a, const PrecisionBudget& budget)
{
    if (m == 0) throw std::domain_error("quad_oracle_1d: m must be >= 1");
    if (a < 0) throw std::invalid_argument("quad_oracle_1d: a must be >= 0");
    const double norm = detail::inverse_factorial(m);
    auto integrand = [&](double x, double xc) {
        const detail::UnitPoint p(x, xc);
        return norm * std::pow(-p.log_x, static_cast<double>(m)) * std::pow(p.x, static_cast<double>(a)) / p.one_minus_x;
    };
    double err = 0, l1 = 0;
    const double v = detail::tanh_sinh_rule().integrate(integrand, 0.0, 1.0, budget.tol() * 1e-2, &err, &l1);
    if (!(err < budget.tol())) throw QuadratureError("quad_oracle_1d: tolerance not met", err);
    return {v, err};
}

/// (-1)^m/m! * int_{(0,1)^2} log^m(xy) x^a y^b / (1 - xy), nested tanh-sinh in x and y.
/// The reported error is the outer estimate plus the inner estimates integrated over x.
inline QuadResult quad_oracle_2d(unsigned m, std::int64_t a, std::int64_t b, const PrecisionBudget& budget)
{
    if (a < 0 || b < 0) throw std::invalid_argument("quad_oracle_2d: exponents must be >= 0");
    const double norm = detail::inverse_factorial(m);
    auto& rule = detail::tanh_sinh_rule();
    const double inner_tol = budget.tol() * 1e-3;

    // (value, error) of the inner y-integral, scaled by norm * x^a; memoized for the error pass.
    std::map<std::pair<double, double>, std::pair<double, double>> memo;
    auto inner_at = [&](double x, double xc) {
        if (auto it = memo.find({x, xc}); it != memo.end()) return it->second;
        const detail::UnitPoint px(x, xc);
        auto inner = [&](double y, double yc) {
            const detail::UnitPoint py(y, yc);
            // 1 - xy = (1-x) + (1-y) - (1-x)(1-y), exact near the (1,1) corner.
            const double denom = px.one_minus_x + py.one_minus_x - px.one_minus_x * py.one_minus_x;
            const double lg = -(px.log_x + py.log_x);
            return std::pow(lg, static_cast<double>(m)) * std::pow(py.x, static_cast<double>(b)) / denom;
        };
        double err = 0;
        const double v = rule.integrate(inner, 0.0, 1.0, inner_tol, &err);
        const double w = norm * std::pow(px.x, static_cast<double>(a));
        return memo[{x, xc}] = std::pair{w * v, w * err};
    };

    double err = 0, l1 = 0;
    const double v = rule.integrate([&](double x, double xc) { return inner_at(x, xc).first; }, 0.0, 1.0,
                                    budget.tol() * 1e-2, &err, &l1);
    const double inner_err = rule.integrate([&](double x, double xc) { return inner_at(x, xc).second; }, 0.0, 1.0, 1e-3);
    const double total = err + inner_err;
    if (!(total < budget.tol())) throw QuadratureError("quad_oracle_2d: tolerance not met", total);
    return {v, total};
}

} // namespace beukers
