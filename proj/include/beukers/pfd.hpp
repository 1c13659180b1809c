#pragma once

// Partial fraction decomposition of prod_i 1/(c_i + x)^{b_i} over the rationals.

#include "beukers/arith.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace beukers {

/// The multiset {c_1^(b_1), ..., c_r^(b_r)} with c strictly increasing.
class MultisetSpec {
public:
    MultisetSpec(std::vector<std::int64_t> points, std::vector<unsigned> multiplicities)
        : points_(std::move(points)), mult_(std::move(multiplicities))
    {
        if (points_.empty()) throw std::invalid_argument("MultisetSpec: empty");
        if (points_.size() != mult_.size())
            throw std::invalid_argument("MultisetSpec: points/multiplicities length mismatch");
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (mult_[i] < 1) throw std::invalid_argument("MultisetSpec: multiplicity must be >= 1");
            if (i > 0 && points_[i - 1] >= points_[i])
                throw std::invalid_argument("MultisetSpec: points must be strictly increasing");
        }
    }

    /// Sort-and-group canonicalization of a raw list a_1..a_n.
    static MultisetSpec from_exponents(std::span<const std::int64_t> raw)
    {
        if (raw.empty()) throw std::invalid_argument("MultisetSpec: empty exponent list");
        std::vector<std::int64_t> sorted(raw.begin(), raw.end());
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::int64_t> pts;
        std::vector<unsigned> mult;
        for (auto v : sorted) {
            if (!pts.empty() && pts.back() == v)
                ++mult.back();
            else {
                pts.push_back(v);
                mult.push_back(1);
            }
        }
        return MultisetSpec(std::move(pts), std::move(mult));
    }

    const std::vector<std::int64_t>& points() const noexcept { return points_; }
    const std::vector<unsigned>& multiplicities() const noexcept { return mult_; }
    std::size_t distinct() const noexcept { return points_.size(); }

    unsigned total() const noexcept
    {
        unsigned n = 0;
        for (auto b : mult_) n += b;
        return n;
    }

    unsigned max_multiplicity() const noexcept { return *std::max_element(mult_.begin(), mult_.end()); }

    bool simple() const noexcept { return max_multiplicity() == 1; }

    friend bool operator==(const MultisetSpec&, const MultisetSpec&) = default;

private:
    std::vector<std::int64_t> points_;
    std::vector<unsigned> mult_;
};

/// mu(i, j) is the coefficient of (c_i + x)^{-j}, i in [0, r), j in [1, b_i].
class PfdCoefficients {
public:
    PfdCoefficients(MultisetSpec spec, std::vector<std::vector<Rational>> mu)
        : spec_(std::move(spec)), mu_(std::move(mu))
    {
        if (mu_.size() != spec_.distinct()) throw std::invalid_argument("PfdCoefficients: row count mismatch");
        for (std::size_t i = 0; i < mu_.size(); ++i)
            if (mu_[i].size() != spec_.multiplicities()[i])
                throw std::invalid_argument("PfdCoefficients: row length mismatch");
    }

    const MultisetSpec& spec() const noexcept { return spec_; }
    const std::vector<std::vector<Rational>>& table() const noexcept { return mu_; }

    const Rational& mu(std::size_t i, unsigned j) const { return mu_.at(i).at(j - 1); }
    Rational& mu(std::size_t i, unsigned j) { return mu_.at(i).at(j - 1); }

    /// sum_i mu(i, 1); zero whenever r >= 2.
    Rational simple_pole_sum() const
    {
        Rational s = 0;
        for (const auto& row : mu_) s += row.front();
        return s;
    }

    friend bool operator==(const PfdCoefficients&, const PfdCoefficients&) = default;

private:
    MultisetSpec spec_;
    std::vector<std::vector<Rational>> mu_;
};

/// lambda_i = prod_{j != i} 1/(a_j - a_i) for pairwise distinct a.
inline std::vector<Rational> homogeneous_pfd(std::span<const std::int64_t> a)
{
    if (a.empty()) throw std::invalid_argument("homogeneous_pfd: empty input");
    std::vector<Rational> lambda;
    lambda.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Integer den = 1;
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (j == i) continue;
            if (a[j] == a[i])
                throw std::invalid_argument("homogeneous_pfd: repeated point; use inhomogeneous_pfd");
            den *= a[j] - a[i];
        }
        lambda.emplace_back(Integer(1), den);
    }
    return lambda;
}

namespace detail {

// Calls visit(parts) for every composition parts[0] + ... + parts[k-1] == total.
inline void for_each_composition(std::size_t k, unsigned total, const std::function<void(const std::vector<unsigned>&)>& visit)
{
    std::vector<unsigned> parts(k, 0);
    if (k == 0) {
        if (total == 0) visit(parts);
        return;
    }
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
        if (pos + 1 == k) {
            parts[pos] = left;
            visit(parts);
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            parts[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, total);
}

inline Integer multinomial(unsigned total, const std::vector<unsigned>& parts)
{
    Integer r = factorial(total);
    for (auto p : parts) r /= factorial(p);
    return r;
}

} // namespace detail

/// Coefficients mu_ij of prod 1/(c_i + x)^{b_i} = sum_i sum_j mu_ij/(c_i + x)^j.
///
/// With G_i(z) = prod_{l != i} (c_l - z)^{-b_l} and M = b_i - j,
///   mu_ij = (-1)^M / M! * G_i^{(M)}(c_i),
/// and the M-th derivative is expanded over compositions M_1 + ... + M_{r-1} = M:
///   G_i^{(M)}(z) = sum multinomial(M; M_l) prod_l rising(b_l, M_l) (c_l - z)^{-(b_l + M_l)}.
inline PfdCoefficients inhomogeneous_pfd(const MultisetSpec& spec)
{
    const auto& c = spec.points();
    const auto& b = spec.multiplicities();
    const std::size_t r = spec.distinct();

    std::vector<std::vector<Rational>> mu(r);
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<std::int64_t> other_pts;
        std::vector<unsigned> other_mult;
        for (std::size_t l = 0; l < r; ++l) {
            if (l == i) continue;
            other_pts.push_back(c[l]);
            other_mult.push_back(b[l]);
        }
        mu[i].resize(b[i]);
        for (unsigned j = 1; j <= b[i]; ++j) {
            const unsigned order = b[i] - j;
            Rational deriv = 0;
            detail::for_each_composition(other_pts.size(), order, [&](const std::vector<unsigned>& parts) {
                Rational term(detail::multinomial(order, parts));
                for (std::size_t l = 0; l < other_pts.size(); ++l) {
                    term *= rising_factorial(other_mult[l], parts[l]);
                    const Integer gap = other_pts[l] - c[i];
                    term /= pow(gap, other_mult[l] + parts[l]);
                }
                deriv += term;
            });
            Rational value = deriv / factorial(order);
            if (order % 2 == 1) value = -value;
            mu[i][j - 1] = value;
        }
    }
    return PfdCoefficients(spec, std::move(mu));
}

/// Exact check of the decomposition at each sample point; throws if a point is a pole.
inline bool verify_pfd(const PfdCoefficients& coeffs, std::span<const Rational> sample_points)
{
    const auto& spec = coeffs.spec();
    const auto& c = spec.points();
    const auto& b = spec.multiplicities();
    for (const auto& x : sample_points)
        for (auto ci : c)
            if (x + ci == 0) throw std::invalid_argument("verify_pfd: sample point " + to_string(x) + " is a pole");

    for (const auto& x : sample_points) {
        Rational lhs = 1;
        for (std::size_t i = 0; i < c.size(); ++i) lhs /= pow(Rational(x + c[i]), static_cast<int>(b[i]));
        Rational rhs = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            const Rational base = x + c[i];
            Rational power = base;
            for (unsigned j = 1; j <= b[i]; ++j) {
                rhs += coeffs.mu(i, j) / power;
                power *= base;
            }
        }
        if (lhs != rhs) return false;
    }
    return true;
}

/// Wraps simple-pole coefficients in the general table shape (all b_i == 1).
inline PfdCoefficients as_coefficients(std::span<const std::int64_t> distinct_points, std::vector<Rational> lambda)
{
    std::vector<std::int64_t> pts(distinct_points.begin(), distinct_points.end());
    std::vector<std::size_t> order(pts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto l, auto r) { return pts[l] < pts[r]; });
    std::vector<std::int64_t> sorted;
    std::vector<std::vector<Rational>> rows;
    for (auto k : order) {
        sorted.push_back(pts[k]);
        rows.push_back({lambda[k]});
    }
    MultisetSpec spec(std::move(sorted), std::vector<unsigned>(pts.size(), 1));
    return PfdCoefficients(std::move(spec), std::move(rows));
}

} // namespace beukers
