#pragma once

// Exact integer/rational foundation shared by every other header.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace beukers {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

/// Positive denominator of x in lowest terms; 1 for x == 0.
inline Integer reduced_denominator(const Rational& x)
{
    if (x == 0) return 1;
    return denominator_of(x);
}

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

inline Integer lcm(const Integer& a, const Integer& b)
{
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

/// d_n = lcm(1, ..., n).
inline Integer lcm_range(std::int64_t n)
{
    if (n < 1) throw std::invalid_argument("lcm_range: n must be >= 1");
    Integer d = 1;
    for (std::int64_t k = 2; k <= n; ++k) d = lcm(d, Integer(k));
    return d;
}

/// lcm(1, ..., n) with the empty range (n == 0) mapped to 1.
inline Integer lcm_upto(std::int64_t n) { return n <= 0 ? Integer(1) : lcm_range(n); }

inline Integer pow(const Integer& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

inline Rational pow(const Rational& base, int exponent)
{
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("pow: zero to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    Rational result = 1;
    Rational b = base;
    for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
        if (e & 1u) result *= b;
        if (e > 1) b *= b;
    }
    return result;
}

inline Integer factorial(unsigned n)
{
    Integer f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

inline Integer binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer c = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;
    }
    return c;
}

/// x (x+1) ... (x+k-1)
inline Integer rising_factorial(std::int64_t x, unsigned k)
{
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) r *= x + static_cast<std::int64_t>(i);
    return r;
}

/// Generalized harmonic number H_m(x) = sum_{k=1}^{x} k^{-m}.
inline Rational harmonic(unsigned m, std::int64_t x)
{
    if (m < 1) throw std::invalid_argument("harmonic: order must be >= 1");
    if (x < 0) throw std::invalid_argument("harmonic: argument must be >= 0");
    // Common denominator lcm(1..x)^m keeps the accumulation in integers.
    if (x == 0) return 0;
    const Integer den = pow(lcm_range(x), m);
    Integer num = 0;
    for (std::int64_t k = 1; k <= x; ++k) num += den / pow(Integer(k), m);
    return Rational(num, den);
}

inline bool is_integer(const Rational& x) { return denominator_of(x) == 1; }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& x)
{
    if (is_integer(x)) return numerator_of(x).str();
    return numerator_of(x).str() + "/" + denominator_of(x).str();
}

inline std::string to_string(const Integer& x) { return x.str(); }

/// Inverse of to_string: accepts "p" or "p/q" with optional leading '-'.
inline Rational parse_rational(std::string_view text)
{
    auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (!s.empty() && allow_sign && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!digits_ok(num, true)) throw std::invalid_argument("parse_rational: bad numerator '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return Rational(Integer(std::string(num)));
    const std::string_view den = text.substr(slash + 1);
    if (!digits_ok(den, false)) throw std::invalid_argument("parse_rational: bad denominator '" + std::string(text) + "'");
    const Integer d(std::string{den});
    if (d == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return Rational(Integer(std::string(num)), d);
}

} // namespace beukers
