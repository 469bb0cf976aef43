#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mixc1 {

/// Exact arbitrary-precision fraction, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", integers and finite decimals ("-0.125", "3e-2").
Rational parse_rational(std::string_view text);

/// Decimal string when the expansion terminates ("0.25", "-3"), "p/q" otherwise.
std::string to_string(const Rational& value);

/// Always "p/q" or "p".
std::string to_fraction_string(const Rational& value);

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// num / den in canonical form.
inline Rational ratio(const Integer& num, const Integer& den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// n (n-1) ... (n-k+1); empty product is 1.
Integer falling_factorial(long n, unsigned k);

} // namespace mixc1
