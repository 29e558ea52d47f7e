#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hookcontent {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational, always kept in canonical (reduced, positive denominator) form.
using Rational = mpq_class;

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(const std::string& text);

Integer factorial(std::int64_t n);

/// Binomial coefficient with binom(a, b) = 0 whenever b < 0 or a < b.
Integer binom(std::int64_t a, std::int64_t b);

/// base^exp with 0^0 = 1.
Integer pow(const Integer& base, unsigned exp);
Rational pow(const Rational& base, unsigned exp);

/// num/den in canonical form. Prefer this to Rational(num, den), which does
/// not reduce.
inline Rational ratio(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer two_pow(unsigned exp) {
    Integer r = 1;
    r <<= exp;
    return r;
}

}  // namespace hookcontent
