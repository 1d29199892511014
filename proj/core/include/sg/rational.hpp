#pragma once

#include <gmpxx.h>

#include <span>
#include <string>

namespace sg {

// Exact rational, always kept in canonical form (gcd 1, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

// "p/q" with the denominator always written, e.g. "3/1", "-1/2".
std::string to_string(const Rational& r);
// Accepts "p/q", "p" and optionally signed forms; result is canonicalised.
Rational parse_rational(const std::string& text);

// Least common multiple of the denominators.
BigInt common_denominator(std::span<const Rational> values);

}  // namespace sg
