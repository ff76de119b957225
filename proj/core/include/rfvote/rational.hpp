#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rfvote {

/// Arbitrary-precision rational. The library keeps values canonical.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p", or a decimal string such as "-0.125" or "2.5e-3".
/// Decimals are converted exactly: "0.3" is 3/10, never the nearest double.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_exact_string(const Rational& value);

/// Decimal rendering with `significant` significant digits ("%.*g" style).
std::string to_decimal_string(const Rational& value, int significant = 12);
std::string to_decimal_string(double value, int significant = 12);

/// GMP does not reduce p/q built from two integers; every public entry point
/// passes its rational inputs through this before doing arithmetic.
inline Rational canonical(Rational value) {
  value.canonicalize();
  return value;
}

Integer binomial(unsigned n, unsigned k);

Rational power(const Rational& base, unsigned exponent);

/// Smallest integer >= value.
Integer ceil(const Rational& value);

}  // namespace rfvote
