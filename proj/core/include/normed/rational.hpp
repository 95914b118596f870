#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace normed {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n", "-n", "p/q" or "-p/q" into a canonical rational.
/// Throws ParseError on anything else (including "inf" and q = 0).
Rational parse_rational(std::string_view text);

/// Canonical text form: "n" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

/// num/den in lowest terms (den != 0).
inline Rational make_rational(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

inline Rational rational_abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

Rational rational_pow(const Rational& base, unsigned exponent);

/// floor(sqrt(n)) for n >= 0.
Integer integer_sqrt(const Integer& n);

bool is_perfect_square(const Integer& n);

/// Exact square root when `value` is the square of a rational.
bool rational_sqrt_exact(const Rational& value, Rational& root);

}  // namespace normed
