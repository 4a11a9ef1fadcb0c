#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace mipbs {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "17", "-3", "p/q". Throws Error(kParse) otherwise.
Rational parse_rational(std::string_view text);

// Canonical text form: integers bare, everything else "p/q".
std::string format_rational(const Rational& value);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);
bool is_integer(const Rational& value);

// Nearest integer, halves rounded away from zero.
Integer round_half_away(const Rational& value);

// Throws Error(kNonIntegerWeights) if value is not an integer that fits.
std::int64_t to_int64(const Rational& value);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& value) { return value.get_d(); }

// Exact rational for a finite double.
Rational from_double(double value);

// Sign of (a - sqrt(d2)) for d2 >= 0, computed exactly.
int sign_minus_sqrt(const Rational& a, const Rational& d2);

// sqrt(d2) rounded down to a multiple of 2^-bits (d2 >= 0).
Rational sqrt_floor(const Rational& d2, unsigned bits);

// sign(x + y * sqrt(z)) for z >= 0, exact.
int sign_with_sqrt(const Rational& x, const Rational& y, const Rational& z);

}  // namespace mipbs
