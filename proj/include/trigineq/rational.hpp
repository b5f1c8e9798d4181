// Exact scalar types shared by every module: GMP-backed integers and rationals.
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace trigineq {

using Int = mpz_class;
/// Canonical rational: gcd(|num|, den) = 1 and den >= 1 after every operation.
using Rat = mpq_class;

/// Parses "11/10", "-3", "1.1", "-0.0005" or "29.1" into an exact rational.
/// Decimal literals become k / 10^n. Throws std::invalid_argument on bad input.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& value);
std::string to_string(const Int& value);

inline int sign(const Rat& value) { return sgn(value); }
inline int sign(const Int& value) { return sgn(value); }

/// Returns value with numerator and denominator divided by their gcd.
inline Rat canonical(Rat value) {
  value.canonicalize();
  return value;
}

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace trigineq
