// Multiple-precision binary float over MPFR with the precision carried by each
// value, so concurrent evaluations at different precisions never share state.
#pragma once

#include <mpfr.h>

#include <compare>
#include <span>
#include <string>

#include "trigineq/rational.hpp"

namespace trigineq {

inline constexpr long kDefaultPrecisionBits = 128;

class Real {
 public:
  explicit Real(long bits = kDefaultPrecisionBits);
  Real(double value, long bits);
  Real(long value, long bits);
  Real(int value, long bits) : Real(static_cast<long>(value), bits) {}
  Real(const Rat& value, long bits);
  Real(const Int& value, long bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits = 30) const;
  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator-(const Real& x);
  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator*(Real lhs, long rhs);
  friend Real operator*(long lhs, Real rhs) { return std::move(rhs) * lhs; }
  friend Real operator+(Real lhs, long rhs);
  friend Real operator-(Real lhs, long rhs);
  friend Real operator/(Real lhs, long rhs);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  // Grows this value's precision to at least `bits` (value preserved).
  void widen(long bits);

  mpfr_t value_;
};

Real sin(const Real& x);
Real cos(const Real& x);
Real acos(const Real& x);
Real sqrt(const Real& x);
Real abs(const Real& x);
Real pi(long bits);
Real pow(const Real& x, long exponent);

/// Neumaier-compensated sum of the inputs at the given precision.
Real compensated_sum(std::span<const Real> terms, long bits);

}  // namespace trigineq
