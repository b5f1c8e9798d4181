#include "trigineq/real.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace trigineq {

namespace {

mpfr_prec_t checked_bits(long bits) {
  if (bits < MPFR_PREC_MIN || bits > 1L << 20) throw std::invalid_argument("precision out of range");
  return static_cast<mpfr_prec_t>(bits);
}

}  // namespace

Real::Real(long bits) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_zero(value_, 1);
}

Real::Real(double value, long bits) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(long value, long bits) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Rat& value, long bits) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Int& value, long bits) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

void Real::widen(long bits) {
  if (bits <= precision()) return;
  mpfr_prec_round(value_, static_cast<mpfr_prec_t>(bits), MPFR_RNDN);
}

std::string Real::to_string(int digits) const {
  mpfr_exp_t exponent = 0;
  std::unique_ptr<char, decltype(&mpfr_free_str)> raw(
      mpfr_get_str(nullptr, &exponent, 10, static_cast<size_t>(digits), value_, MPFR_RNDN), &mpfr_free_str);
  std::string mantissa(raw.get());
  if (mpfr_zero_p(value_)) return "0";
  if (!mpfr_number_p(value_)) return mantissa;
  bool negative = mantissa.front() == '-';
  if (negative) mantissa.erase(0, 1);
  std::string out = negative ? "-" : "";
  out += mantissa.substr(0, 1);
  out += '.';
  out += mantissa.substr(1);
  out += 'e';
  out += std::to_string(static_cast<long>(exponent) - 1);
  return out;
}

Real& Real::operator+=(const Real& rhs) {
  widen(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real operator-(const Real& x) {
  Real out(x.precision());
  mpfr_neg(out.value_, x.value_, MPFR_RNDN);
  return out;
}

Real operator*(Real lhs, long rhs) {
  mpfr_mul_si(lhs.value_, lhs.value_, rhs, MPFR_RNDN);
  return lhs;
}

Real operator+(Real lhs, long rhs) {
  mpfr_add_si(lhs.value_, lhs.value_, rhs, MPFR_RNDN);
  return lhs;
}

Real operator-(Real lhs, long rhs) {
  mpfr_sub_si(lhs.value_, lhs.value_, rhs, MPFR_RNDN);
  return lhs;
}

Real operator/(Real lhs, long rhs) {
  mpfr_div_si(lhs.value_, lhs.value_, rhs, MPFR_RNDN);
  return lhs;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real sin(const Real& x) {
  Real out(x.precision());
  mpfr_sin(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real cos(const Real& x) {
  Real out(x.precision());
  mpfr_cos(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real acos(const Real& x) {
  Real out(x.precision());
  mpfr_acos(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real sqrt(const Real& x) {
  Real out(x.precision());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real abs(const Real& x) {
  Real out(x.precision());
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real pi(long bits) {
  Real out(bits);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

Real pow(const Real& x, long exponent) {
  Real out(x.precision());
  mpfr_pow_si(out.get(), x.get(), exponent, MPFR_RNDN);
  return out;
}

Real compensated_sum(std::span<const Real> terms, long bits) {
  Real sum(bits);
  Real carry(bits);
  for (const Real& term : terms) {
    Real next = sum + term;
    if (abs(sum) >= abs(term)) {
      carry += (sum - next) + term;
    } else {
      carry += (term - next) + sum;
    }
    sum = std::move(next);
  }
  return sum + carry;
}

}  // namespace trigineq
