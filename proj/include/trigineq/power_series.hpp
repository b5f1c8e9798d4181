// Truncated power series over Q and the absolutely monotonic family W_{m,omega}.
//
// W_{m,omega}(x) = m - 1 - m/(1-x) + (1 - omega x)/((1-x)^{m+1} (1 - 2 omega x + x^2)).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trigineq/polynomial.hpp"
#include "trigineq/rational.hpp"
#include "trigineq/real.hpp"

namespace trigineq {

struct PowerSeries {
  std::vector<Rat> coeffs;  // orders 0..N

  long order() const { return static_cast<long>(coeffs.size()) - 1; }
  const Rat& operator[](std::size_t k) const { return coeffs[k]; }
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;
};

/// Coefficients C(n+m, m): the series of (1-x)^{-(m+1)}.
PowerSeries series_lambda(long m, long N);
/// Coefficients T_n(omega) = cos(n theta), omega = cos theta. Throws for |omega| > 1.
PowerSeries series_phi(const Rat& omega, long N);
/// Truncated product; throws std::invalid_argument when the orders differ.
PowerSeries cauchy_product(const PowerSeries& a, const PowerSeries& b);
/// A polynomial as a series truncated at order N.
PowerSeries to_series(const Poly& p, long N);

struct WParams {
  long m = 1;
  Rat omega;
};

/// Throws std::invalid_argument unless m >= 1 and |omega| <= 1.
void validate(const WParams& p);

/// Taylor coefficients of W: 0 at order 0, sum_k C(n-k+m,m) T_k(omega) - m at order n.
PowerSeries w_coefficients(const WParams& p, long N);

/// (W + m/(1-x) - (m-1)) (1-x)^{m+1} (1 - 2 omega x + x^2), truncated at N;
/// equals 1 - omega x.
PowerSeries w_numerator(const WParams& p, long N);

struct MonotonicityResult {
  bool pass = false;
  std::optional<long> first_negative;
  long order = 0;
  bool strictly_positive = false;  // orders 1..N
  std::string scope;
};

/// Nonnegativity of every coefficient of s.
MonotonicityResult check_nonnegative(const PowerSeries& s);
/// Coefficient-level absolute monotonicity of W up to order N (N >= 8).
MonotonicityResult check_absolute_monotonicity(const WParams& p, long N);

/// W at a real point x < 1.
Real w_value(const WParams& p, const Real& x);

struct SuperadditiveResult {
  bool pass = false;
  long samples = 0;
  Real worst_margin;  // min of W(x+y) - W(x) - W(y) relative to 1 + |W(x+y)|
  double worst_x = 0;
  double worst_y = 0;
};

/// Samples W(x) + W(y) <= W(x+y) on x, y >= 0, x + y < 1 - 1e-6, with extra
/// density near x + y = 1 (samples >= 100).
SuperadditiveResult check_superadditive(const WParams& p, long samples, std::uint64_t seed = 1,
                                        long precision_bits = 192);

/// Empirical d with c_n ~ n^d from the last coefficient and the one at half the order.
double growth_exponent(const PowerSeries& s);

/// "order,numerator,denominator" rows.
std::string to_csv(const PowerSeries& s);

}  // namespace trigineq
