// Chebyshev polynomials and the exact trigonometric-to-algebraic conversion.
//
// With u = x/2 and c = cos(u):
//   cos(j*u) = T_j(c),   sin(j*u) = sin(u) * U_{j-1}(c).
// A TrigSum therefore becomes cos_part(c) + sin(u) * sin_part(c). For sums whose
// harmonics are all integer multiples of x, the same rules in t = cos(x) give
// cos_part(t) + sin(x) * sin_part(t) at half the degree.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trigineq/polynomial.hpp"
#include "trigineq/trig_sum.hpp"

namespace trigineq {

class ChebTable {
 public:
  /// Builds T_0..T_capacity and U_0..U_capacity by the three-term recurrence.
  explicit ChebTable(std::size_t capacity);

  std::size_t capacity() const { return t_.size() - 1; }
  const Poly& T(std::size_t k) const { return t_.at(k); }
  const Poly& U(std::size_t k) const { return u_.at(k); }

 private:
  std::vector<Poly> t_;
  std::vector<Poly> u_;
};

/// Process-wide read-only table, built on first use.
const ChebTable& shared_cheb_table();

/// T_k(cos a) = cos(k a).
Poly cheb_T(std::size_t k);
/// U_k(cos a) sin a = sin((k+1) a).
Poly cheb_U(std::size_t k);

/// value = cos_part(c) + sin(x/2) * sin_part(c) with c = cos(x/2).
struct HalfAngleForm {
  Poly cos_part;
  Poly sin_part;

  friend bool operator==(const HalfAngleForm&, const HalfAngleForm&) = default;
  friend HalfAngleForm operator+(HalfAngleForm a, const HalfAngleForm& b) {
    a.cos_part += b.cos_part;
    a.sin_part += b.sin_part;
    return a;
  }
  friend HalfAngleForm operator*(const Rat& s, HalfAngleForm f) {
    f.cos_part *= s;
    f.sin_part *= s;
    return f;
  }
  /// Product in the ring Q[c] + sin(u) Q[c] using sin(u)^2 = 1 - c^2.
  friend HalfAngleForm operator*(const HalfAngleForm& a, const HalfAngleForm& b);
};

/// value = cos_part(t) + sin(x) * sin_part(t) with t = cos(x).
struct FullAngleForm {
  Poly cos_part;
  Poly sin_part;

  friend bool operator==(const FullAngleForm&, const FullAngleForm&) = default;
};

HalfAngleForm to_algebraic(const TrigSum& s);
/// Throws std::domain_error if the sum has an odd half-angle harmonic.
FullAngleForm to_full_angle(const TrigSum& s);
/// Same result as to_full_angle, derived from the half-angle form through
/// c^2 = (1 + t)/2 and sin(x) = 2 sin(u) c.
FullAngleForm half_to_full(const HalfAngleForm& form);

/// An angle q*pi with q rational.
struct Angle {
  Rat pi_multiple;

  friend bool operator==(const Angle&, const Angle&) = default;
};

/// Parses "0", "pi", "2pi", "pi/2", "2pi/3", "-pi/3", "3pi/4". A bare number other
/// than 0 is rejected. Throws std::invalid_argument.
Angle parse_angle(const std::string& text);
std::string to_string(const Angle& a);

/// cos(a) when it is rational, which for a rational multiple of pi means one of
/// 0, +-1/2, +-1.
std::optional<Rat> rational_cos(const Angle& a);

struct RatInterval {
  Rat lo;
  Rat hi;
};

/// Image of x in (a, b) under c = cos(x/2), increasing order. Requires
/// 0 <= a < b <= 2*pi and rational half-angle cosines at both endpoints,
/// otherwise throws std::domain_error.
RatInterval x_interval_to_c(const Angle& a, const Angle& b);
/// Image under t = cos(x) for 0 <= a < b <= pi (where the map is monotone).
RatInterval x_interval_to_t(const Angle& a, const Angle& b);

}  // namespace trigineq
