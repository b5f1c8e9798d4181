// Finite trigonometric sums in half-angle harmonics.
//
// A TrigSum is constant + sum of coeff * cos(j*x/2) and coeff * sin(j*x/2).
// Every sum in the catalog (integer harmonics k*x and half-integer harmonics
// (k+1/2)*x alike) lives in this one representation: cos(kx) is harmonic 2k,
// cos((k+1/2)x) is harmonic 2k+1.
#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "trigineq/rational.hpp"
#include "trigineq/real.hpp"

namespace trigineq {

enum class Wave { cos, sin };

struct Term {
  Rat coeff;
  unsigned harmonic;  // multiple of x/2
  Wave kind;
};

class TrigSum {
 public:
  TrigSum() = default;

  static TrigSum constant(const Rat& c);
  /// coeff * cos(j*x/2)
  static TrigSum cos_half(unsigned j, const Rat& coeff = Rat(1));
  /// coeff * sin(j*x/2)
  static TrigSum sin_half(unsigned j, const Rat& coeff = Rat(1));
  /// coeff * cos(k*x)
  static TrigSum cos_full(unsigned k, const Rat& coeff = Rat(1)) { return cos_half(2 * k, coeff); }
  /// coeff * sin(k*x)
  static TrigSum sin_full(unsigned k, const Rat& coeff = Rat(1)) { return sin_half(2 * k, coeff); }

  /// Adds coeff * wave(harmonic*x/2); cos of harmonic 0 folds into the constant
  /// and sin of harmonic 0 is dropped (it is identically zero).
  void add(Wave kind, unsigned harmonic, const Rat& coeff);
  void add_constant(const Rat& c) { constant_ += c; }

  const Rat& constant_term() const { return constant_; }
  Rat coeff(Wave kind, unsigned harmonic) const;
  /// Terms ordered by (kind, harmonic), cos before sin.
  std::vector<Term> terms() const;
  std::size_t term_count() const { return terms_.size(); }
  unsigned max_harmonic() const;
  bool is_zero() const { return terms_.empty() && constant_ == 0; }
  /// True when every harmonic is even, i.e. the sum is a polynomial in cos x, sin x.
  bool integer_harmonics() const;
  bool has_cos_terms() const;
  bool has_sin_terms() const;

  TrigSum& operator+=(const TrigSum& rhs);
  TrigSum& operator-=(const TrigSum& rhs);
  TrigSum& operator*=(const Rat& s);

  friend TrigSum operator+(TrigSum a, const TrigSum& b) { return a += b; }
  friend TrigSum operator-(TrigSum a, const TrigSum& b) { return a -= b; }
  friend TrigSum operator-(TrigSum a) { return a *= Rat(-1); }
  friend TrigSum operator*(TrigSum a, const Rat& s) { return a *= s; }
  friend TrigSum operator*(const Rat& s, TrigSum a) { return a *= s; }
  /// Product via the product-to-sum formulas.
  friend TrigSum operator*(const TrigSum& a, const TrigSum& b);
  friend bool operator==(const TrigSum& a, const TrigSum& b) {
    return a.constant_ == b.constant_ && a.terms_ == b.terms_;
  }

 private:
  using Key = std::pair<Wave, unsigned>;
  std::map<Key, Rat> terms_;
  Rat constant_{0};
};

/// d/dx, exact.
TrigSum derivative(const TrigSum& s);
/// The sum of x -> s(factor * x): harmonics are multiplied by factor.
TrigSum dilate(const TrigSum& s, unsigned factor);
/// The sum of x -> s(turns * pi + direction * x), direction in {+1, -1}.
TrigSum substitute_affine(const TrigSum& s, long turns, int direction);

/// Value at x, accumulated with compensated summation at precision_bits.
Real eval_float(const TrigSum& s, const Real& x, long precision_bits = kDefaultPrecisionBits);
double eval_double(const TrigSum& s, double x);

struct ExactValue {
  Rat cos_value;    // value of the cosine part at c
  Rat sin_u_coeff;  // full value = cos_value + sin(x/2) * sin_u_coeff
};

/// Evaluates the half-angle form at c = cos(x/2).
ExactValue eval_exact(const TrigSum& s, const Rat& c);

struct ExactFullValue {
  Rat cos_value;    // value of the cosine part at t
  Rat sin_x_coeff;  // full value = cos_value + sin(x) * sin_x_coeff
};

/// Evaluates the full-angle form at t = cos(x); integer harmonics only.
ExactFullValue eval_exact_full(const TrigSum& s, const Rat& t);

}  // namespace trigineq
