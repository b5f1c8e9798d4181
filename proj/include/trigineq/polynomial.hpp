// Dense univariate polynomials templated on the coefficient ring.
//
// Polynomial<Rat> is the working type for every exact conversion; Polynomial<Int>
// holds primitive integer polynomials inside Sturm chains. Coefficients are stored
// in ascending degree and kept canonical: no trailing zero, the zero polynomial
// has no coefficients and degree -1.
#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trigineq/rational.hpp"
#include "trigineq/real.hpp"

namespace trigineq {

template <class Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }
  /// c * t^degree
  static Polynomial monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> coeffs(degree + 1, Scalar(0));
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
  }
  static Polynomial variable() { return monomial(Scalar(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  /// Coefficient of t^i; zero past the degree.
  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  const Scalar& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator-(Polynomial p) {
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }
  friend Polynomial operator*(Polynomial p, const Scalar& s) { return p *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using Poly = Polynomial<Rat>;
using IntPoly = Polynomial<Int>;

/// Horner evaluation at a point of any ring the coefficients embed into.
template <class Scalar>
Scalar eval(const Polynomial<Scalar>& p, const Scalar& a) {
  Scalar acc(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= a;
    acc += *it;
  }
  return acc;
}

Rat poly_eval(const Poly& p, const Rat& a);
Real poly_eval(const Poly& p, const Real& a);

template <class Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
  if (p.degree() < 1) return {};
  std::vector<Scalar> out(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) out[i - 1] = p.coeffs()[i] * Scalar(static_cast<long>(i));
  return Polynomial<Scalar>(std::move(out));
}

/// p(q(t)) by Horner in the polynomial ring.
template <class Scalar>
Polynomial<Scalar> compose(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  Polynomial<Scalar> acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * q;
    acc += Polynomial<Scalar>::constant(*it);
  }
  return acc;
}

template <class Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& p, unsigned exponent) {
  Polynomial<Scalar> out = Polynomial<Scalar>::constant(Scalar(1));
  for (unsigned i = 0; i < exponent; ++i) out = out * p;
  return out;
}

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division over Q: p = q * quotient + remainder, deg remainder < deg q.
/// Throws std::domain_error when q is the zero polynomial.
DivMod poly_divmod(const Poly& p, const Poly& q);

/// Monic gcd over Q (zero when both inputs are zero).
Poly poly_gcd(Poly a, Poly b);

/// Exact sign of p(a).
int sign_at(const Poly& p, const Rat& a);
int sign_at(const IntPoly& p, const Rat& a);

/// Scales p by a positive rational so the result has coprime integer
/// coefficients. The sign of p at every point is preserved.
IntPoly primitive_part(const Poly& p);
IntPoly primitive_part(const IntPoly& p);
Poly to_rational(const IntPoly& p);

/// Keeps only even (or odd) powers: returns r with p(t) = r(t^2) for an even p.
/// Throws std::domain_error if p has a nonzero odd coefficient.
Poly even_part_in_square(const Poly& p);

std::string to_string(const Poly& p, char var = 't');

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace trigineq
