#include "trigineq/polynomial.hpp"

#include <sstream>

namespace trigineq {

Rat poly_eval(const Poly& p, const Rat& a) { return eval(p, a); }

Real poly_eval(const Poly& p, const Real& a) {
  Real acc(a.precision());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= a;
    acc += Real(*it, a.precision());
  }
  return acc;
}

DivMod poly_divmod(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.degree() < q.degree()) return {Poly{}, p};
  std::vector<Rat> rem = p.coeffs();
  const std::size_t dq = static_cast<std::size_t>(q.degree());
  std::vector<Rat> quot(rem.size() - dq, Rat(0));
  const Rat& lead = q.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rat factor = rem[k + dq] / lead;
    quot[k] = factor;
    if (factor == 0) continue;
    for (std::size_t i = 0; i <= dq; ++i) rem[k + i] -= factor * q.coeffs()[i];
  }
  rem.resize(dq);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rat lead = a.leading();
  return a * Rat(1 / lead);
}

int sign_at(const Poly& p, const Rat& a) { return sgn(poly_eval(p, a)); }

int sign_at(const IntPoly& p, const Rat& a) {
  // den^d * p(num/den) = sum c_i num^i den^(d-i); den > 0 keeps the sign.
  if (p.is_zero()) return 0;
  const Int& num = a.get_num();
  const Int& den = a.get_den();
  Int acc = 0;
  Int den_power = 1;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= num;
    acc += *it * den_power;
    den_power *= den;
  }
  return sgn(acc);
}

IntPoly primitive_part(const Poly& p) {
  if (p.is_zero()) return {};
  Int lcm_den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Int> ints;
  ints.reserve(p.size());
  for (const auto& c : p.coeffs()) ints.emplace_back(c.get_num() * (lcm_den / c.get_den()));
  return primitive_part(IntPoly(std::move(ints)));
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  Int content = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content == 1) return p;
  }
  std::vector<Int> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    Int q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    out.push_back(std::move(q));
  }
  return IntPoly(std::move(out));
}

Poly to_rational(const IntPoly& p) {
  std::vector<Rat> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return Poly(std::move(out));
}

Poly even_part_in_square(const Poly& p) {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i % 2 == 0) {
      out.push_back(p.coeffs()[i]);
    } else if (p.coeffs()[i] != 0) {
      throw std::domain_error("polynomial is not even");
    }
  }
  return Poly(std::move(out));
}

std::string to_string(const Poly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Rat& c = p.coeffs()[i];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace trigineq
