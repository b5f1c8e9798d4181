#include "trigineq/sturm.hpp"

#include <stdexcept>

namespace trigineq {

namespace {

// Remainder of a by b scaled by a positive constant: the result has the sign
// pattern of the rational remainder.
IntPoly signed_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Int& lb = bc.back();
  std::size_t multiplications = 0;
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t shift = r.size() - 1 - db;
    Int lr = r.back();
    for (auto& c : r) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= lr * bc[i];
    ++multiplications;
    while (!r.empty() && r.back() == 0) r.pop_back();
    // Keep the working coefficients small; dividing by a positive content is harmless.
    if (multiplications % 4 == 0) r = primitive_part(IntPoly(std::move(r))).coeffs();
  }
  IntPoly rem(std::move(r));
  if (lb < 0 && multiplications % 2 == 1) rem = -rem;
  return primitive_part(rem);
}

std::vector<IntPoly> remainder_sequence(const IntPoly& p0) {
  std::vector<IntPoly> seq{p0};
  if (p0.degree() < 1) return seq;
  seq.push_back(primitive_part(derivative(p0)));
  while (seq.back().degree() > 0) {
    IntPoly rem = signed_pseudo_remainder(seq[seq.size() - 2], seq.back());
    if (rem.is_zero()) break;
    seq.push_back(-rem);
  }
  return seq;
}

int sign_of_leading(const IntPoly& p, int direction) {
  int s = sgn(p.leading());
  if (direction < 0 && p.degree() % 2 == 1) s = -s;
  return s;
}

template <class SignFn>
int variations(const SturmChain& chain, SignFn sign_of) {
  int count = 0;
  int last = 0;
  for (const auto& p : chain.polys) {
    int s = sign_of(p);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

SturmChain sturm_chain(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  IntPoly base = primitive_part(p);
  std::vector<IntPoly> seq = remainder_sequence(base);
  if (seq.back().degree() > 0) {
    // Last nonzero remainder is gcd(p, p'); rebuild on p / gcd.
    Poly squarefree = poly_divmod(to_rational(base), to_rational(seq.back())).quotient;
    seq = remainder_sequence(primitive_part(squarefree));
  }
  return SturmChain{std::move(seq)};
}

int sign_variations(const SturmChain& chain, const Rat& a) {
  return variations(chain, [&](const IntPoly& p) { return sign_at(p, a); });
}

int sign_variations_at_infinity(const SturmChain& chain, int direction) {
  return variations(chain, [&](const IntPoly& p) { return sign_of_leading(p, direction); });
}

std::size_t count_roots(const SturmChain& chain, const Rat& a, const Rat& b, bool include_a, bool include_b) {
  if (!(a < b)) throw std::invalid_argument("count_roots requires a < b");
  // Sturm: V(a) - V(b) counts the roots in (a, b].
  long count = sign_variations(chain, a) - sign_variations(chain, b);
  if (include_a && sign_at(chain.squarefree(), a) == 0) ++count;
  if (!include_b && sign_at(chain.squarefree(), b) == 0) --count;
  return static_cast<std::size_t>(count);
}

std::size_t count_roots_above(const SturmChain& chain, const Rat& a) {
  return static_cast<std::size_t>(sign_variations(chain, a) - sign_variations_at_infinity(chain, +1));
}

}  // namespace trigineq
