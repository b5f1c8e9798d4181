// Sturm sequences over primitive integer polynomials.
#pragma once

#include <cstddef>
#include <vector>

#include "trigineq/polynomial.hpp"

namespace trigineq {

/// Sturm chain of the square-free part of a polynomial. polys[0] is the
/// square-free part, polys[1] its derivative, and every later element is the
/// negated remainder of the two before it. Each element is scaled by a positive
/// constant to a primitive integer polynomial, which leaves all sign variation
/// counts unchanged. The final element is a nonzero constant.
struct SturmChain {
  std::vector<IntPoly> polys;

  const IntPoly& squarefree() const { return polys.front(); }
  std::size_t length() const { return polys.size(); }
};

/// Throws std::domain_error for the zero polynomial.
SturmChain sturm_chain(const Poly& p);

/// Number of sign changes in the chain evaluated at a (zeros skipped).
int sign_variations(const SturmChain& chain, const Rat& a);
/// Sign variations at +infinity (direction > 0) or -infinity (direction < 0).
int sign_variations_at_infinity(const SturmChain& chain, int direction);

/// Distinct real roots of the chain's polynomial between a and b. The flags
/// choose whether the endpoints themselves are counted. Requires a < b.
std::size_t count_roots(const SturmChain& chain, const Rat& a, const Rat& b, bool include_a, bool include_b);

/// Distinct roots of p on (a, +infinity).
std::size_t count_roots_above(const SturmChain& chain, const Rat& a);

}  // namespace trigineq
