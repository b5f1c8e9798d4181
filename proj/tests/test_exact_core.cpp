#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "trigineq/polynomial.hpp"
#include "trigineq/rational.hpp"
#include "trigineq/sturm.hpp"

using namespace trigineq;

namespace {

Poly lemma3_kernel() {
  // -16t^4 + 16t^3 + 12t^2 - 8t + 1.1
  return Poly{parse_rat("1.1"), Rat(-8), Rat(12), Rat(16), Rat(-16)};
}

Poly random_poly(std::mt19937_64& rng, int max_degree, int bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = coeff(rng);
  return Poly(std::move(c));
}

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 17);
  return make_rat(num(rng), den(rng));
}

// Float oracle: sign changes of a polynomial on a uniform scan, each refined by
// bisection. Returns the approximate root locations.
std::vector<double> scan_roots(const Poly& p, double lo, double hi, int points) {
  std::vector<double> c;
  for (const auto& v : p.coeffs()) c.push_back(v.get_d());
  auto f = [&](double x) {
    long double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return static_cast<double>(acc);
  };
  std::vector<double> roots;
  double prev_x = lo;
  double prev = f(lo);
  for (int i = 1; i <= points; ++i) {
    const double xi = lo + (hi - lo) * i / points;
    const double fi = f(xi);
    if (fi == 0) {
      roots.push_back(xi);
      prev_x = xi;
      prev = fi;
      continue;
    }
    if (prev != 0 && (prev < 0) != (fi < 0)) {
      double a = prev_x, b = xi, fa = prev;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if ((fm < 0) == (fa < 0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_x = xi;
    prev = fi;
  }
  return roots;
}

}  // namespace

TEST_CASE("parse_rat reads decimal literals as exact rationals") {
  CHECK(parse_rat("1.1") == make_rat(11, 10));
  CHECK(parse_rat("29.1") == make_rat(291, 10));
  CHECK(parse_rat("-0.0005") == make_rat(-1, 2000));
  CHECK(parse_rat("2/9") == make_rat(2, 9));
  CHECK(parse_rat("-6/4") == make_rat(-3, 2));
  CHECK(parse_rat("7") == Rat(7));
  // Leading zeros are decimal, never octal.
  CHECK(parse_rat("0.865") == make_rat(173, 200));
  CHECK(parse_rat("0.09") == make_rat(9, 100));
  CHECK(parse_rat("010/08") == make_rat(5, 4));
  CHECK_THROWS_AS(parse_rat("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("rationals stay canonical and arithmetic is exact") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rat a = random_rat(rng);
    const Rat b = random_rat(rng);
    const Rat sum = a + b;
    CHECK(canonical(sum) == sum);
    CHECK(sum.get_den() >= 1);
    Int g;
    mpz_gcd(g.get_mpz_t(), sum.get_num_mpz_t(), sum.get_den_mpz_t());
    CHECK((sum == 0 || g == 1));
    CHECK(Rat(sum - b) == a);
  }
}

TEST_CASE("poly_eval") {
  CHECK(poly_eval(lemma3_kernel(), Rat(1)) == make_rat(51, 10));
  CHECK(poly_eval(Poly{}, make_rat(3, 7)) == 0);
  CHECK(poly_eval(Poly{Rat(-1), Rat(0), Rat(1)}, make_rat(1, 2)) == make_rat(-3, 4));
  CHECK(Poly{Rat(0), Rat(0)}.is_zero());
  CHECK(Poly{Rat(1), Rat(2), Rat(0)}.degree() == 1);
}

TEST_CASE("poly_divmod") {
  const Poly t2m1{Rat(-1), Rat(0), Rat(1)};
  auto [q, r] = poly_divmod(t2m1, Poly{Rat(-1), Rat(1)});
  CHECK(q == Poly{Rat(1), Rat(1)});
  CHECK(r.is_zero());

  auto self = poly_divmod(t2m1, t2m1);
  CHECK(self.quotient == Poly{Rat(1)});
  CHECK(self.remainder.is_zero());

  auto cubic = poly_divmod(Poly::monomial(Rat(1), 3), Poly{Rat(1), Rat(0), Rat(1)});
  CHECK(cubic.quotient == Poly{Rat(0), Rat(1)});
  CHECK(cubic.remainder == Poly{Rat(0), Rat(-1)});

  CHECK_THROWS_AS(poly_divmod(t2m1, Poly{}), std::domain_error);
}

TEST_CASE("divmod reconstruction and evaluation homomorphism on random inputs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Poly p = random_poly(rng, 9, 20);
    Poly q = random_poly(rng, 5, 20);
    if (q.is_zero()) q = Poly{Rat(3)};
    auto [quot, rem] = poly_divmod(p, q);
    CHECK(q * quot + rem == p);
    CHECK(rem.degree() < q.degree());
    const Rat a = random_rat(rng);
    CHECK(poly_eval(p * q, a) == poly_eval(p, a) * poly_eval(q, a));
    CHECK(poly_eval(p + q, a) == poly_eval(p, a) + poly_eval(q, a));
  }
}

TEST_CASE("sign_at") {
  CHECK(sign_at(lemma3_kernel(), Rat(1)) == 1);
  const Poly p = Poly{Rat(-1), Rat(2)} * Poly{Rat(3), Rat(1)};  // roots 1/2, -3
  CHECK(sign_at(p, make_rat(1, 2)) == 0);
  CHECK(sign_at(p, Rat(-3)) == 0);
  CHECK(sign_at(p, Rat(0)) == -1);
  CHECK(sign_at(primitive_part(p * make_rat(5, 7)), Rat(0)) == -1);
  // R_4 from the n = 4 Szego difference: (8/9)(72t^3 + 80t^2 + 17t + 2), frozen from a
  // symbolic trig expansion.
  const Poly r4 = make_rat(8, 9) * Poly{Rat(2), Rat(17), Rat(80), Rat(72)};
  CHECK(sign_at(r4, Rat(0)) == 1);
}

TEST_CASE("primitive_part preserves signs") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Poly p = random_poly(rng, 6, 9) * make_rat(-3, 14);
    if (p.is_zero()) continue;
    const IntPoly prim = primitive_part(p);
    const Rat a = random_rat(rng);
    CHECK(sign_at(prim, a) == sign_at(p, a));
  }
}

TEST_CASE("sturm_chain structure") {
  const Poly t2m1{Rat(-1), Rat(0), Rat(1)};
  const SturmChain chain = sturm_chain(t2m1);
  REQUIRE(chain.length() == 3);
  CHECK(chain.polys[1] == IntPoly{Int(0), Int(1)});
  CHECK(chain.polys[2].degree() == 0);
  CHECK(chain.polys[2].leading() > 0);
  CHECK(sign_variations(chain, Rat(-2)) - sign_variations(chain, Rat(2)) == 2);

  const Poly square = Poly{Rat(-1), Rat(1)} * Poly{Rat(-1), Rat(1)};
  const SturmChain collapsed = sturm_chain(square);
  CHECK(collapsed.length() == 2);
  CHECK(collapsed.squarefree() == IntPoly{Int(-1), Int(1)});

  CHECK_THROWS_AS(sturm_chain(Poly{}), std::domain_error);
  const SturmChain constant = sturm_chain(Poly{Rat(4)});
  CHECK(count_roots(constant, Rat(-1), Rat(1), true, true) == 0);
}

TEST_CASE("count_roots endpoint semantics") {
  const SturmChain chain = sturm_chain(Poly{Rat(-1), Rat(0), Rat(1)});
  CHECK(count_roots(chain, Rat(-1), Rat(1), false, false) == 0);
  CHECK(count_roots(chain, Rat(-1), Rat(1), true, true) == 2);
  CHECK(count_roots(chain, Rat(-1), Rat(1), true, false) == 1);
  CHECK(count_roots(chain, Rat(-1), Rat(1), false, true) == 1);
  CHECK_THROWS_AS(count_roots(chain, Rat(1), Rat(1), true, true), std::invalid_argument);
  CHECK(count_roots_above(chain, Rat(-5)) == 2);
}

TEST_CASE("quartic kernel v has no zero on [-1/2, 1]") {
  const SturmChain chain = sturm_chain(lemma3_kernel());
  CHECK(count_roots(chain, make_rat(-1, 2), Rat(1), true, true) == 0);
  CHECK(sign_at(lemma3_kernel(), Rat(1)) == 1);
}

TEST_CASE("R_6 has exactly the root t = -1/2 on [-1/2, 1]") {
  // (2/9)(2t+1)^2 (432t^3 + 108t^2 - 216t + 53), frozen from the symbolic oracle.
  const Poly lin{Rat(1), Rat(2)};
  const Poly r6 = make_rat(2, 9) * lin * lin * Poly{Rat(53), Rat(-216), Rat(108), Rat(432)};
  const SturmChain chain = sturm_chain(r6);
  CHECK(count_roots(chain, make_rat(-1, 2), Rat(1), true, true) == 1);
  CHECK(count_roots(chain, make_rat(-1, 2), Rat(1), false, false) == 0);
  CHECK(sign_at(r6, make_rat(-1, 2)) == 0);
}

TEST_CASE("Sturm counts agree with a float scan on random polynomials") {
  std::mt19937_64 rng(2024);
  int compared = 0;
  for (int i = 0; i < 200; ++i) {
    Poly p = random_poly(rng, 8, 9);
    if (p.is_zero()) continue;
    const SturmChain chain = sturm_chain(p);
    CHECK(chain.polys.back().degree() == 0);
    CHECK(chain.polys.back().leading() != 0);

    // Square-free part by Euclid over Q, independent of the chain's integer PRS.
    Poly squarefree = p.degree() > 0 ? poly_divmod(p, poly_gcd(p, derivative(p))).quotient : p;
    std::vector<double> roots = scan_roots(squarefree, -10.0, 10.0, 100000);
    bool separated = true;
    for (std::size_t k = 1; k < roots.size(); ++k) separated = separated && roots[k] - roots[k - 1] > 1e-3;
    if (!separated) continue;
    ++compared;
    CHECK(count_roots(chain, Rat(-10), Rat(10), true, true) == roots.size());

    // Sign variation count is nonincreasing along the line.
    int prev = sign_variations(chain, Rat(-10));
    for (int k = -19; k <= 20; ++k) {
      int v = sign_variations(chain, make_rat(k, 2));
      CHECK(v <= prev);
      prev = v;
    }
  }
  CHECK(compared > 150);
}
