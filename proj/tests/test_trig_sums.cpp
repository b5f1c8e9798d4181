#include <random>

#include "doctest.h"
#include "trigineq/catalog.hpp"
#include "trigineq/chebyshev.hpp"

using namespace trigineq;

namespace {

constexpr long kBits = 200;

Real tolerance(long exponent) { return pow(Real(10L, kBits), exponent); }

Real random_x(std::mt19937_64& rng, const Real& upper) {
  std::uniform_int_distribution<int> num(1, 99999);
  return Real(make_rat(num(rng), 100000), kBits) * upper;
}

Rat coefficient_magnitude(const TrigSum& s) {
  Rat total = abs(s.constant_term());
  for (const Term& t : s.terms()) total += abs(t.coeff);
  return total;
}

TrigSum fam(FamilyTag tag, long m, long n) { return build({tag, m, n}); }

}  // namespace

TEST_CASE("binom") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(9, 0) == 1);
  CHECK(binom(7, 3) == binom(6, 3) + binom(6, 2));
  CHECK(binom(7, 3) == 35);
  CHECK(binom(3, 5) == 0);
}

TEST_CASE("TrigSum canonical storage") {
  TrigSum s = TrigSum::sin_full(2, Rat(3)) + TrigSum::sin_full(2, Rat(-3));
  CHECK(s.is_zero());
  s.add(Wave::sin, 0, Rat(5));
  CHECK(s.is_zero());
  s.add(Wave::cos, 0, Rat(5));
  CHECK(s.constant_term() == 5);
  CHECK(s.term_count() == 0);

  // Value at x = 0 is the constant plus the cosine coefficients.
  for (FamilyTag tag : all_family_tags()) {
    const TrigSum f = build({tag, 2, 5});
    Rat expected = f.constant_term();
    for (const Term& t : f.terms()) {
      CHECK(t.coeff != 0);
      CHECK(t.harmonic > 0);
      if (t.kind == Wave::cos) expected += t.coeff;
    }
    CHECK(eval_exact(f, Rat(1)).cos_value == expected);
  }
}

TEST_CASE("build examples") {
  for (long m = 1; m <= 6; ++m) {
    const TrigSum b1 = fam(FamilyTag::B12, m, 1) - TrigSum::constant(Rat(m));
    CHECK(b1 == TrigSum::constant(Rat(1)) + TrigSum::cos_full(1));
  }
  CHECK(fam(FamilyTag::P10, 1, 1) == TrigSum::sin_full(1, Rat(2)));

  for (long n = 1; n <= 12; ++n) {
    const TrigSum d = fam(FamilyTag::P_DIFF, 1, n);
    CHECK(d.coeff(Wave::sin, 2) == Rat(n * (n + 1)) - make_rat(4, 9));
    if (n >= 2) CHECK(d.coeff(Wave::sin, 4) == Rat(2 * (n - 1) * n) - make_rat(4, 9));
    if (n >= 3) CHECK(d.coeff(Wave::sin, 6) == Rat(3 * (n - 2) * (n - 1)) - make_rat(2, 9));
    for (long k = 1; k <= n; ++k) CHECK(d.coeff(Wave::sin, static_cast<unsigned>(2 * k)) == p_diff_coefficient(k, n));
  }
  const TrigSum rhs = make_rat(2, 9) * sin_times_one_plus_two_cos_squared();
  CHECK(rhs == TrigSum::sin_full(1, make_rat(4, 9)) + TrigSum::sin_full(2, make_rat(4, 9)) +
                   TrigSum::sin_full(3, make_rat(2, 9)));

  CHECK_THROWS_WITH_AS(build({FamilyTag::A11, 0, 3}), "m must be ≥ 1", std::invalid_argument);
  CHECK_THROWS_AS(build({FamilyTag::P10, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build({FamilyTag::TAU_SIGNED, 1, 3, 3}), std::invalid_argument);
  CHECK(parse_family_tag("THETA_DIFF") == FamilyTag::THETA_DIFF);
  CHECK_FALSE(parse_family_tag("Z99").has_value());
}

TEST_CASE("eval_float examples") {
  const Real half_pi = pi(kBits) / 2;
  CHECK(abs(eval_float(fam(FamilyTag::S22, 1, 2), half_pi, kBits) - Real(104L, kBits)) < tolerance(-30));
  CHECK(eval_float(fam(FamilyTag::A11, 3, 7), Real(0L, kBits), kBits).is_zero());
  CHECK(abs(eval_float(fam(FamilyTag::V15, 1, 0), pi(kBits), kBits) - Real(1L, kBits)) < tolerance(-30));
  // Same precision, same answer.
  const TrigSum s = fam(FamilyTag::THETA, 1, 20);
  CHECK(eval_float(s, Real(1.25, kBits), kBits) == eval_float(s, Real(1.25, kBits), kBits));
}

TEST_CASE("eval_exact examples") {
  auto b = eval_exact_full(fam(FamilyTag::B12, 3, 1), make_rat(1, 2));
  CHECK(b.cos_value == make_rat(9, 2));
  CHECK(b.sin_x_coeff == 0);

  // t = -1/2 corresponds to c = 1/2.
  auto p = eval_exact(fam(FamilyTag::P_DIFF, 1, 3), make_rat(1, 2));
  CHECK(p.cos_value == 0);
  CHECK(p.sin_u_coeff == 0);
  CHECK(eval_exact_full(fam(FamilyTag::P_DIFF, 1, 3), make_rat(-1, 2)).sin_x_coeff == 0);

  auto z = eval_exact(TrigSum{}, make_rat(2, 7));
  CHECK(z.cos_value == 0);
  CHECK(z.sin_u_coeff == 0);
}

TEST_CASE("recurrence U_{n+1}(m+1) = U_{n+1}(m) + U_n(m+1)") {
  for (long m = 1; m <= 20; ++m) {
    for (long n = 1; n <= 20; ++n) {
      CHECK(fam(FamilyTag::U14, m + 1, n + 1) == fam(FamilyTag::U14, m, n + 1) + fam(FamilyTag::U14, m + 1, n));
    }
  }
}

TEST_CASE("averaging identity D_2n(1) = (D_{2n-1}(1) + D_{2n+1}(1))/2") {
  for (long n = 1; n <= 30; ++n) {
    const TrigSum avg = make_rat(1, 2) * (fam(FamilyTag::D17, 1, 2 * n - 1) + fam(FamilyTag::D17, 1, 2 * n + 1));
    CHECK(fam(FamilyTag::D17, 1, 2 * n) == avg);
  }
}

TEST_CASE("constant gap between B_n and T_n") {
  for (long m = 1; m <= 12; ++m) {
    for (long n = 1; n <= 12; ++n) {
      const TrigSum gap = fam(FamilyTag::B12, m, n) - fam(FamilyTag::T31, m, n);
      CHECK(gap == TrigSum::constant(Rat(binom(static_cast<unsigned long>(n + m), static_cast<unsigned long>(m))) / 2));
      if (n >= 2) CHECK(gap.constant_term() - m >= make_rat((m - 1) * m + 2, 4));
    }
  }
}

TEST_CASE("V = cos(x/2) A + sin(x/2) B in half-angle form") {
  const HalfAngleForm cos_u = to_algebraic(TrigSum::cos_half(1));
  const HalfAngleForm sin_u = to_algebraic(TrigSum::sin_half(1));
  for (long m = 1; m <= 8; ++m) {
    for (long n = 1; n <= 12; ++n) {
      const HalfAngleForm lhs = to_algebraic(fam(FamilyTag::V15, m, n));
      const HalfAngleForm rhs =
          cos_u * to_algebraic(fam(FamilyTag::A11, m, n)) + sin_u * to_algebraic(fam(FamilyTag::B12, m, n));
      CHECK(lhs == rhs);
      // Same identity on the trigonometric side.
      CHECK(fam(FamilyTag::V15, m, n) == TrigSum::cos_half(1) * fam(FamilyTag::A11, m, n) +
                                             TrigSum::sin_half(1) * fam(FamilyTag::B12, m, n));
    }
  }
}

TEST_CASE("72 sin^4(x/2) times P_DIFF is S_n") {
  const TrigSum sin_half = TrigSum::sin_half(1);
  const TrigSum sin4 = (sin_half * sin_half) * (sin_half * sin_half);
  const Poly one_minus_t{Rat(1), Rat(-1)};
  for (long n = 1; n <= 40; ++n) {
    const FullAngleForm r = to_full_angle(fam(FamilyTag::P_DIFF, 1, n));
    const FullAngleForm s = to_full_angle(fam(FamilyTag::S22, 1, n));
    CHECK(s.cos_part.is_zero());
    CHECK(Rat(18) * one_minus_t * one_minus_t * r.sin_part == s.sin_part);
    CHECK(Rat(72) * sin4 * fam(FamilyTag::P_DIFF, 1, n) == fam(FamilyTag::S22, 1, n));
  }
}

TEST_CASE("S_n(t/(n+2)) = f_n(t) + g_n(t) + h_n(t)") {
  for (long n = 1; n <= 40; ++n) {
    CHECK(fam(FamilyTag::S22, 1, n) ==
          fam(FamilyTag::F24, 1, n) + fam(FamilyTag::G25, 1, n) + fam(FamilyTag::H26, 1, n));
  }
}

TEST_CASE("E_n identity") {
  const TrigSum sin_half = TrigSum::sin_half(1);
  const TrigSum cos_half = TrigSum::cos_half(1);
  const TrigSum weight = Rat(32) * sin_half * sin_half * sin_half * cos_half * cos_half;
  std::mt19937_64 rng(17);
  const Real tol = tolerance(-20);
  for (long n = 0; n <= 20; ++n) {
    const TrigSum half_d = make_rat(1, 2) * fam(FamilyTag::D17, 1, 2 * n + 1);
    const TrigSum e = fam(FamilyTag::E5, 1, n);
    CHECK(half_d * weight == e);
    for (int i = 0; i < 64; ++i) {
      const Real x = random_x(rng, pi(kBits));
      const Real su = sin(x / 2);
      const Real cu = cos(x / 2);
      const Real lhs = eval_float(half_d, x, kBits) * 32 * su * su * su * cu * cu;
      CHECK(abs(lhs - eval_float(e, x, kBits)) < tol);
    }
  }
}

TEST_CASE("antiderivative of (2/9) sin x (1 + 2cos x)^2") {
  const TrigSum primitive = make_rat(2, 27) * one_minus_cos_times_quadratic();
  const TrigSum integrand = make_rat(2, 9) * sin_times_one_plus_two_cos_squared();
  CHECK(derivative(primitive) == integrand);
  // (1 - t)(13 + 10t + 4t^2) as a polynomial in t.
  CHECK(to_full_angle(one_minus_cos_times_quadratic()).cos_part == Poly{Rat(13), Rat(-3), Rat(-6), Rat(-4)});
  // THETA vanishes at 0 and differentiates to P10.
  for (long n = 1; n <= 15; ++n) {
    CHECK(derivative(fam(FamilyTag::THETA, 1, n)) == fam(FamilyTag::P10, 1, n));
    CHECK(eval_exact_full(fam(FamilyTag::THETA_DIFF, 1, n), Rat(1)).cos_value == 0);
  }
}

TEST_CASE("C_n(m, pi - x) = D_n(m, x)") {
  for (long m = 1; m <= 10; ++m) {
    for (long n = 0; n <= 25; ++n) {
      CHECK(substitute_affine(fam(FamilyTag::C16, m, n), 1, -1) == fam(FamilyTag::D17, m, n));
    }
  }
}

TEST_CASE("REMARK2 sums are the m = 1 members") {
  for (long n = 0; n <= 10; ++n) {
    CHECK(fam(FamilyTag::REMARK2_1, 7, n) == fam(FamilyTag::U14, 1, n));
    CHECK(fam(FamilyTag::REMARK2_2, 7, n) == fam(FamilyTag::V15, 1, n));
    CHECK(fam(FamilyTag::REMARK2_3, 7, n) == fam(FamilyTag::C16, 1, n));
    CHECK(fam(FamilyTag::REMARK2_4, 7, n) == fam(FamilyTag::D17, 1, n));
    // Index form: sum_{k <= n/2} (n - 2k + 1) cos((2k + 1/2) x)
    TrigSum direct;
    for (long k = 0; 2 * k <= n; ++k) direct.add(Wave::cos, static_cast<unsigned>(4 * k + 1), Rat(n - 2 * k + 1));
    CHECK(direct == fam(FamilyTag::REMARK2_3, 1, n));
  }
}

TEST_CASE("tau sign patterns") {
  CHECK(tau_sign(2, 0) == 1);
  CHECK(tau_sign(2, 1) == 1);
  CHECK(tau_sign(2, 2) == -1);
  CHECK(tau_sign(2, 3) == -1);
  CHECK(tau_sign(1, 3) == -1);
  CHECK(tau_sign(1, 4) == 1);
}

TEST_CASE("eval_float agrees with eval_exact across the catalog") {
  std::mt19937_64 rng(23);
  const Real tol = tolerance(-25);
  for (FamilyTag tag : all_family_tags()) {
    for (long m = 1; m <= 12; m += (uses_m(tag) ? 1 : 12)) {
      for (long n = std::max(1L, min_n(tag)); n <= 12; ++n) {
        const TrigSum s = build({tag, m, n});
        const Real scale = Real(coefficient_magnitude(s), kBits) + Real(1L, kBits);
        for (int i = 0; i < 4; ++i) {
          std::uniform_int_distribution<int> num(-999, 999);
          const Rat c = make_rat(num(rng), 1000);
          const ExactValue ex = eval_exact(s, c);
          const Real cr(c, kBits);
          const Real x = acos(cr) * 2;
          const Real exact = Real(ex.cos_value, kBits) + sqrt(Real(1L, kBits) - cr * cr) * Real(ex.sin_u_coeff, kBits);
          CHECK(abs(eval_float(s, x, kBits) - exact) / scale < tol);
        }
      }
    }
  }
}
