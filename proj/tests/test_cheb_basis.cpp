#include <random>

#include "doctest.h"
#include "trigineq/catalog.hpp"
#include "trigineq/chebyshev.hpp"

using namespace trigineq;

namespace {

constexpr long kBits = 200;

Real tolerance(long exponent) { return pow(Real(10L, kBits), exponent); }

// Random angle q*pi, q in (0, 1).
Real random_angle(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9999);
  return Real(make_rat(num(rng), 10000), kBits) * pi(kBits);
}

}  // namespace

TEST_CASE("first Chebyshev polynomials") {
  CHECK(cheb_T(0) == Poly{Rat(1)});
  CHECK(cheb_T(1) == Poly{Rat(0), Rat(1)});
  CHECK(cheb_T(2) == Poly{Rat(-1), Rat(0), Rat(2)});
  CHECK(cheb_T(3) == Poly{Rat(0), Rat(-3), Rat(0), Rat(4)});
  CHECK(cheb_U(0) == Poly{Rat(1)});
  CHECK(cheb_U(1) == Poly{Rat(0), Rat(2)});
  CHECK(cheb_U(2) == Poly{Rat(-1), Rat(0), Rat(4)});
  // Past the shared table capacity the recurrence is run on demand.
  CHECK(cheb_T(300).degree() == 300);
}

TEST_CASE("degree and leading coefficient") {
  const ChebTable table(64);
  CHECK(table.capacity() == 64);
  for (std::size_t k = 1; k <= 64; ++k) {
    CHECK(table.T(k).degree() == static_cast<int>(k));
    CHECK(table.U(k).degree() == static_cast<int>(k));
    Int two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, k - 1);
    CHECK(table.T(k).leading() == Rat(two_pow));
    CHECK(table.U(k).leading() == Rat(two_pow * 2));
  }
}

TEST_CASE("Pell identity T_k^2 - (t^2 - 1) U_{k-1}^2 = 1") {
  const Poly t2m1{Rat(-1), Rat(0), Rat(1)};
  for (std::size_t k = 1; k <= 32; ++k) {
    CHECK(cheb_T(k) * cheb_T(k) - t2m1 * cheb_U(k - 1) * cheb_U(k - 1) == Poly{Rat(1)});
  }
}

TEST_CASE("cos/sin interpolation at high precision") {
  std::mt19937_64 rng(99);
  const Real tol = tolerance(-25);
  for (int trial = 0; trial < 32; ++trial) {
    const Real theta = random_angle(rng);
    const Real c = cos(theta);
    for (long k = 1; k <= 64; ++k) {
      const Real kt = theta * k;
      CHECK(abs(poly_eval(cheb_T(static_cast<std::size_t>(k)), c) - cos(kt)) < tol);
      CHECK(abs(poly_eval(cheb_U(static_cast<std::size_t>(k - 1)), c) * sin(theta) - sin(kt)) < tol);
    }
  }
}

TEST_CASE("to_algebraic basic rewrites") {
  // sin x = 2 sin(x/2) cos(x/2)
  HalfAngleForm f = to_algebraic(TrigSum::sin_full(1));
  CHECK(f.cos_part.is_zero());
  CHECK(f.sin_part == Poly{Rat(0), Rat(2)});

  HalfAngleForm g = to_algebraic(TrigSum::constant(Rat(3)) + TrigSum::cos_half(3, Rat(2)));
  CHECK(g.cos_part == Poly{Rat(3), Rat(-6), Rat(0), Rat(8)});
  CHECK(g.sin_part.is_zero());
}

TEST_CASE("P_DIFF polynomials for n = 1, 2, 3") {
  auto r = [](long n) { return to_full_angle(build({FamilyTag::P_DIFF, 1, n})); };
  for (long n = 1; n <= 3; ++n) CHECK(r(n).cos_part.is_zero());
  // (8/9)(2+t)(1-t), (4/9)(13+16t-2t^2), (52/9)(1+2t)^2
  CHECK(r(1).sin_part == make_rat(8, 9) * Poly{Rat(2), Rat(1)} * Poly{Rat(1), Rat(-1)});
  CHECK(r(2).sin_part == make_rat(4, 9) * Poly{Rat(13), Rat(16), Rat(-2)});
  CHECK(r(3).sin_part == make_rat(52, 9) * Poly{Rat(1), Rat(2)} * Poly{Rat(1), Rat(2)});

  // In the half-angle variable the sine part is sin x / sin(x/2) = 2c times R_n(2c^2 - 1).
  const HalfAngleForm half = to_algebraic(build({FamilyTag::P_DIFF, 1, 2}));
  CHECK(half.cos_part.is_zero());
  const Poly t_of_c{Rat(-1), Rat(0), Rat(2)};
  CHECK(half.sin_part == Poly{Rat(0), Rat(2)} * compose(r(2).sin_part, t_of_c));
}

TEST_CASE("half-angle form reproduces the trigonometric value") {
  std::mt19937_64 rng(3);
  const Real tol = tolerance(-25);
  const std::vector<FamilyId> samples = {
      {FamilyTag::V15, 3, 9}, {FamilyTag::U14, 2, 7}, {FamilyTag::P_DIFF, 1, 12}, {FamilyTag::E5, 1, 5},
      {FamilyTag::L_N, 1, 21}, {FamilyTag::THETA_DIFF, 1, 8}};
  for (const FamilyId& id : samples) {
    const TrigSum s = build(id);
    const HalfAngleForm form = to_algebraic(s);
    for (int i = 0; i < 64; ++i) {
      const Real x = random_angle(rng);
      const Real half = x / 2;
      const Real c = cos(half);
      const Real algebraic = poly_eval(form.cos_part, c) + sin(half) * poly_eval(form.sin_part, c);
      const Real direct = eval_float(s, x, kBits);
      const Real scale = Real(1L, kBits) + abs(direct);
      CHECK(abs(algebraic - direct) / scale < tol);
    }
  }
}

TEST_CASE("to_algebraic is linear") {
  const TrigSum a = build({FamilyTag::V15, 2, 6});
  const TrigSum b = build({FamilyTag::B12, 3, 5});
  const Rat w = make_rat(-7, 3);
  CHECK(to_algebraic(w * a + b) == w * to_algebraic(a) + to_algebraic(b));
}

TEST_CASE("half-angle product matches trigonometric product") {
  const TrigSum a = build({FamilyTag::V15, 1, 4});
  const TrigSum b = build({FamilyTag::U14, 2, 3});
  CHECK(to_algebraic(a * b) == to_algebraic(a) * to_algebraic(b));
}

TEST_CASE("full-angle conversion agrees with the half-angle route") {
  for (FamilyTag tag : {FamilyTag::A11, FamilyTag::B12, FamilyTag::P_DIFF, FamilyTag::THETA_DIFF, FamilyTag::S22}) {
    for (long n = 1; n <= 9; ++n) {
      const TrigSum s = build({tag, 2, n});
      CHECK(to_full_angle(s) == half_to_full(to_algebraic(s)));
    }
  }
  CHECK_THROWS_AS(to_full_angle(build({FamilyTag::V15, 1, 2})), std::domain_error);
}

TEST_CASE("angles and interval images") {
  CHECK(parse_angle("0").pi_multiple == 0);
  CHECK(parse_angle("pi").pi_multiple == 1);
  CHECK(parse_angle("2pi/3").pi_multiple == make_rat(2, 3));
  CHECK(parse_angle("-pi/3").pi_multiple == make_rat(-1, 3));
  CHECK(parse_angle("3*pi/4").pi_multiple == make_rat(3, 4));
  CHECK(to_string(parse_angle("2pi/3")) == "2pi/3");
  CHECK_THROWS_AS(parse_angle("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle("pi*2"), std::invalid_argument);

  CHECK(*rational_cos(parse_angle("2pi/3")) == make_rat(-1, 2));
  CHECK(*rational_cos(parse_angle("5pi/3")) == make_rat(1, 2));
  CHECK(*rational_cos(parse_angle("-pi")) == -1);
  CHECK_FALSE(rational_cos(parse_angle("pi/4")).has_value());

  auto c = x_interval_to_c(parse_angle("0"), parse_angle("pi"));
  CHECK(c.lo == 0);
  CHECK(c.hi == 1);
  c = x_interval_to_c(parse_angle("0"), parse_angle("2pi"));
  CHECK(c.lo == -1);
  CHECK(c.hi == 1);
  c = x_interval_to_c(parse_angle("0"), parse_angle("2pi/3"));
  CHECK(c.lo == make_rat(1, 2));
  auto t = x_interval_to_t(parse_angle("0"), parse_angle("2pi/3"));
  CHECK(t.lo == make_rat(-1, 2));
  CHECK(t.hi == 1);
  CHECK_THROWS_AS(x_interval_to_c(parse_angle("0"), parse_angle("pi/3")), std::domain_error);
  CHECK_THROWS_AS(x_interval_to_t(parse_angle("0"), parse_angle("2pi")), std::domain_error);
}
