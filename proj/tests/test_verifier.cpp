#include "doctest.h"
#include "trigineq/certificate.hpp"

using namespace trigineq;

namespace {

const AngleInterval kZeroPi = parse_interval("0..pi");
const AngleInterval kTwoThirds = parse_interval("0..2pi/3");

void check_sound(const Certificate& cert, const TrigSum& sum) {
  REQUIRE(cert.verdict == Verdict::proved);
  CHECK(cert.method == Method::sturm);
  CHECK(cert.open_root_count == 0);
  CHECK(cert.probe_sign > 0);
  CHECK(recheck(sum, cert.bound, cert.interval, 256, 17).passed);
}

}  // namespace

TEST_CASE("interval parsing") {
  CHECK(kTwoThirds.hi.pi_multiple == make_rat(2, 3));
  CHECK(to_string(kTwoThirds) == "0..2pi/3");
  CHECK_THROWS_AS(parse_interval("0-pi"), std::invalid_argument);
  CHECK_THROWS_AS(parse_interval("pi..0"), std::invalid_argument);
}

TEST_CASE("P_DIFF n = 6 on (0, 2pi/3)") {
  const FamilyId id{FamilyTag::P_DIFF, 1, 6};
  const Certificate cert = certify_positive(id, Rat(0), kTwoThirds);
  check_sound(cert, build(id));
  CHECK(cert.variable == Variable::t);
  CHECK(cert.part == Wave::sin);
  CHECK(cert.degree == 5);
  CHECK(cert.root_count == 1);
  REQUIRE(cert.endpoint_zeros.size() == 1);
  CHECK(cert.endpoint_zeros[0] == "t=-1/2");
  // P_DIFF vanishes at x = 0 (sin x) and at x = 2pi/3 for n = 0 mod 3.
  CHECK(cert.endpoint_signs == std::array<int, 2>{0, 0});

  const Certificate seven = certify_positive({FamilyTag::P_DIFF, 1, 7}, Rat(0), kTwoThirds);
  CHECK(seven.verdict == Verdict::proved);
  CHECK(seven.root_count == 0);
  CHECK(seven.endpoint_signs[1] > 0);
}

TEST_CASE("B12 with bound m, m = n = 1") {
  const FamilyId id{FamilyTag::B12, 1, 1};
  const Certificate cert = certify_positive(id, Rat(1), kZeroPi);
  check_sound(cert, build(id));
  // 1 + cos x is zero at x = pi.
  CHECK(cert.endpoint_signs == std::array<int, 2>{1, 0});
  CHECK(cert.endpoint_zeros == std::vector<std::string>{"t=-1"});
}

TEST_CASE("U14 with m = 1 above -1/4") {
  for (long n = 0; n <= 12; ++n) {
    const FamilyId id{FamilyTag::U14, 1, n};
    const Certificate cert = certify_positive(id, make_rat(-1, 4), kZeroPi);
    check_sound(cert, build(id));
    CHECK(cert.variable == Variable::c);
    CHECK(cert.part == Wave::cos);
  }
}

TEST_CASE("refutation carries a witness") {
  const FamilyId id{FamilyTag::B12, 3, 1};
  const Certificate cert = certify_positive(id, Rat(4), kZeroPi);
  CHECK(cert.verdict == Verdict::refuted);
  REQUIRE(cert.witness.has_value());
  CHECK(cert.witness->margin_double < -1e-20);
  const Real margin = eval_float(build(id), Real(cert.witness->x_double, 128), 128) - Real(4L, 128);
  CHECK(margin.sign() < 0);

  // cos x > 0 fails on part of (0, pi) only.
  const Certificate partial = certify_sum(TrigSum::cos_full(1), Rat(0), kZeroPi);
  CHECK(partial.verdict == Verdict::refuted);
  CHECK(partial.open_root_count == 1);
  REQUIRE(partial.witness.has_value());
  CHECK(partial.witness->x_double > 1.5707);
}

TEST_CASE("sturm route refuses irrational images") {
  CertifyOptions sturm;
  sturm.method = MethodChoice::sturm;
  CHECK_THROWS_AS(certify_positive({FamilyTag::B12, 1, 3}, Rat(1), parse_interval("0..pi/4"), sturm),
                  std::domain_error);
  // Mixed form with a nonzero bound.
  CHECK_THROWS_AS(certify_positive({FamilyTag::A11, 1, 3}, Rat(1), kZeroPi, sturm), std::domain_error);
}

TEST_CASE("grid route caps at numeric_only") {
  const Certificate cert = certify_positive({FamilyTag::B12, 2, 4}, Rat(2), parse_interval("0..pi/4"));
  CHECK(cert.method == Method::grid);
  CHECK(cert.verdict == Verdict::numeric_only);
  CHECK(cert.grid_minimum.has_value());

  CertifyOptions grid;
  grid.method = MethodChoice::grid;
  grid.grid_points = 256;
  const Certificate bad = certify_sum(TrigSum::cos_full(1), Rat(0), kZeroPi, grid);
  CHECK(bad.verdict == Verdict::refuted);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.precision_bits == 4 * kDefaultPrecisionBits);
}

TEST_CASE("grid minimum finds a known minimum") {
  const GridScan scan = grid_minimum([](const Real& x) { return cos(x); }, Real(0L, 128), pi(128) * 2, 512, 3);
  CHECK(abs(scan.minimum + 1).to_double() < 1e-9);
  CHECK(std::abs(scan.argmin.to_double() - 3.141592653589793) < 1e-3);
}
