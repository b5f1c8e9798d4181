#include "doctest.h"
#include "trigineq/catalog.hpp"
#include "trigineq/fejer.hpp"
#include "trigineq/lemmas.hpp"
#include "trigineq/sharpness.hpp"

using namespace trigineq;

namespace {

const Check* find(const LemmaReport& r, std::string_view name) {
  for (const Check& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string detail(const Check& c, std::string_view key) {
  for (const auto& [k, v] : c.details) {
    if (k == key) return v;
  }
  return {};
}

std::vector<Rat> rats(std::initializer_list<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("fejer condition") {
  std::vector<Rat> c;
  for (long k = 0; k <= 5; ++k) c.emplace_back(binom(5 - k + 2, 2));
  CHECK(check_fejer_condition(c).pass);
  CHECK(check_fejer_condition(rats({2, 1})).pass);
  const FejerResult bad = check_fejer_condition(rats({1, 3}));
  CHECK_FALSE(bad.pass);
  CHECK(bad.first_violation == 0);
  CHECK(check_fejer_condition(rats({5, 4, 2, 1})).first_violation == 0);
  CHECK(check_fejer_condition(rats({6, 3, 1, 1})).first_violation == 2);
  CHECK(check_fejer_condition(rats({2, 1, 0, -1})).first_violation == 3);
  CHECK(check_fejer_condition(rats({4})).pass);
}

TEST_CASE("fejer conclusion whenever the condition holds") {
  for (long m = 1; m <= 4; ++m) {
    for (long n = 1; n <= 8; ++n) {
      const LemmaReport r = lemma1_condition(m, n, 256);
      CHECK_MESSAGE(r.passed(), "m=", m, " n=", n);
    }
  }
}

TEST_CASE("transfer lemma") {
  const LemmaReport r = lemma2_transfer(1, 1, 64);
  CHECK(r.passed());
  CHECK(detail(*find(r, "conclusion_grid"), "positive") == "4096");
  CHECK(find(r, "equality_at_x0")->pass);
  CHECK(detail(*find(r, "tau_patterns"), "tau2_k0_3") == "++--");
  CHECK(lemma2_transfer(4, 6, 24).passed());
}

TEST_CASE("lemma checkpoints") {
  const LemmaReport l5 = lemma5(21);
  CHECK(l5.passed());
  CHECK(l5.warning.empty());
  CHECK(detail(*find(l5, "checkpoint_L2"), "L_2(1.1pi/2)").rfind("2.78", 0) == 0);
  CHECK(detail(*find(l5, "alpha_margin"), "margin").rfind("3.10", 0) == 0);
  const LemmaReport l7 = lemma7(21);
  CHECK(l7.passed());
  CHECK(detail(*find(l7, "checkpoint_H"), "H(2.9,1.21pi)").rfind("1.33", 0) == 0);
  CHECK(detail(*find(l7, "H_windows"), "windows") == "40");
}

TEST_CASE("lemmas hold in the regime") {
  for (long n : {21L, 24L, 35L}) {
    for (const LemmaReport& r : run_lemma_checks(n, {512, kLemmaBits})) CHECK_MESSAGE(r.passed(), r.lemma_id, " n=", n);
  }
}

TEST_CASE("regime warning below 21") {
  const auto reports = run_lemma_checks(5, {256, kLemmaBits});
  for (const LemmaReport& r : reports) CHECK_FALSE(r.warning.empty());
  // The Lemma 7 bounds use n >= 21 and fail for small n.
  CHECK_FALSE(reports.back().passed());
}

TEST_CASE("matches_truncated") {
  CHECK(matches_truncated(Real(2.7866, 128), "2.78"));
  CHECK_FALSE(matches_truncated(Real(2.7799, 128), "2.78"));
  CHECK(matches_truncated(Real(0.00042, 128), "0.0004"));
}

TEST_CASE("case partition") {
  const LemmaReport r21 = theorem5_case_partition(21, {512, kLemmaBits});
  CHECK(r21.passed());
  CHECK(find(r21, "case3.3") != nullptr);
  const LemmaReport r22 = theorem5_case_partition(22, {512, kLemmaBits});
  CHECK(r22.passed());
  CHECK(find(r22, "case3.1") != nullptr);
  const LemmaReport r23 = theorem5_case_partition(23, {512, kLemmaBits});
  CHECK(r23.passed());
  CHECK(find(r23, "case3.2") != nullptr);
}

TEST_CASE("sharpness claims") {
  for (ClaimId id : all_claims()) {
    const SharpnessReport r = check_sharpness(id, 10);
    CHECK_MESSAGE(r.pass, to_string(id));
    CHECK(r.points.size() == 10);
  }
  const SharpnessReport q = check_sharpness(ClaimId::TH2_neg_quarter, 10);
  CHECK(q.target == make_rat(-1, 4));
  CHECK(q.points[6].index == "n=1000");
  CHECK(q.points[6].gap_double < 1e-2);
  CHECK(q.points[3].gap_double > q.points[6].gap_double);
  CHECK(q.points[6].gap_double > q.points[9].gap_double);
  // Depths that miss 10^3 on the log grid still include it.
  for (int depth : {8, 12, 13}) {
    const SharpnessReport d = check_sharpness(ClaimId::TH2_neg_quarter, depth);
    CHECK(d.pass);
    CHECK(d.points.size() >= static_cast<std::size_t>(depth));
  }
  CHECK(check_sharpness(ClaimId::TH5_2_9, 8).points[3].gap_double < 1e-7);
  CHECK(check_sharpness(ClaimId::COR_2_27, 8).points[2].gap_double < 1e-6);
  CHECK(parse_claim("TH1_m") == ClaimId::TH1_m);
  CHECK_FALSE(parse_claim("TH9").has_value());
  CHECK_THROWS_AS(check_sharpness(ClaimId::TH1_m, 5), std::invalid_argument);
}
