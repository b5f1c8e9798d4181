// Catalog of the trigonometric sums under study, each built as an exact TrigSum.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigineq/rational.hpp"
#include "trigineq/trig_sum.hpp"

namespace trigineq {

/// Exact binomial coefficient; zero when k > n.
Int binom(unsigned long n, unsigned long k);

enum class FamilyTag {
  A11,         // sum_{k=1}^n C(n-k+m,m) sin(kx)
  B12,         // sum_{k=0}^n C(n-k+m,m) cos(kx)
  T31,         // C(n+m,m)/2 + sum_{k=1}^n C(n-k+m,m) cos(kx)
  U14,         // sum_{k=0}^n C(n-k+m,m) cos((k+1/2)x)
  V15,         // sum_{k=0}^n C(n-k+m,m) sin((k+1/2)x)
  C16,         // U14 restricted to even k
  D17,         // V15 restricted to even k
  P10,         // sum_{k=1}^n (n-k+1)(n-k+2) k sin(kx)
  P_DIFF,      // P10 - (2/9) sin x (1+2cos x)^2
  THETA,       // sum_{k=1}^n (n-k+1)(n-k+2) (1 - cos(kx))
  THETA_DIFF,  // THETA - (2/27)(1-cos x)(13+10cos x+4cos^2 x)
  S22,         // (18n+24)sin x - (9n+27)sin((n+1)x) + 9n sin((n+2)x) + 2 sin 4x - sin 5x
  L_N,         // (18n+24) sin x - 18n sin(x/2) - 29.1
  F24,         // 24 sin y + 2 sin 4y - sin 5y,        y = t/(n+2)
  G25,         // 18n sin y - 27 sin((n+1)y),          y = t/(n+2)
  H26,         // 9n sin((n+2)y) - 9n sin((n+1)y),     y = t/(n+2)
  E5,          // sin x (2(n+1) sin x - sin(2(n+1)x)) + 4 sin^2(x/2) sin^2((n+1)x)
  REMARK2_1,   // U14 with m = 1
  REMARK2_2,   // V15 with m = 1
  REMARK2_3,   // C16 with m = 1
  REMARK2_4,   // D17 with m = 1
  TAU_SIGNED,  // sum_{k=0}^n (-1)^tau_j(k) C(n-k+m,m) sin((2k+1)x)/(2k+1)
};

struct FamilyId {
  FamilyTag tag = FamilyTag::A11;
  long m = 1;
  long n = 1;
  /// Selects tau_1(k) = k or tau_2(k) = floor(k/2) for TAU_SIGNED.
  int variant = 1;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

std::string_view tag_name(FamilyTag tag);
std::optional<FamilyTag> parse_family_tag(std::string_view name);
const std::vector<FamilyTag>& all_family_tags();
/// Closed-form description of the sum the tag builds.
std::string_view tag_formula(FamilyTag tag);
/// Whether the parameter m enters the definition.
bool uses_m(FamilyTag tag);
/// Smallest admissible n for the tag.
long min_n(FamilyTag tag);

/// Throws std::invalid_argument naming the violated constraint.
void validate(const FamilyId& id);

/// Builds the canonical TrigSum of a family. F24, G25 and H26 are returned in
/// the rescaled variable y = t/(n+2); evaluate them at x = y.
TrigSum build(const FamilyId& id);

/// Right-hand sides of the two refined inequalities, without their constants.
TrigSum sin_times_one_plus_two_cos_squared();          // sin x (1 + 2 cos x)^2
TrigSum one_minus_cos_times_quadratic();               // (1 - cos x)(13 + 10 cos x + 4 cos^2 x)

/// Coefficient a_{k,n} of sin(kx) in P_DIFF.
Rat p_diff_coefficient(long k, long n);

/// (-1)^tau_j(k) for j in {1, 2}.
int tau_sign(int variant, long k);

}  // namespace trigineq
