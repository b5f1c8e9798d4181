// Bound machinery behind the refined Szego-Schweitzer inequality.
//
// S_n is the S22 sum, L_n the L_N minorant, f_n, g_n, h_n the F24, G25, H26
// pieces in t = (n+2)x. Checks marked exact run in rational arithmetic; the
// others evaluate at working precision (>= 192 bits) on a grid.
#pragma once

#include <string_view>
#include <vector>

#include "trigineq/lemma_report.hpp"
#include "trigineq/real.hpp"

namespace trigineq {

inline constexpr long kLemmaBits = 192;

struct LemmaOptions {
  long grid_points = 2048;
  long precision_bits = kLemmaBits;
};

/// Reports L3, L4, L5, L6, L7 for one n. n < 21 is allowed and flagged with a
/// regime warning.
std::vector<LemmaReport> run_lemma_checks(long n, const LemmaOptions& options = {});

LemmaReport lemma3(long n, const LemmaOptions& options = {});
LemmaReport lemma4(long n, const LemmaOptions& options = {});
LemmaReport lemma5(long n, const LemmaOptions& options = {});
LemmaReport lemma6(long n, const LemmaOptions& options = {});
LemmaReport lemma7(long n, const LemmaOptions& options = {});

/// Positivity of S_n on (0, 2pi/3) split into the small-x part, Cases 1, 2
/// and the n mod 3 subcases of Case 3, each also scanned on a grid.
LemmaReport theorem5_case_partition(long n, const LemmaOptions& options = {});

/// True when the decimal expansion of v, truncated to the decimals in
/// `digits`, equals `digits` ("2.78" matches 2.7866...).
bool matches_truncated(const Real& v, std::string_view digits);

/// H(r, s) = 14 sin(r/23) - sin(22r/23) - s/3.
Real lemma7_H(const Real& r, const Real& s);

}  // namespace trigineq
