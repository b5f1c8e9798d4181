// Sequences showing that the constants in the inequalities cannot be improved.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigineq/rational.hpp"

namespace trigineq {

enum class ClaimId { TH1_m, TH2_neg_quarter, TH2_zero, TH3_zero, TH4_zero, TH5_2_9, COR_2_27 };

std::string_view to_string(ClaimId id);
std::optional<ClaimId> parse_claim(std::string_view name);
const std::vector<ClaimId>& all_claims();

struct SequencePoint {
  std::string index;  // n, m or x
  std::string value;
  std::string gap;    // |value - target|
  double gap_double = 0;
};

struct SharpnessReport {
  ClaimId claim = ClaimId::TH1_m;
  std::string sequence_spec;
  Rat target;
  bool exact = false;
  std::vector<SequencePoint> points;
  std::string extrapolated_limit;
  std::string final_gap;
  bool pass = false;
  std::string note;
};

/// Evaluates the claim's sequence at `depth` indices; depth >= 8.
SharpnessReport check_sharpness(ClaimId claim, int depth = 10, long precision_bits = 256);

}  // namespace trigineq
