// Fejér's cosine condition and the sine-product transfer.
#pragma once

#include <optional>
#include <span>

#include "trigineq/lemma_report.hpp"
#include "trigineq/rational.hpp"

namespace trigineq {

struct FejerResult {
  bool pass = false;
  /// Index into the chain c0-c1 >= c1-c2 >= ... >= c_{N-1}-c_N >= c_N >= 0:
  /// i < N-1 is the i-th difference comparison, N-1 is d_{N-1} >= c_N, N is c_N >= 0.
  std::optional<std::size_t> first_violation;
};

FejerResult check_fejer_condition(std::span<const Rat> c);

/// Conditions and conclusion checks for the weights C(n-k+m,m) of the first theorem.
LemmaReport lemma1_condition(long m, long n, long grid = 512);

/// Transfers positivity of V15(m, n) at doubled angle to the two-variable
/// product sum on a grid x grid lattice of (0, pi)^2.
LemmaReport lemma2_transfer(long m, long n, long grid);

}  // namespace trigineq
