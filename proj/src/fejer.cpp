#include "trigineq/fejer.hpp"

#include <vector>

#include "trigineq/catalog.hpp"
#include "trigineq/certificate.hpp"

namespace trigineq {

namespace {

constexpr long kBits = 128;

std::vector<Rat> binomial_weights(long m, long n) {
  std::vector<Rat> c;
  for (long k = 0; k <= n; ++k) c.emplace_back(binom(static_cast<unsigned long>(n - k + m), static_cast<unsigned long>(m)));
  return c;
}

}  // namespace

FejerResult check_fejer_condition(std::span<const Rat> c) {
  if (c.empty()) return {false, 0};
  const std::size_t N = c.size() - 1;
  for (std::size_t i = 0; i + 1 < N; ++i) {
    if (c[i] - c[i + 1] < c[i + 1] - c[i + 2]) return {false, i};
  }
  if (N >= 1 && c[N - 1] - c[N] < c[N]) return {false, N - 1};
  if (c[N] < 0) return {false, N};
  return {true, std::nullopt};
}

LemmaReport lemma1_condition(long m, long n, long grid) {
  LemmaReport report{"L1cond", n, {}, {}};
  const std::vector<Rat> c = binomial_weights(m, n);

  const FejerResult fejer = check_fejer_condition(c);
  auto& cond = report.add("fejer_chain", "c0-c1 >= c1-c2 >= ... >= c_{N-1}-c_N >= c_N >= 0", true, fejer.pass);
  cond.details.emplace_back("m", std::to_string(m));
  if (fejer.first_violation) cond.details.emplace_back("first_violation", std::to_string(*fejer.first_violation));

  // c_{n+1} = 0 closes the chain.
  std::vector<Rat> ext = c;
  ext.emplace_back(0);
  bool second = true;
  for (long k = 0; k + 2 <= n + 1; ++k) {
    const Rat lhs = ext[k + 2] - 2 * ext[k + 1] + ext[k];
    const Rat rhs = canonical(Rat(m * (m - 1)) / Rat((n - k) * (n - k + m - 1)) * ext[k + 1]);
    if (lhs != rhs || lhs < 0) second = false;
  }
  report.add("second_difference", "c_{k+2}-2c_{k+1}+c_k = m(m-1)/((n-k)(n-k+m-1)) c_{k+1} >= 0", true, second);

  const TrigSum T = build({FamilyTag::T31, m, n});
  const GridScan scan = grid_minimum([&](const Real& x) { return eval_float(T, x, kBits); }, Real(0L, kBits),
                                     pi(kBits) * 2, grid, 3);
  auto& concl = report.add("cosine_sum_nonnegative", "c0/2 + sum c_k cos(kx) >= 0 on [0, 2pi]", false,
                           scan.minimum > -pow(Real(10L, kBits), -20));
  concl.details.emplace_back("grid_minimum", scan.minimum.to_string(20));
  concl.details.emplace_back("argmin", scan.argmin.to_string(20));

  const TrigSum gap = build({FamilyTag::B12, m, n}) - TrigSum::constant(Rat(m)) - T;
  const Rat expected = canonical(Rat(binom(static_cast<unsigned long>(n + m), static_cast<unsigned long>(m))) / 2 - m);
  auto& g = report.add("constant_gap", "B_n(m,x) - m - T_n(m,x) = C(n+m,m)/2 - m", true,
                       gap == TrigSum::constant(expected) && (n < 2 || expected > 0));
  g.details.emplace_back("gap", to_string(expected));
  return report;
}

LemmaReport lemma2_transfer(long m, long n, long grid) {
  LemmaReport report{"L2transfer", n, {}, {}};

  // c_{2k} = 0, c_{2k+1} = C(n-k+m,m)/(2k+1).
  std::vector<Rat> c(static_cast<std::size_t>(2 * n + 2), Rat(0));
  for (long k = 0; k <= n; ++k) {
    c[2 * k + 1] = canonical(Rat(binom(static_cast<unsigned long>(n - k + m), static_cast<unsigned long>(m))) /
                             Rat(2 * k + 1));
  }
  TrigSum weighted;
  for (std::size_t k = 1; k < c.size(); ++k) weighted.add(Wave::sin, static_cast<unsigned>(2 * k), Rat(static_cast<long>(k)) * c[k]);
  const TrigSum doubled = dilate(build({FamilyTag::V15, m, n}), 2);
  report.add("hypothesis_identity", "V_n(m,2t) = sum k c_k sin(kt)", true, doubled == weighted);

  const Certificate cert = certify_sum(doubled, Rat(0), parse_interval("0..pi"));
  auto& hyp = report.add("hypothesis_positive", "sum k c_k sin(kt) > 0 on (0, pi)", true, cert.verdict == Verdict::proved);
  hyp.details.emplace_back("verdict", std::string(to_string(cert.verdict)));
  hyp.details.emplace_back("method", std::string(to_string(cert.method)));

  // sin(j x_i) for the lattice x_i = i pi/(grid+1), odd j only.
  const Real step = pi(kBits) / (grid + 1);
  std::vector<std::vector<Real>> sines(static_cast<std::size_t>(grid + 1));
  for (long i = 0; i <= grid; ++i) {
    const Real x = step * i;
    for (long k = 0; k <= n; ++k) sines[i].push_back(sin(x * (2 * k + 1)));
  }
  auto product_sum = [&](const std::vector<Real>& sx, const std::vector<Real>& sy) {
    std::vector<Real> parts;
    for (long k = 0; k <= n; ++k) parts.push_back(Real(c[2 * k + 1], kBits) * sx[k] * sy[k]);
    return compensated_sum(parts, kBits);
  };
  long positive = 0;
  Real minimum(kBits);
  bool have = false;
  for (long i = 1; i <= grid; ++i) {
    for (long j = 1; j <= grid; ++j) {
      Real v = product_sum(sines[i], sines[j]);
      if (v.sign() > 0) ++positive;
      if (!have || v < minimum) {
        minimum = std::move(v);
        have = true;
      }
    }
  }
  auto& concl = report.add("conclusion_grid", "sum c_k sin(kx) sin(ky) > 0 on (0, pi)^2", false,
                           positive == grid * grid);
  concl.details.emplace_back("points", std::to_string(grid * grid));
  concl.details.emplace_back("positive", std::to_string(positive));
  concl.details.emplace_back("minimum", minimum.to_string(20));

  bool zero_row = true;
  for (long j = 1; j <= grid; ++j) {
    if (!product_sum(sines[0], sines[j]).is_zero()) zero_row = false;
  }
  report.add("equality_at_x0", "x = 0 gives equality", true, zero_row);

  // sin((2k+1) pi/2) and sin((2k+1) pi/4) carry the signs (-1)^tau_1(k), (-1)^tau_2(k).
  bool pattern = true;
  std::string tau2;
  const Real half_pi = pi(kBits) / 2;
  const Real quarter_pi = pi(kBits) / 4;
  for (long k = 0; k <= std::max(n, 3L); ++k) {
    const int s1 = sin(half_pi * (2 * k + 1)).sign();
    const int s2 = sin(quarter_pi * (2 * k + 1)).sign();
    if (s1 != tau_sign(1, k) || s2 != tau_sign(2, k)) pattern = false;
    if (k <= 3) tau2 += s2 > 0 ? '+' : '-';
  }
  auto& pat = report.add("tau_patterns", "y = pi/2 and y = pi/4 give (-1)^tau_1(k), (-1)^tau_2(k)", false, pattern);
  pat.details.emplace_back("tau2_k0_3", tau2);

  for (int variant : {1, 2}) {
    const Certificate tau = certify_positive({FamilyTag::TAU_SIGNED, m, n, variant}, Rat(0), parse_interval("0..pi"));
    auto& t = report.add("tau" + std::to_string(variant) + "_positive",
                         "sum (-1)^tau_j(k) C(n-k+m,m) sin((2k+1)x)/(2k+1) > 0 on (0, pi)", true,
                         tau.verdict == Verdict::proved);
    t.details.emplace_back("verdict", std::string(to_string(tau.verdict)));
  }
  return report;
}

}  // namespace trigineq
