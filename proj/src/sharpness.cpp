#include "trigineq/sharpness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "trigineq/catalog.hpp"
#include "trigineq/real.hpp"

namespace trigineq {

namespace {

constexpr std::pair<ClaimId, std::string_view> kNames[] = {
    {ClaimId::TH1_m, "TH1_m"},       {ClaimId::TH2_neg_quarter, "TH2_neg_quarter"},
    {ClaimId::TH2_zero, "TH2_zero"}, {ClaimId::TH3_zero, "TH3_zero"},
    {ClaimId::TH4_zero, "TH4_zero"}, {ClaimId::TH5_2_9, "TH5_2_9"},
    {ClaimId::COR_2_27, "COR_2_27"}};

std::string str(const Real& v) { return v.to_string(20); }

void push(SharpnessReport& r, std::string index, const Real& value, const Real& target) {
  const Real gap = abs(value - target);
  r.points.push_back({std::move(index), str(value), str(gap), gap.to_double()});
}

bool gaps_decrease(const SharpnessReport& r) {
  for (std::size_t i = 1; i < r.points.size(); ++i) {
    if (!(r.points[i].gap_double < r.points[i - 1].gap_double)) return false;
  }
  return true;
}

// Exact endpoint values: value(k) must equal target(k) for every k.
void exact_claim(SharpnessReport& r, int depth, const std::function<std::pair<Rat, Rat>(int)>& pair_at) {
  r.exact = true;
  bool all = true;
  for (int k = 1; k <= depth; ++k) {
    const auto [value, target] = pair_at(k);
    const Rat gap = abs(canonical(value - target));
    r.points.push_back({std::to_string(k), to_string(value), to_string(gap), gap.get_d()});
    if (gap != 0) all = false;
  }
  r.extrapolated_limit = r.points.back().value;
  r.final_gap = r.points.back().gap;
  r.pass = all;
}

// Limit claims in x -> 0 along x = 10^-k.
void limit_in_x(SharpnessReport& r, int depth, long bits, const std::function<Real(const Real&)>& f,
                double threshold_gap, int threshold_k) {
  const Real target(r.target, bits);
  std::vector<Real> xs, vs;
  for (int k = 1; k <= depth; ++k) {
    const Real x = pow(Real(10L, bits), -k);
    Real v = f(x);
    push(r, "x=1e-" + std::to_string(k), v, target);
    xs.push_back(x);
    vs.push_back(std::move(v));
  }
  // Gap ~ C x^2: eliminate the quadratic term from the last two points.
  const Real& x1 = xs[xs.size() - 2];
  const Real& x2 = xs.back();
  const Real lim = (vs.back() * x1 * x1 - vs[vs.size() - 2] * x2 * x2) / (x1 * x1 - x2 * x2);
  r.extrapolated_limit = str(lim);
  r.final_gap = r.points.back().gap;
  r.pass = r.points[threshold_k - 1].gap_double < threshold_gap && gaps_decrease(r);
}

}  // namespace

std::string_view to_string(ClaimId id) {
  for (const auto& [claim, name] : kNames) {
    if (claim == id) return name;
  }
  return "?";
}

std::optional<ClaimId> parse_claim(std::string_view name) {
  for (const auto& [claim, n] : kNames) {
    if (n == name) return claim;
  }
  return std::nullopt;
}

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> claims = [] {
    std::vector<ClaimId> out;
    for (const auto& entry : kNames) out.push_back(entry.first);
    return out;
  }();
  return claims;
}

SharpnessReport check_sharpness(ClaimId claim, int depth, long bits) {
  if (depth < 8) throw std::invalid_argument("depth must be ≥ 8");
  SharpnessReport r;
  r.claim = claim;
  switch (claim) {
    case ClaimId::TH1_m:
      r.sequence_spec = "B_1(m, pi) for m = 1..depth; target m";
      r.note = "target listed for m = 1; each m is compared with its own bound";
      r.target = Rat(1);
      exact_claim(r, depth, [](int m) {
        return std::pair{eval_exact_full(build({FamilyTag::B12, m, 1}), Rat(-1)).cos_value, Rat(m)};
      });
      break;
    case ClaimId::TH2_neg_quarter: {
      r.sequence_spec = "U_{2n-1}(1, x_n), x_n = 4n pi/(4n+1), n = 10^(1 + 3i/(depth-1)) and 10^2, 10^3, 10^4";
      r.target = make_rat(-1, 4);
      r.note = "per-n infimum is above -1/4; only the limit attains it";
      const Real target(r.target, bits);
      std::vector<long> ns;
      std::vector<Real> vs;
      bool closed_ok = true;
      std::vector<long> grid = {100, 1000, 10000};
      for (int i = 0; i < depth; ++i) grid.push_back(std::lround(std::pow(10.0, 1.0 + 3.0 * i / (depth - 1))));
      std::sort(grid.begin(), grid.end());
      grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
      for (const long n : grid) {
        const Real x = pi(bits) * (4 * n) / (4 * n + 1);
        Real v = eval_float(build({FamilyTag::U14, 1, 2 * n - 1}), x, bits);
        const Real closed = (cos(x / 2) - 1) / ((Real(1L, bits) - cos(x)) * 2);
        if (!(abs(v - closed) < pow(Real(10L, bits), -40))) closed_ok = false;
        push(r, "n=" + std::to_string(n), v, target);
        ns.push_back(n);
        vs.push_back(std::move(v));
      }
      // Gap ~ C/n.
      const long n1 = ns[ns.size() - 2], n2 = ns.back();
      const Real lim = (vs.back() * n2 - vs[vs.size() - 2] * n1) / (n2 - n1);
      r.extrapolated_limit = str(lim);
      r.final_gap = r.points.back().gap;
      double gap_1000 = 1;
      for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] == 1000) gap_1000 = r.points[i].gap_double;
      }
      r.pass = closed_ok && gap_1000 < 1e-2 && gaps_decrease(r);
      break;
    }
    case ClaimId::TH2_zero:
      r.sequence_spec = "U_n(m, pi) for m = 2..depth+1 and V_n(m, 0), n = 2k+1; target 0";
      r.target = Rat(0);
      exact_claim(r, depth, [](int k) {
        const long m = k + 1, n = 2 * k + 1;
        const Rat u = eval_exact(build({FamilyTag::U14, m, n}), Rat(0)).cos_value;
        // V is a sine sum in x/2; at x = 0 the sine factor vanishes.
        const ExactValue v = eval_exact(build({FamilyTag::V15, m, n}), Rat(1));
        return std::pair{canonical(abs(u) + abs(v.cos_value)), Rat(0)};
      });
      break;
    case ClaimId::TH3_zero:
      r.sequence_spec = "C_n(m, pi) and D_n(m, 0) for m = k, n = 2k+1; target 0";
      r.target = Rat(0);
      exact_claim(r, depth, [](int k) {
        const long m = k, n = 2 * k + 1;
        const Rat c = eval_exact(build({FamilyTag::C16, m, n}), Rat(0)).cos_value;
        const ExactValue d = eval_exact(build({FamilyTag::D17, m, n}), Rat(1));
        return std::pair{canonical(abs(c) + abs(d.cos_value)), Rat(0)};
      });
      break;
    case ClaimId::TH4_zero: {
      r.sequence_spec = "sum C(n-k+1,1) sin((2k+1)x) sin((2k+1)y)/(2k+1) at y = pi/2, x = 10^-k, n = 5; target 0";
      r.target = Rat(0);
      const TrigSum tau = build({FamilyTag::TAU_SIGNED, 1, 5, 1});
      // At y = pi/2 the product sum is the tau_1 signed sum; at x = 0 it is exactly 0.
      const bool zero = eval_float(tau, Real(0L, bits), bits).is_zero();
      const Real target(0L, bits);
      for (int k = 1; k <= depth; ++k) {
        push(r, "x=1e-" + std::to_string(k), eval_float(tau, pow(Real(10L, bits), -k), bits), target);
      }
      r.extrapolated_limit = "0";
      r.final_gap = r.points.back().gap;
      r.pass = zero && gaps_decrease(r);
      break;
    }
    case ClaimId::TH5_2_9:
      r.sequence_spec = "P_1(x) / (sin x (1 + 2cos x)^2) at x = 10^-k";
      r.target = make_rat(2, 9);
      limit_in_x(r, depth, bits,
                 [&](const Real& x) {
                   const Real q = cos(x) * 2 + 1;
                   return eval_float(build({FamilyTag::P10, 1, 1}), x, bits) / (sin(x) * q * q);
                 },
                 1e-7, 4);
      break;
    case ClaimId::COR_2_27:
      r.sequence_spec = "Theta_1(x) / ((1 - cos x)(13 + 10cos x + 4cos^2 x)) at x = 10^-k";
      r.target = make_rat(2, 27);
      limit_in_x(r, depth, bits,
                 [&](const Real& x) {
                   const Real c = cos(x);
                   return eval_float(build({FamilyTag::THETA, 1, 1}), x, bits) /
                          ((Real(1L, bits) - c) * (c * 10 + c * c * 4 + 13));
                 },
                 1e-6, 3);
      break;
  }
  return r;
}

}  // namespace trigineq
