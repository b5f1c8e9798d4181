#include "trigineq/certificate.hpp"

#include <chrono>
#include <random>
#include <stdexcept>

namespace trigineq {

std::string_view to_string(Method m) { return m == Method::sturm ? "sturm" : "grid"; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::proved: return "proved";
    case Verdict::numeric_only: return "numeric_only";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(Variable v) { return v == Variable::t ? "t" : "c"; }

AngleInterval parse_interval(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) throw std::invalid_argument("interval '" + text + "' must look like 0..2pi/3");
  AngleInterval out{parse_angle(text.substr(0, sep)), parse_angle(text.substr(sep + 2))};
  if (!(out.lo.pi_multiple < out.hi.pi_multiple)) {
    throw std::invalid_argument("interval '" + text + "' must have lo < hi");
  }
  return out;
}

std::string to_string(const AngleInterval& interval) {
  return to_string(interval.lo) + ".." + to_string(interval.hi);
}

GridScan grid_minimum(const std::function<Real(const Real&)>& f, const Real& lo, const Real& hi, long points,
                      int rounds) {
  Real a = lo;
  Real b = hi;
  Real best_x = lo;
  Real best_value = Real(lo.precision());
  bool have = false;
  long n = points;
  for (int round = 0; round <= rounds; ++round) {
    const Real step = (b - a) / (n + 1);
    for (long i = 1; i <= n; ++i) {
      Real x = a + step * i;
      Real v = f(x);
      if (!have || v < best_value) {
        best_value = std::move(v);
        best_x = std::move(x);
        have = true;
      }
    }
    // Zoom to the two cells around the best point, staying inside (lo, hi).
    a = best_x - step;
    b = best_x + step;
    if (a < lo) a = lo;
    if (b > hi) b = hi;
    n = std::max(16L, points / 32);
  }
  return {std::move(best_value), std::move(best_x)};
}

namespace {

struct SturmPlan {
  Variable variable;
  RatInterval image;
  Poly cos_part;
  Poly sin_part;
};

// Picks the algebraic variable for the interval, or nullopt when the endpoints
// have no rational image.
std::optional<SturmPlan> plan_conversion(const TrigSum& sum, const AngleInterval& interval) {
  try {
    if (sum.integer_harmonics() && interval.hi.pi_multiple <= 1) {
      FullAngleForm form = to_full_angle(sum);
      return SturmPlan{Variable::t, x_interval_to_t(interval.lo, interval.hi), std::move(form.cos_part),
                       std::move(form.sin_part)};
    }
    if (interval.hi.pi_multiple <= 2) {
      HalfAngleForm form = to_algebraic(sum);
      return SturmPlan{Variable::c, x_interval_to_c(interval.lo, interval.hi), std::move(form.cos_part),
                       std::move(form.sin_part)};
    }
  } catch (const std::domain_error&) {
  }
  return std::nullopt;
}

Real variable_to_x(Variable variable, const Rat& v, long bits) {
  Real x = acos(Real(v, bits));
  return variable == Variable::t ? x : x * 2;
}

std::string endpoint_label(Variable variable, const Rat& v) { return std::string(to_string(variable)) + "=" + to_string(v); }

Witness make_witness(const TrigSum& sum, const Rat& bound, const Real& x, long bits) {
  const Real margin = eval_float(sum, x, bits) - Real(bound, bits);
  return Witness{x.to_string(30), margin.to_string(30), x.to_double(), margin.to_double()};
}

Real angle_value(const Angle& a, long bits) { return Real(a.pi_multiple, bits) * pi(bits); }

void run_grid(const TrigSum& sum, const Rat& bound, const AngleInterval& interval, const CertifyOptions& options,
              Certificate& cert) {
  cert.method = Method::grid;
  cert.grid_points = options.grid_points;
  long bits = options.precision_bits;
  auto scan = [&](long precision) {
    const Real b(bound, precision);
    return grid_minimum([&](const Real& x) { return eval_float(sum, x, precision) - b; },
                        angle_value(interval.lo, precision), angle_value(interval.hi, precision),
                        options.grid_points, options.refinement_rounds);
  };
  GridScan result = scan(bits);
  const Real accept = pow(Real(10L, bits), -12);
  if (!(result.minimum > accept)) {
    bits *= 4;
    result = scan(bits);
  }
  cert.precision_bits = bits;
  cert.grid_minimum = result.minimum.to_string(30);
  if (result.minimum > accept) {
    cert.verdict = Verdict::numeric_only;
    return;
  }
  cert.witness = make_witness(sum, bound, result.argmin, bits);
  const Real reject = -pow(Real(10L, bits), -20);
  cert.verdict = result.minimum < reject ? Verdict::refuted : Verdict::inconclusive;
}

}  // namespace

Certificate certify_sum(const TrigSum& sum, const Rat& bound, const AngleInterval& interval,
                        const CertifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (!(interval.lo.pi_multiple >= 0 && interval.lo.pi_multiple < interval.hi.pi_multiple)) {
    throw std::invalid_argument("interval must satisfy 0 <= lo < hi");
  }
  Certificate cert;
  cert.bound = bound;
  cert.interval = interval;
  cert.precision_bits = options.precision_bits;

  auto finish = [&]() -> Certificate {
    cert.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return cert;
  };

  std::optional<SturmPlan> plan;
  if (options.method != MethodChoice::grid) plan = plan_conversion(sum, interval);
  if (options.method == MethodChoice::sturm && !plan) {
    throw std::domain_error("interval " + to_string(interval) +
                            " has no rational cosine image; use the grid path (--method grid)");
  }

  std::optional<Poly> target;
  if (plan) {
    if (plan->sin_part.is_zero()) {
      cert.part = Wave::cos;
      target = plan->cos_part - Poly::constant(bound);
    } else if (plan->cos_part.is_zero() && bound == 0) {
      cert.part = Wave::sin;
      target = plan->sin_part;
    }
  }
  if (!target) {
    if (options.method == MethodChoice::sturm) {
      throw std::domain_error("form mixes cosine and sine parts for this bound; use the grid path (--method grid)");
    }
    if (plan) cert.note = "mixed half-angle form; grid route";
    run_grid(sum, bound, interval, options, cert);
    return finish();
  }

  cert.method = Method::sturm;
  cert.variable = plan->variable;
  const Rat& vlo = plan->image.lo;
  const Rat& vhi = plan->image.hi;
  const Poly& poly = *target;
  cert.degree = poly.degree();

  // Sign of value - bound at a point of the variable's closed image.
  auto full_sign = [&](const Rat& v) {
    if (cert.part == Wave::sin && (v == 1 || v == -1)) return 0;
    return sign_at(poly, v);
  };
  // x = lo maps to the upper end of the image.
  cert.endpoint_signs = {full_sign(vhi), full_sign(vlo)};

  if (poly.is_zero()) {
    cert.verdict = Verdict::inconclusive;
    cert.note = "sum equals the bound identically";
    cert.witness = make_witness(sum, bound, angle_value(Angle{canonical((interval.lo.pi_multiple + interval.hi.pi_multiple) / 2)}, options.precision_bits), options.precision_bits);
    return finish();
  }

  const SturmChain chain = sturm_chain(poly);
  cert.open_root_count = count_roots(chain, vlo, vhi, false, false);
  cert.root_count = count_roots(chain, vlo, vhi, true, true);
  for (const Rat& v : {vlo, vhi}) {
    if (sign_at(poly, v) == 0) cert.endpoint_zeros.push_back(endpoint_label(cert.variable, v));
  }
  cert.probe = canonical((vlo + vhi) / 2);
  cert.probe_sign = sign_at(poly, cert.probe);

  if (cert.open_root_count == 0 && cert.probe_sign > 0) {
    cert.verdict = Verdict::proved;
    return finish();
  }
  if (cert.open_root_count == 0) {
    cert.verdict = Verdict::refuted;
    cert.witness = make_witness(sum, bound, variable_to_x(cert.variable, cert.probe, options.precision_bits),
                                options.precision_bits);
    return finish();
  }
  // Roots inside: look for a rational point where the polynomial is negative.
  constexpr long kProbes = 4096;
  for (long i = 1; i <= kProbes; ++i) {
    const Rat v = canonical(vlo + (vhi - vlo) * Rat(i) / Rat(kProbes + 1));
    if (sign_at(poly, v) < 0) {
      cert.verdict = Verdict::refuted;
      cert.witness = make_witness(sum, bound, variable_to_x(cert.variable, v, options.precision_bits),
                                  options.precision_bits);
      return finish();
    }
  }
  cert.verdict = Verdict::inconclusive;
  cert.note = "interior roots without a sign change at the probe points";
  return finish();
}

Certificate certify_positive(const FamilyId& family, const Rat& bound, const AngleInterval& interval,
                             const CertifyOptions& options) {
  Certificate cert = certify_sum(build(family), bound, interval, options);
  cert.family = family;
  return cert;
}

RecheckResult recheck(const TrigSum& sum, const Rat& bound, const AngleInterval& interval, int samples,
                      std::uint64_t seed, long precision_bits) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Real lo = angle_value(interval.lo, precision_bits);
  const Real width = angle_value(interval.hi, precision_bits) - lo;
  const Real b(bound, precision_bits);
  RecheckResult out{Real(precision_bits)};
  bool have = false;
  for (int i = 0; i < samples; ++i) {
    double u = unit(rng);
    if (u == 0.0) u = 0.5;
    const Real x = lo + width * Real(u, precision_bits);
    Real margin = eval_float(sum, x, precision_bits) - b;
    if (!have || margin < out.min_margin) {
      out.min_margin = std::move(margin);
      out.min_x = x.to_double();
      have = true;
    }
  }
  out.passed = out.min_margin > -pow(Real(10L, precision_bits), -20);
  return out;
}

}  // namespace trigineq
