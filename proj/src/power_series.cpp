#include "trigineq/power_series.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "trigineq/catalog.hpp"
#include "trigineq/chebyshev.hpp"

namespace trigineq {

PowerSeries series_lambda(long m, long N) {
  if (m < 0 || N < 0) throw std::invalid_argument("series_lambda needs m ≥ 0 and N ≥ 0");
  PowerSeries s;
  for (long n = 0; n <= N; ++n) s.coeffs.emplace_back(binom(static_cast<unsigned long>(n + m), static_cast<unsigned long>(m)));
  return s;
}

PowerSeries series_phi(const Rat& omega, long N) {
  if (abs(omega) > 1) throw std::invalid_argument("omega must satisfy |omega| ≤ 1");
  if (N < 0) throw std::invalid_argument("series_phi needs N ≥ 0");
  PowerSeries s;
  for (long n = 0; n <= N; ++n) s.coeffs.push_back(poly_eval(cheb_T(static_cast<std::size_t>(n)), omega));
  return s;
}

PowerSeries cauchy_product(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("cauchy_product: orders differ (" + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
  }
  PowerSeries c;
  c.coeffs.assign(a.coeffs.size(), Rat(0));
  for (std::size_t n = 0; n < a.coeffs.size(); ++n) {
    Rat sum(0);
    for (std::size_t k = 0; k <= n; ++k) sum += a.coeffs[k] * b.coeffs[n - k];
    c.coeffs[n] = sum;
  }
  return c;
}

PowerSeries to_series(const Poly& p, long N) {
  PowerSeries s;
  for (long k = 0; k <= N; ++k) s.coeffs.push_back(p.coeff(static_cast<std::size_t>(k)));
  return s;
}

void validate(const WParams& p) {
  if (p.m < 1) throw std::invalid_argument("m must be ≥ 1");
  if (abs(p.omega) > 1) throw std::invalid_argument("omega must satisfy |omega| ≤ 1");
}

PowerSeries w_coefficients(const WParams& p, long N) {
  validate(p);
  if (N < 1) throw std::invalid_argument("w_coefficients needs N ≥ 1");
  PowerSeries w = cauchy_product(series_lambda(p.m, N), series_phi(p.omega, N));
  w.coeffs[0] = Rat(0);
  for (long n = 1; n <= N; ++n) w.coeffs[n] -= p.m;
  return w;
}

PowerSeries w_numerator(const WParams& p, long N) {
  PowerSeries lp = w_coefficients(p, N);
  // Undo -m/(1-x) + (m-1): add m at every order, subtract m-1 at order 0.
  for (auto& c : lp.coeffs) c += p.m;
  lp.coeffs[0] -= p.m - 1;
  const Poly one_minus_x{Rat(1), Rat(-1)};
  const Poly den = pow(one_minus_x, static_cast<unsigned>(p.m + 1)) * Poly{Rat(1), -2 * p.omega, Rat(1)};
  return cauchy_product(lp, to_series(den, N));
}

MonotonicityResult check_nonnegative(const PowerSeries& s) {
  MonotonicityResult r;
  r.order = s.order();
  r.strictly_positive = true;
  for (long k = 0; k <= s.order(); ++k) {
    if (s.coeffs[k] < 0 && !r.first_negative) r.first_negative = k;
    if (k >= 1 && !(s.coeffs[k] > 0)) r.strictly_positive = false;
  }
  r.pass = !r.first_negative;
  r.scope = "coefficients 0.." + std::to_string(r.order) + " checked exactly; higher orders unverified";
  return r;
}

MonotonicityResult check_absolute_monotonicity(const WParams& p, long N) {
  if (N < 8) throw std::invalid_argument("N must be ≥ 8");
  return check_nonnegative(w_coefficients(p, N));
}

Real w_value(const WParams& p, const Real& x) {
  const long bits = x.precision();
  const Real one(1L, bits);
  const Real w(p.omega, bits);
  const Real q = one - x;
  return Real(p.m - 1, bits) - Real(p.m, bits) / q +
         (one - w * x) / (pow(q, p.m + 1) * (one - w * x * 2 + x * x));
}

SuperadditiveResult check_superadditive(const WParams& p, long samples, std::uint64_t seed, long bits) {
  validate(p);
  if (samples < 100) throw std::invalid_argument("samples must be ≥ 100");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Real one(1L, bits);
  const Real cap = one - pow(Real(10L, bits), -6);
  SuperadditiveResult r;
  r.samples = samples;
  bool have = false;

  auto sample = [&](const Real& x, const Real& y) {
    const Real s = x + y;
    const Real ws = w_value(p, s);
    const Real margin = (ws - w_value(p, x) - w_value(p, y)) / (one + abs(ws));
    if (!have || margin < r.worst_margin) {
      r.worst_margin = margin;
      r.worst_x = x.to_double();
      r.worst_y = y.to_double();
      have = true;
    }
  };

  const long boundary = samples / 2;
  const long interior = samples - boundary;
  // Interior: stratified in s = x + y over [0, cap), split uniformly.
  for (long i = 0; i < interior; ++i) {
    const Real s = cap * Real((static_cast<double>(i) + unit(rng)) / static_cast<double>(interior), bits);
    const Real v(unit(rng), bits);
    sample(s * v, s - s * v);
  }
  // Boundary: s = 1 - 10^-u with u stratified over (0, 6).
  for (long i = 0; i < boundary; ++i) {
    const double u = 6.0 * (static_cast<double>(i) + unit(rng)) / static_cast<double>(boundary);
    Real s = one - Real(std::pow(10.0, -u), bits);
    if (s > cap) s = cap;
    const Real v(unit(rng), bits);
    sample(s * v, s - s * v);
  }
  r.pass = !(r.worst_margin < -pow(Real(10L, bits), -40));
  return r;
}

double growth_exponent(const PowerSeries& s) {
  const long N = s.order();
  if (N < 4) return 0;
  const double hi = s.coeffs[N].get_d();
  const double lo = s.coeffs[N / 2].get_d();
  if (!(hi > 0) || !(lo > 0)) return 0;
  return std::log(hi / lo) / std::log(static_cast<double>(N) / static_cast<double>(N / 2));
}

std::string to_csv(const PowerSeries& s) {
  std::ostringstream out;
  out << "order,numerator,denominator\r\n";
  for (long k = 0; k <= s.order(); ++k) {
    out << k << ',' << s.coeffs[k].get_num().get_str() << ',' << s.coeffs[k].get_den().get_str() << "\r\n";
  }
  return out.str();
}

}  // namespace trigineq
