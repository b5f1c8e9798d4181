#include "trigineq/lemmas.hpp"

#include <functional>
#include <string>

#include "trigineq/catalog.hpp"
#include "trigineq/certificate.hpp"
#include "trigineq/chebyshev.hpp"
#include "trigineq/sturm.hpp"

namespace trigineq {

namespace {

using RealFn = std::function<Real(const Real&)>;

std::string str(const Real& v) { return v.to_string(20); }

Real num(const char* decimal, long bits) { return Real(parse_rat(decimal), bits); }

Real min_on(const RealFn& f, const Real& lo, const Real& hi, long points) {
  return grid_minimum(f, lo, hi, points, 3).minimum;
}

void regime(LemmaReport& r, long n) {
  if (n < 21) r.warning = "n = " + std::to_string(n) + " is below the n >= 21 regime of the lemma";
}

TrigSum S(long n) { return build({FamilyTag::S22, 1, n}); }
TrigSum L(long n) { return build({FamilyTag::L_N, 1, n}); }

// sin(a) as a TrigSum term with harmonic a in units of x.
TrigSum sin_x(unsigned k, const Rat& c) { return TrigSum::sin_full(k, c); }

Real L_at(long n, const Real& x, long bits) { return eval_float(L(n), x, bits); }

}  // namespace

bool matches_truncated(const Real& v, std::string_view digits) {
  const auto dot = digits.find('.');
  const long decimals = dot == std::string_view::npos ? 0 : static_cast<long>(digits.size() - dot - 1);
  Real scaled = abs(v) * pow(Real(10L, v.precision()), decimals);
  Int floor_value;
  mpfr_get_z(floor_value.get_mpz_t(), scaled.get(), MPFR_RNDD);
  Rat expected = parse_rat(digits);
  Int ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
  expected *= Rat(ten_pow);
  const int want = sign(expected);
  if (want != 0 && want != v.sign()) return false;
  return Rat(floor_value) == abs(expected);
}

Real lemma7_H(const Real& r, const Real& s) { return sin(r / 23) * 14 - sin(r * 22 / 23) - s / 3; }

LemmaReport lemma3(long n, const LemmaOptions& o) {
  LemmaReport r{"L3", n, {}, {}};
  regime(r, n);
  const long bits = o.precision_bits;

  // v(t) = -16t^4 + 16t^3 + 12t^2 - 8t + 1.1
  const Poly v{parse_rat("1.1"), Rat(-8), Rat(12), Rat(16), Rat(-16)};
  const SturmChain chain = sturm_chain(v);
  const std::size_t roots = count_roots(chain, make_rat(-1, 2), Rat(1), true, true);
  auto& k = r.add("v_no_root", "v has no zero on [-1/2, 1]", true, roots == 0);
  k.details.emplace_back("closed_root_count", std::to_string(roots));
  auto& v1 = r.add("v_at_1", "v(1) = 5.1", true, poly_eval(v, Rat(1)) == parse_rat("5.1") && sign_at(v, Rat(1)) > 0);
  v1.details.emplace_back("v(1)", to_string(poly_eval(v, Rat(1))));

  const TrigSum lhs = sin_x(4, Rat(2)) + sin_x(5, Rat(-1)) + sin_x(1, parse_rat("2.1"));
  const FullAngleForm form = to_full_angle(lhs);
  r.add("v_identity", "2 sin 4x - sin 5x + 2.1 sin x = sin x v(cos x)", true,
        form.cos_part.is_zero() && form.sin_part == v);

  const Rat nn(n);
  const TrigSum rewrite = sin_x(1, Rat(18 * n + 24)) +
                          TrigSum::sin_half(1, Rat(18 * n)) * TrigSum::cos_half(static_cast<unsigned>(2 * n + 3)) +
                          sin_x(static_cast<unsigned>(n + 1), Rat(-27)) + sin_x(4, Rat(2)) + sin_x(5, Rat(-1));
  r.add("S_rewrite", "S_n = (18n+24) sin x + 18n sin(x/2) cos((n+3/2)x) - 27 sin((n+1)x) + 2 sin 4x - sin 5x", true,
        rewrite == S(n));

  const TrigSum gap = S(n) - L(n);
  const Real m = min_on([&](const Real& x) { return eval_float(gap, x, bits); }, Real(0L, bits),
                        pi(bits) * 2 / 3, o.grid_points);
  auto& g = r.add("S_above_L", "S_n(x) > L_n(x) on (0, 2pi/3)", false, m.sign() > 0);
  g.details.emplace_back("grid_minimum", str(m));
  return r;
}

LemmaReport lemma4(long n, const LemmaOptions& o) {
  LemmaReport r{"L4", n, {}, {}};
  regime(r, n);
  const long bits = o.precision_bits;

  const TrigSum minus_second = -derivative(derivative(L(n)));
  const TrigSum closed = TrigSum::sin_half(1, Rat(18 * n)) *
                             (TrigSum::cos_half(1, Rat(2)) - TrigSum::constant(make_rat(1, 4))) +
                         sin_x(1, Rat(24));
  r.add("second_derivative", "-L_n''(x) = 18n sin(x/2)(2cos(x/2) - 1/4) + 24 sin x", true, minus_second == closed);

  const TrigSum lower = TrigSum::sin_half(1, make_rat(27 * n, 2)) + sin_x(1, Rat(24));
  const Certificate above = certify_sum(minus_second - lower, Rat(0), parse_interval("0..2pi/3"));
  auto& a = r.add("lower_bound", "-L_n'' >= (27/2) n sin(x/2) + 24 sin x on (0, 2pi/3)", true,
                  above.verdict == Verdict::proved);
  a.details.emplace_back("verdict", std::string(to_string(above.verdict)));

  const Certificate concave = certify_sum(minus_second, Rat(0), parse_interval("0..2pi/3"));
  auto& c = r.add("concave", "-L_n'' > 0 on (0, 2pi/3)", true, concave.verdict == Verdict::proved);
  c.details.emplace_back("verdict", std::string(to_string(concave.verdict)));

  const Real m = min_on([&](const Real& x) { return eval_float(minus_second, x, bits); }, Real(0L, bits),
                        pi(bits) * 2 / 3, o.grid_points);
  auto& g = r.add("concave_grid", "-L_n'' > 0 on a grid of (0, 2pi/3)", false, m.sign() > 0);
  g.details.emplace_back("grid_minimum", str(m));
  return r;
}

LemmaReport lemma5(long n, const LemmaOptions& o) {
  LemmaReport r{"L5", n, {}, {}};
  regime(r, n);
  const long bits = std::max(o.precision_bits, kLemmaBits);
  const Real PI = pi(bits);
  const Real eleven_tenths_pi = num("1.1", bits) * PI;

  const Real left = L_at(n, eleven_tenths_pi / n, bits);
  auto& l1 = r.add("L_at_1.1pi/n", "L_n(1.1pi/n) > 0", false, n < 2 || left.sign() > 0);
  l1.details.emplace_back("value", str(left));

  const Real right = L_at(n, PI * 2 / 3 - Real(1L, bits) / n, bits);
  auto& l2 = r.add("L_at_2pi/3-1/n", "L_n(2pi/3 - 1/n) > 0", false, n < 21 || right.sign() > 0);
  l2.details.emplace_back("value", str(right));

  const Real l2v = L_at(2, eleven_tenths_pi / 2, bits);
  auto& cp = r.add("checkpoint_L2", "L_2(1.1pi/2) = 2.78...", false, matches_truncated(l2v, "2.78"));
  cp.details.emplace_back("L_2(1.1pi/2)", str(l2v));

  // Y(n) = a n^3 + b n^2 - c n - d
  const Real pi3 = pow(PI, 3);
  const Real a = num("9.9", bits) * PI - num("29.1", bits);
  const Real b = num("26.4", bits) * PI;
  const Real c = num("3.993", bits) * pi3;
  const Real d = num("5.324", bits) * pi3;
  auto& coeffs = r.add("Y_coefficients", "a = 2.00..., b = 82.93..., c = 123.80..., d = 165.07...", false,
                       matches_truncated(a, "2.00") && matches_truncated(b, "82.93") &&
                           matches_truncated(c, "123.80") && matches_truncated(d, "165.07"));
  coeffs.details = {{"a", str(a)}, {"b", str(b)}, {"c", str(c)}, {"d", str(d)}};

  if (n >= 3) {
    const Real nr(n, bits);
    const Real y = a * pow(nr, 3) + b * pow(nr, 2) - c * nr - d;
    const Real u = eleven_tenths_pi / n;
    const Real taylor = Real(18 * n + 24, bits) * (u - pow(u, 3) / 6) - Real(18 * n, bits) * (eleven_tenths_pi / (2 * n)) -
                        num("29.1", bits);
    const Real tol = pow(Real(10L, bits), -30);
    auto& yc = r.add("Y_minorant", "L_n(1.1pi/n) >= Y(n)/n^3", false,
                     abs(taylor - y / pow(nr, 3)) < tol && !(left < taylor));
    yc.details.emplace_back("Y(n)/n^3", str(y / pow(nr, 3)));
  }

  // Rational enclosure of pi, then Y(n) >= a_lo n^3 + b_lo n^2 - c_hi n - d_hi.
  const Rat pi_lo = make_rat(314159265358979L, 100000000000000L);
  const Rat pi_hi = canonical(pi_lo + make_rat(1, 100000000000000L));
  const bool enclosed = Real(pi_lo, bits) < PI && PI < Real(pi_hi, bits);
  const Rat a_lo = canonical(parse_rat("9.9") * pi_lo - parse_rat("29.1"));
  const Rat b_lo = canonical(parse_rat("26.4") * pi_lo);
  const Rat c_hi = canonical(parse_rat("3.993") * pi_hi * pi_hi * pi_hi);
  const Rat d_hi = canonical(parse_rat("5.324") * pi_hi * pi_hi * pi_hi);
  const Poly cubic{-d_hi, -c_hi, b_lo, a_lo};
  const SturmChain chain = sturm_chain(cubic);
  const std::size_t window = count_roots(chain, Rat(3), Rat(1000000), true, true);
  const std::size_t above = count_roots_above(chain, Rat(3));
  auto& yp = r.add("Y_positive", "Y > 0 on [3, infinity)", true,
                   enclosed && window == 0 && above == 0 && sign_at(cubic, Rat(3)) > 0 && a_lo > 0);
  yp.details = {{"pi_enclosure", to_string(pi_lo) + " .. " + to_string(pi_hi)},
                {"roots_on_[3,1e6]", std::to_string(window)},
                {"roots_above_3", std::to_string(above)},
                {"leading_lower_bound", to_string(a_lo)},
                {"note", "certified on [3, 1e6] and beyond by Sturm on a rational minorant"}};

  const Real sqrt3 = sqrt(Real(3L, bits));
  const Real alpha = sin(Real(1L, bits) / 21) * 189 + sqrt3 * 12 - num("29.1", bits);
  const Real margin = alpha - sqrt3 * 9 / 42;
  auto& al = r.add("alpha_margin", "alpha - 9 sqrt(3)/42 = 0.31...", false, matches_truncated(margin, "0.31"));
  al.details = {{"alpha", str(alpha)}, {"margin", str(margin)}};

  if (n >= 21) {
    const Real nr(n, bits);
    const Real inv = Real(1L, bits) / n;
    const Real chain1 = sin(inv) * 9 * nr - sqrt3 * 9 * nr * (Real(1L, bits) - cos(inv)) + sqrt3 * 12 - num("29.1", bits);
    const Real chain2 = alpha - sqrt3 * 9 * nr * (Real(1L, bits) - cos(inv));
    auto& ch = r.add("margin_chain", "L_n(2pi/3 - 1/n) >= alpha - 9 sqrt(3) n (1 - cos(1/n)) >= margin", false,
                     !(right < chain1) && !(chain1 < chain2) && !(chain2 < margin) && margin.sign() > 0);
    ch.details.emplace_back("lower", str(chain2));
  }
  return r;
}

LemmaReport lemma6(long n, const LemmaOptions& o) {
  LemmaReport r{"L6", n, {}, {}};
  regime(r, n);
  const long bits = o.precision_bits;

  const Poly np{Rat(0), Rat(1)};
  auto lin = [](long c0, long c1) { return Poly{Rat(c0), Rat(c1)}; };
  const Poly expanded = Poly::constant(Rat(-24)) - Rat(18) * np + parse_rat("0.86") * lin(27, 9) * lin(1, 1) * lin(1, 1) -
                        parse_rat("0.45") * np * lin(2, 1) * lin(2, 1) - Poly::constant(Rat(57));
  const Poly cubic{parse_rat("-57.78"), parse_rat("34.38"), parse_rat("36.9"), parse_rat("7.29")};
  r.add("cubic_expansion", "-(18n+24) + 0.86(9n+27)(n+1)^2 - 0.45n(n+2)^2 - 57 = 7.29n^3+36.9n^2+34.38n-57.78",
        true, expanded == cubic);
  auto& cv = r.add("cubic_positive", "7.29n^3 + 36.9n^2 + 34.38n - 57.78 > 0", true,
                   sign_at(cubic, Rat(n)) > 0);
  cv.details.emplace_back("value", to_string(poly_eval(cubic, Rat(n))));
  r.add("cubic_no_root_from_21", "no root on [21, infinity)", true,
        count_roots_above(sturm_chain(cubic), Rat(21)) == 0 && sign_at(cubic, Rat(21)) > 0);

  const Real PI = pi(bits);
  const Real s1 = sin(PI * 2 / 3 - Real(22L, bits) / 21);
  const Real s2 = sin(PI * 4 / 3 - Real(23L, bits) / 21);
  auto& sc = r.add("sine_constants", "sin(2pi/3 - 22/21) = 0.865... >= 0.86, sin(4pi/3 - 23/21) = 0.048... <= 0.05",
                   false, matches_truncated(s1, "0.865") && matches_truncated(s2, "0.048") &&
                              !(s1 < num("0.86", bits)) && !(s2 > num("0.05", bits)));
  sc.details = {{"sin(2pi/3-22/21)", str(s1)}, {"sin(4pi/3-23/21)", str(s2)}};

  const TrigSum second = derivative(derivative(S(n)));
  const long n1 = n + 1, n2 = n + 2;
  const TrigSum closed = sin_x(1, Rat(-(18 * n + 24))) + sin_x(static_cast<unsigned>(n1), Rat((9 * n + 27) * n1 * n1)) +
                         sin_x(static_cast<unsigned>(n2), Rat(-9 * n * n2 * n2)) + sin_x(4, Rat(-32)) +
                         sin_x(5, Rat(25));
  r.add("S_second_derivative", "S_n'' closed form", true, second == closed);

  if (n % 3 == 0) {
    const Real m = min_on([&](const Real& x) { return eval_float(second, x, bits); },
                          PI * 2 / 3 - Real(1L, bits) / n, PI * 2 / 3, o.grid_points);
    auto& g = r.add("S_second_positive", "S_n'' > 0 on (2pi/3 - 1/n, 2pi/3)", false, m.sign() > 0);
    g.details.emplace_back("grid_minimum", str(m));
  } else {
    if (!r.warning.empty()) r.warning += "; ";
    r.warning += "convexity part applies to n = 3m only";
  }
  return r;
}

LemmaReport lemma7(long n, const LemmaOptions& o) {
  LemmaReport r{"L7", n, {}, {}};
  regime(r, n);
  const long bits = o.precision_bits;
  const Real PI = pi(bits);
  const Real lo = num("2.5", bits);
  const Real hi = num("1.21", bits) * PI;
  const long n2 = n + 2;

  const TrigSum f = build({FamilyTag::F24, 1, n});
  const TrigSum g = build({FamilyTag::G25, 1, n});
  const TrigSum h = build({FamilyTag::H26, 1, n});
  auto at_t = [&](const TrigSum& s, const Real& t) { return eval_float(s, t / n2, bits); };

  const Real fmin = min_on([&](const Real& t) { return at_t(f, t) - num("26.3", bits) * t / n2; }, lo, hi, o.grid_points);
  auto& fc = r.add("f_lower", "f_n(t) >= 26.3 t/(n+2) on (2.5, 1.21pi)", false, fmin.sign() >= 0);
  fc.details.emplace_back("grid_minimum", str(fmin));
  const Real gmin = min_on([&](const Real& t) { return at_t(g, t) - t * 9; }, lo, hi, o.grid_points);
  auto& gc = r.add("g_lower", "g_n(t) > 9t on (2.5, 1.21pi)", false, gmin.sign() > 0);
  gc.details.emplace_back("grid_minimum", str(gmin));
  const Real hmin = min_on([&](const Real& t) { return at_t(h, t) + t * 9; }, lo, hi, o.grid_points);
  auto& hc = r.add("h_lower", "h_n(t) >= -9t on (2.5, 1.21pi)", false, hmin.sign() >= 0);
  hc.details.emplace_back("grid_minimum", str(hmin));

  const TrigSum g21 = build({FamilyTag::G25, 1, 21});
  const Real mono = min_on([&](const Real& t) { return at_t(g, t) - eval_float(g21, t / 23, bits); }, lo, hi,
                           o.grid_points);
  auto& mc = r.add("g_monotone", "g_n(t) >= g_21(t)", false, n < 21 || mono.sign() >= 0);
  mc.details.emplace_back("grid_minimum", str(mono));

  r.add("G_definition", "(g_21(t) - 9t)/27 = 14 sin(t/23) - sin(22t/23) - t/3", true,
        g21.coeff(Wave::sin, 2) == Rat(14 * 27) && g21.coeff(Wave::sin, 44) == Rat(-27) && g21.term_count() == 2);

  bool windows = true;
  Real worst(bits);
  for (long k = 0; k < 40; ++k) {
    const Real v = lemma7_H(lo + Real(make_rat(k, 100), bits), lo + Real(make_rat(k + 1, 100), bits));
    if (v.sign() <= 0) windows = false;
    if (k == 0 || v < worst) worst = v;
  }
  auto& w = r.add("H_windows", "H(2.5 + k/100, 2.5 + (k+1)/100) > 0 for k = 0..39", false, windows);
  w.details = {{"windows", "40"}, {"minimum", str(worst)}};

  const Real h29 = lemma7_H(num("2.9", bits), hi);
  auto& hh = r.add("checkpoint_H", "H(2.9, 1.21pi) = 0.13...", false, matches_truncated(h29, "0.13"));
  hh.details.emplace_back("H(2.9,1.21pi)", str(h29));

  const Real Gmin = min_on([&](const Real& t) { return sin(t / 23) * 14 - sin(t * 22 / 23) - t / 3; }, lo, hi,
                           o.grid_points);
  auto& gg = r.add("G_positive", "G(t) > 0 on (2.5, 1.21pi)", false, Gmin.sign() > 0);
  gg.details.emplace_back("grid_minimum", str(Gmin));

  const Real ratio = num("1.21", bits) * PI / 23;
  const Real constant = Real(27L, bits) - Real(make_rat(76, 3), bits) * ratio * ratio;
  auto& cc = r.add("constant_26.3", "27 - (76/3)(1.21pi/23)^2 >= 26.3", false, !(constant < num("26.3", bits)));
  cc.details.emplace_back("value", str(constant));

  const Poly y{Rat(0), Rat(1)};
  const Poly y3 = y * y * y;
  const Poly taylor = Rat(24) * (y - make_rat(1, 6) * y3) + Rat(2) * (Rat(4) * y - make_rat(64, 6) * y3) - Rat(5) * y;
  r.add("taylor_identity", "24(y - y^3/6) + 2(4y - (4y)^3/6) - 5y = y(27 - (76/3) y^2)", true,
        taylor == y * (Poly::constant(Rat(27)) - make_rat(76, 3) * y * y));

  const TrigSum h_closed =
      TrigSum::sin_half(1, Rat(18 * n)) * TrigSum::cos_half(static_cast<unsigned>(2 * n + 3));
  r.add("h_product_form", "9n sin t - 9n sin((n+1)t/(n+2)) = 18n sin(t/(2n+4)) cos((2n+3)t/(2n+4))", true,
        h == h_closed);
  return r;
}

std::vector<LemmaReport> run_lemma_checks(long n, const LemmaOptions& options) {
  return {lemma3(n, options), lemma4(n, options), lemma5(n, options), lemma6(n, options), lemma7(n, options)};
}

LemmaReport theorem5_case_partition(long n, const LemmaOptions& o) {
  LemmaReport r{"TH5cases", n, {}, {}};
  regime(r, n);
  const long bits = o.precision_bits;
  const Real PI = pi(bits);
  const TrigSum s = S(n);
  const Real x0 = Real(make_rat(5, 2 * (n + 2)), bits);
  auto s_min = [&](const Real& a, const Real& b) {
    return min_on([&](const Real& x) { return eval_float(s, x, bits); }, a, b, o.grid_points);
  };

  // (0, 2.5/(n+2)]: all a_{k,n} > 0 and kx <= 2.5n/(n+2) < pi.
  const TrigSum pd = build({FamilyTag::P_DIFF, 1, n});
  bool coeffs = true;
  for (long k = 1; k <= n; ++k) {
    const Rat a = p_diff_coefficient(k, n);
    if (!(a > 0) || pd.coeff(Wave::sin, static_cast<unsigned>(2 * k)) != a) coeffs = false;
  }
  auto& small = r.add("small_x", "a_{k,n} > 0 and 0 < kx < pi on (0, 2.5/(n+2)]", true,
                      coeffs && make_rat(5 * n, 2 * (n + 2)) < Rat(3) && pd.term_count() == static_cast<std::size_t>(n));
  small.details.emplace_back("a_1", to_string(p_diff_coefficient(1, n)));

  const TrigSum scaled = build({FamilyTag::F24, 1, n}) + build({FamilyTag::G25, 1, n}) + build({FamilyTag::H26, 1, n});
  const LemmaReport l7 = lemma7(n, o);
  const Real case1_hi = num("1.1", bits) * PI / n;
  // x < 1.1pi/n gives t = (n+2)x < 1.1pi(n+2)/n <= 1.21pi for n >= 21.
  const bool t_range = !(case1_hi * (n + 2) > num("1.21", bits) * PI);
  auto& c1 = r.add("case1", "S_n(t/(n+2)) = f_n(t) + g_n(t) + h_n(t) with the L7 bounds", true,
                   scaled == s && l7.passed() && t_range);
  if (!t_range) c1.details.emplace_back("regime", "(n+2)1.1pi/n exceeds 1.21pi");
  const Real m1 = s_min(x0, case1_hi);
  auto& g1 = r.add("case1_grid", "S_n > 0 on (2.5/(n+2), 1.1pi/n)", false, m1.sign() > 0);
  g1.details.emplace_back("grid_minimum", str(m1));

  const LemmaReport l3 = lemma3(n, o), l4 = lemma4(n, o), l5 = lemma5(n, o);
  const Real case2_hi = PI * 2 / 3 - Real(1L, bits) / n;
  const Real end_lo = L_at(n, case1_hi, bits);
  const Real end_hi = L_at(n, case2_hi, bits);
  auto& c2 = r.add("case2", "S_n > L_n >= min(L_n(1.1pi/n), L_n(2pi/3 - 1/n)) > 0", false,
                   l3.passed() && l4.passed() && l5.passed() && end_lo.sign() > 0 && end_hi.sign() > 0);
  c2.details = {{"L_n(1.1pi/n)", str(end_lo)}, {"L_n(2pi/3-1/n)", str(end_hi)}};
  const Real m2 = s_min(case1_hi, case2_hi);
  auto& g2 = r.add("case2_grid", "S_n > 0 on [1.1pi/n, 2pi/3 - 1/n]", false, m2.sign() > 0);
  g2.details.emplace_back("grid_minimum", str(m2));

  const Real sqrt3 = sqrt(Real(3L, bits));
  const Real nr(n, bits);
  switch (n % 3) {
    case 1: {
      const Real s0 = sin(PI * 4 / 3 - Real(22L, bits) / 21);
      const Real bound = (sqrt3 - num("1.0005", bits)) * 9 * nr + sqrt3 * 12 - num("3.0135", bits);
      auto& c = r.add("case3.1", "sin(4pi/3 - 22/21) = 0.0004... and 9(sqrt3 - 1.0005)n + 12 sqrt3 - 3.0135 > 0",
                      false, matches_truncated(s0, "0.0004") && bound.sign() > 0);
      c.details = {{"sin(4pi/3-22/21)", str(s0)}, {"bound", str(bound)}};
      break;
    }
    case 2: {
      const Real bound = (nr * 9 + 12) * sqrt3 - 3;
      auto& c = r.add("case3.2", "(9n+12) sqrt3 - 3 > 0", false, bound.sign() > 0);
      c.details.emplace_back("bound", str(bound));
      break;
    }
    default: {
      // S_n is a sine sum and S_n' a cosine sum; both vanish exactly at t = cos(2pi/3) = -1/2.
      const Rat t0 = make_rat(-1, 2);
      const ExactFullValue sv = eval_exact_full(s, t0);
      const ExactFullValue dv = eval_exact_full(derivative(s), t0);
      const Real x = PI * 2 / 3;
      const Real tol = pow(Real(10L, bits), -20);
      const Real fs = eval_float(s, x, bits), fd = eval_float(derivative(s), x, bits);
      const LemmaReport l6 = lemma6(n, o);
      auto& c = r.add("case3.3", "S_n(2pi/3) = S_n'(2pi/3) = 0 and L6", true,
                      sv.cos_value == 0 && sv.sin_x_coeff == 0 && dv.cos_value == 0 && dv.sin_x_coeff == 0 &&
                          abs(fs) < tol && abs(fd) < tol && l6.passed());
      c.details = {{"S_n(2pi/3)", str(fs)}, {"S_n'(2pi/3)", str(fd)}};
      break;
    }
  }
  const Real m3 = s_min(case2_hi, PI * 2 / 3);
  auto& g3 = r.add("case3_grid", "S_n > 0 on (2pi/3 - 1/n, 2pi/3)", false, m3.sign() > 0);
  g3.details.emplace_back("grid_minimum", str(m3));
  const Real m0 = s_min(Real(0L, bits), x0);
  auto& g0 = r.add("small_x_grid", "S_n > 0 on (0, 2.5/(n+2))", false, m0.sign() > 0);
  g0.details.emplace_back("grid_minimum", str(m0));
  return r;
}

}  // namespace trigineq
