#include "trigineq/catalog.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace trigineq {

Int binom(unsigned long n, unsigned long k) {
  if (k > n) return Int(0);
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

namespace {

struct TagInfo {
  FamilyTag tag;
  std::string_view name;
  std::string_view formula;
  bool uses_m;
  long min_n;
};

constexpr std::array kTags{
    TagInfo{FamilyTag::A11, "A11", "sum_{k=1}^n C(n-k+m,m) sin(kx)", true, 1},
    TagInfo{FamilyTag::B12, "B12", "sum_{k=0}^n C(n-k+m,m) cos(kx)", true, 1},
    TagInfo{FamilyTag::T31, "T31", "C(n+m,m)/2 + sum_{k=1}^n C(n-k+m,m) cos(kx)", true, 1},
    TagInfo{FamilyTag::U14, "U14", "sum_{k=0}^n C(n-k+m,m) cos((k+1/2)x)", true, 0},
    TagInfo{FamilyTag::V15, "V15", "sum_{k=0}^n C(n-k+m,m) sin((k+1/2)x)", true, 0},
    TagInfo{FamilyTag::C16, "C16", "sum_{k=0, k even}^n C(n-k+m,m) cos((k+1/2)x)", true, 0},
    TagInfo{FamilyTag::D17, "D17", "sum_{k=0, k even}^n C(n-k+m,m) sin((k+1/2)x)", true, 0},
    TagInfo{FamilyTag::P10, "P10", "sum_{k=1}^n (n-k+1)(n-k+2)k sin(kx)", false, 1},
    TagInfo{FamilyTag::P_DIFF, "P_DIFF", "P10 - (2/9) sin(x)(1+2cos(x))^2", false, 1},
    TagInfo{FamilyTag::THETA, "THETA", "sum_{k=1}^n (n-k+1)(n-k+2)(1-cos(kx))", false, 1},
    TagInfo{FamilyTag::THETA_DIFF, "THETA_DIFF", "THETA - (2/27)(1-cos(x))(13+10cos(x)+4cos(x)^2)", false, 1},
    TagInfo{FamilyTag::S22, "S22", "(18n+24)sin(x) - (9n+27)sin((n+1)x) + 9n sin((n+2)x) + 2sin(4x) - sin(5x)",
            false, 1},
    TagInfo{FamilyTag::L_N, "L_N", "(18n+24)sin(x) - 18n sin(x/2) - 29.1", false, 1},
    TagInfo{FamilyTag::F24, "F24", "24sin(y) + 2sin(4y) - sin(5y), y = t/(n+2)", false, 1},
    TagInfo{FamilyTag::G25, "G25", "18n sin(y) - 27sin((n+1)y), y = t/(n+2)", false, 1},
    TagInfo{FamilyTag::H26, "H26", "9n sin((n+2)y) - 9n sin((n+1)y), y = t/(n+2)", false, 1},
    TagInfo{FamilyTag::E5, "E5", "sin(x)(2(n+1)sin(x) - sin(2(n+1)x)) + 4sin(x/2)^2 sin((n+1)x)^2", false, 0},
    TagInfo{FamilyTag::REMARK2_1, "REMARK2_1", "sum_{k=0}^n (n-k+1)cos((k+1/2)x)", false, 0},
    TagInfo{FamilyTag::REMARK2_2, "REMARK2_2", "sum_{k=0}^n (n-k+1)sin((k+1/2)x)", false, 0},
    TagInfo{FamilyTag::REMARK2_3, "REMARK2_3", "sum_{k=0}^{[n/2]} (n-2k+1)cos((2k+1/2)x)", false, 0},
    TagInfo{FamilyTag::REMARK2_4, "REMARK2_4", "sum_{k=0}^{[n/2]} (n-2k+1)sin((2k+1/2)x)", false, 0},
    TagInfo{FamilyTag::TAU_SIGNED, "TAU_SIGNED", "sum_{k=0}^n (-1)^tau_j(k) C(n-k+m,m) sin((2k+1)x)/(2k+1)", true,
            1},
};

const TagInfo& info(FamilyTag tag) {
  for (const auto& entry : kTags) {
    if (entry.tag == tag) return entry;
  }
  throw std::logic_error("unknown family tag");
}

// C(n-k+m, m) as a rational weight.
Rat weight(long n, long k, long m) {
  return Rat(binom(static_cast<unsigned long>(n - k + m), static_cast<unsigned long>(m)));
}

// sum over k of weight * wave((2k+1) x/2), optionally restricted to even k.
TrigSum half_integer_sum(long m, long n, Wave kind, bool even_only) {
  TrigSum s;
  for (long k = 0; k <= n; ++k) {
    if (even_only && k % 2 != 0) continue;
    s.add(kind, static_cast<unsigned>(2 * k + 1), weight(n, k, m));
  }
  return s;
}

Rat szego_weight(long n, long k) { return Rat((n - k + 1) * (n - k + 2)); }

TrigSum p_sum(long n) {
  TrigSum s;
  for (long k = 1; k <= n; ++k) s += TrigSum::sin_full(static_cast<unsigned>(k), szego_weight(n, k) * k);
  return s;
}

// Termwise integral of P10 from 0: a_k sin(kx) -> (a_k/k)(1 - cos(kx)).
TrigSum theta_sum(long n) {
  TrigSum s;
  for (const Term& t : p_sum(n).terms()) {
    const unsigned k = t.harmonic / 2;
    const Rat a = t.coeff / k;
    s += TrigSum::constant(a);
    s += TrigSum::cos_full(k, -a);
  }
  return s;
}

TrigSum s22_sum(long n) {
  const unsigned un = static_cast<unsigned>(n);
  TrigSum s = TrigSum::sin_full(1, Rat(18 * n + 24));
  s += TrigSum::sin_full(un + 1, Rat(-(9 * n + 27)));
  s += TrigSum::sin_full(un + 2, Rat(9 * n));
  s += TrigSum::sin_full(4, Rat(2));
  s += TrigSum::sin_full(5, Rat(-1));
  return s;
}

TrigSum e5_sum(long n) {
  const unsigned n1 = static_cast<unsigned>(n + 1);
  const TrigSum sin_x = TrigSum::sin_full(1);
  const TrigSum inner = TrigSum::sin_full(1, Rat(2 * (n + 1))) - TrigSum::sin_full(2 * n1);
  const TrigSum sin_half = TrigSum::sin_half(1);
  const TrigSum sin_n1 = TrigSum::sin_full(n1);
  return sin_x * inner + Rat(4) * (sin_half * sin_half) * (sin_n1 * sin_n1);
}

TrigSum tau_sum(long m, long n, int variant) {
  TrigSum s;
  for (long k = 0; k <= n; ++k) {
    const Rat c = weight(n, k, m) * tau_sign(variant, k) / Rat(2 * k + 1);
    s += TrigSum::sin_full(static_cast<unsigned>(2 * k + 1), canonical(c));
  }
  return s;
}

}  // namespace

std::string_view tag_name(FamilyTag tag) { return info(tag).name; }
std::string_view tag_formula(FamilyTag tag) { return info(tag).formula; }
bool uses_m(FamilyTag tag) { return info(tag).uses_m; }
long min_n(FamilyTag tag) { return info(tag).min_n; }

std::optional<FamilyTag> parse_family_tag(std::string_view name) {
  for (const auto& entry : kTags) {
    if (entry.name == name) return entry.tag;
  }
  return std::nullopt;
}

const std::vector<FamilyTag>& all_family_tags() {
  static const std::vector<FamilyTag> tags = [] {
    std::vector<FamilyTag> out;
    for (const auto& entry : kTags) out.push_back(entry.tag);
    return out;
  }();
  return tags;
}

int tau_sign(int variant, long k) {
  const long tau = variant == 1 ? k : k / 2;
  return tau % 2 == 0 ? 1 : -1;
}

void validate(const FamilyId& id) {
  if (uses_m(id.tag) && id.m < 1) throw std::invalid_argument("m must be ≥ 1");
  if (id.n < min_n(id.tag)) {
    throw std::invalid_argument("n must be ≥ " + std::to_string(min_n(id.tag)) + " for " +
                                std::string(tag_name(id.tag)));
  }
  if (id.n > 100000) throw std::invalid_argument("n must be ≤ 100000");
  if (id.tag == FamilyTag::TAU_SIGNED && id.variant != 1 && id.variant != 2) {
    throw std::invalid_argument("TAU_SIGNED variant must be 1 or 2");
  }
}

TrigSum sin_times_one_plus_two_cos_squared() {
  const TrigSum base = TrigSum::constant(Rat(1)) + TrigSum::cos_full(1, Rat(2));
  return TrigSum::sin_full(1) * (base * base);
}

TrigSum one_minus_cos_times_quadratic() {
  const TrigSum cos_x = TrigSum::cos_full(1);
  const TrigSum quadratic = TrigSum::constant(Rat(13)) + Rat(10) * cos_x + Rat(4) * (cos_x * cos_x);
  return (TrigSum::constant(Rat(1)) - cos_x) * quadratic;
}

Rat p_diff_coefficient(long k, long n) {
  Rat base = szego_weight(n, k) * k;
  if (k == 1 || k == 2) base -= make_rat(4, 9);
  if (k == 3) base -= make_rat(2, 9);
  return base;
}

TrigSum build(const FamilyId& id) {
  validate(id);
  const long m = id.m;
  const long n = id.n;
  const unsigned un = static_cast<unsigned>(n);
  switch (id.tag) {
    case FamilyTag::A11: {
      TrigSum s;
      for (long k = 1; k <= n; ++k) s += TrigSum::sin_full(static_cast<unsigned>(k), weight(n, k, m));
      return s;
    }
    case FamilyTag::B12:
    case FamilyTag::T31: {
      TrigSum s;
      for (long k = 0; k <= n; ++k) s += TrigSum::cos_full(static_cast<unsigned>(k), weight(n, k, m));
      if (id.tag == FamilyTag::T31) s.add_constant(-weight(n, 0, m) / 2);
      return s;
    }
    case FamilyTag::U14: return half_integer_sum(m, n, Wave::cos, false);
    case FamilyTag::V15: return half_integer_sum(m, n, Wave::sin, false);
    case FamilyTag::C16: return half_integer_sum(m, n, Wave::cos, true);
    case FamilyTag::D17: return half_integer_sum(m, n, Wave::sin, true);
    case FamilyTag::REMARK2_1: return half_integer_sum(1, n, Wave::cos, false);
    case FamilyTag::REMARK2_2: return half_integer_sum(1, n, Wave::sin, false);
    case FamilyTag::REMARK2_3: return half_integer_sum(1, n, Wave::cos, true);
    case FamilyTag::REMARK2_4: return half_integer_sum(1, n, Wave::sin, true);
    case FamilyTag::P10: return p_sum(n);
    case FamilyTag::P_DIFF: return p_sum(n) - make_rat(2, 9) * sin_times_one_plus_two_cos_squared();
    case FamilyTag::THETA: return theta_sum(n);
    case FamilyTag::THETA_DIFF: return theta_sum(n) - make_rat(2, 27) * one_minus_cos_times_quadratic();
    case FamilyTag::S22: return s22_sum(n);
    case FamilyTag::L_N: {
      TrigSum s = TrigSum::sin_full(1, Rat(18 * n + 24));
      s += TrigSum::sin_half(1, Rat(-18 * n));
      s += TrigSum::constant(parse_rat("-29.1"));
      return s;
    }
    case FamilyTag::F24:
      return TrigSum::sin_full(1, Rat(24)) + TrigSum::sin_full(4, Rat(2)) + TrigSum::sin_full(5, Rat(-1));
    case FamilyTag::G25: return TrigSum::sin_full(1, Rat(18 * n)) + TrigSum::sin_full(un + 1, Rat(-27));
    case FamilyTag::H26: return TrigSum::sin_full(un + 2, Rat(9 * n)) + TrigSum::sin_full(un + 1, Rat(-9 * n));
    case FamilyTag::E5: return e5_sum(n);
    case FamilyTag::TAU_SIGNED: return tau_sum(m, n, id.variant);
  }
  throw std::logic_error("unhandled family tag");
}

}  // namespace trigineq
