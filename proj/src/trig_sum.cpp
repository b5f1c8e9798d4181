#include "trigineq/trig_sum.hpp"

#include <cmath>

#include "trigineq/chebyshev.hpp"

namespace trigineq {

TrigSum TrigSum::constant(const Rat& c) {
  TrigSum s;
  s.constant_ = c;
  return s;
}

TrigSum TrigSum::cos_half(unsigned j, const Rat& coeff) {
  TrigSum s;
  s.add(Wave::cos, j, coeff);
  return s;
}

TrigSum TrigSum::sin_half(unsigned j, const Rat& coeff) {
  TrigSum s;
  s.add(Wave::sin, j, coeff);
  return s;
}

void TrigSum::add(Wave kind, unsigned harmonic, const Rat& coeff) {
  if (coeff == 0) return;
  if (harmonic == 0) {
    if (kind == Wave::cos) constant_ += coeff;
    return;
  }
  auto [it, inserted] = terms_.try_emplace(Key{kind, harmonic}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat TrigSum::coeff(Wave kind, unsigned harmonic) const {
  if (harmonic == 0) return kind == Wave::cos ? constant_ : Rat(0);
  auto it = terms_.find(Key{kind, harmonic});
  return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<Term> TrigSum::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back(Term{c, key.second, key.first});
  return out;
}

unsigned TrigSum::max_harmonic() const {
  unsigned h = 0;
  for (const auto& [key, c] : terms_) h = std::max(h, key.second);
  return h;
}

bool TrigSum::integer_harmonics() const {
  for (const auto& [key, c] : terms_) {
    if (key.second % 2 != 0) return false;
  }
  return true;
}

bool TrigSum::has_cos_terms() const {
  if (constant_ != 0) return true;
  for (const auto& [key, c] : terms_) {
    if (key.first == Wave::cos) return true;
  }
  return false;
}

bool TrigSum::has_sin_terms() const {
  for (const auto& [key, c] : terms_) {
    if (key.first == Wave::sin) return true;
  }
  return false;
}

TrigSum& TrigSum::operator+=(const TrigSum& rhs) {
  constant_ += rhs.constant_;
  for (const auto& [key, c] : rhs.terms_) add(key.first, key.second, c);
  return *this;
}

TrigSum& TrigSum::operator-=(const TrigSum& rhs) {
  constant_ -= rhs.constant_;
  for (const auto& [key, c] : rhs.terms_) add(key.first, key.second, -c);
  return *this;
}

TrigSum& TrigSum::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    constant_ = 0;
    return *this;
  }
  constant_ *= s;
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

TrigSum operator*(const TrigSum& a, const TrigSum& b) {
  // Treat the constant as cos(0) and expand pairwise:
  //   cos p cos q = (cos(p-q) + cos(p+q))/2
  //   sin p sin q = (cos(p-q) - cos(p+q))/2
  //   sin p cos q = (sin(p+q) + sin(p-q))/2
  auto expand = [](const TrigSum& s) {
    std::vector<Term> all = s.terms();
    if (s.constant_ != 0) all.push_back(Term{s.constant_, 0, Wave::cos});
    return all;
  };
  const std::vector<Term> lhs = expand(a);
  const std::vector<Term> rhs = expand(b);
  TrigSum out;
  const Rat half(1, 2);
  for (const Term& p : lhs) {
    for (const Term& q : rhs) {
      const Rat w = p.coeff * q.coeff * half;
      const unsigned sum = p.harmonic + q.harmonic;
      const unsigned diff = p.harmonic > q.harmonic ? p.harmonic - q.harmonic : q.harmonic - p.harmonic;
      if (p.kind == Wave::cos && q.kind == Wave::cos) {
        out.add(Wave::cos, diff, w);
        out.add(Wave::cos, sum, w);
      } else if (p.kind == Wave::sin && q.kind == Wave::sin) {
        out.add(Wave::cos, diff, w);
        out.add(Wave::cos, sum, -w);
      } else {
        const Term& s = p.kind == Wave::sin ? p : q;
        const Term& c = p.kind == Wave::sin ? q : p;
        out.add(Wave::sin, sum, w);
        // sin(s - c) with sin odd
        if (s.harmonic >= c.harmonic) {
          out.add(Wave::sin, s.harmonic - c.harmonic, w);
        } else {
          out.add(Wave::sin, c.harmonic - s.harmonic, -w);
        }
      }
    }
  }
  return out;
}

TrigSum derivative(const TrigSum& s) {
  TrigSum out;
  for (const Term& t : s.terms()) {
    const Rat rate = make_rat(static_cast<long>(t.harmonic), 2);
    if (t.kind == Wave::cos) {
      out.add(Wave::sin, t.harmonic, -t.coeff * rate);
    } else {
      out.add(Wave::cos, t.harmonic, t.coeff * rate);
    }
  }
  return out;
}

TrigSum dilate(const TrigSum& s, unsigned factor) {
  TrigSum out = TrigSum::constant(s.constant_term());
  for (const Term& t : s.terms()) out.add(t.kind, t.harmonic * factor, t.coeff);
  return out;
}

TrigSum substitute_affine(const TrigSum& s, long turns, int direction) {
  // With phase = j * turns * pi / 2 (a multiple of pi/2):
  //   cos(phase + d*u) = cos(phase) cos u - d sin(phase) sin u
  //   sin(phase + d*u) = sin(phase) cos u + d cos(phase) sin u
  auto cos_sin_of_quarter_turns = [](long quarter) -> std::pair<int, int> {
    switch (((quarter % 4) + 4) % 4) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  };
  const int d = direction >= 0 ? 1 : -1;
  TrigSum out = TrigSum::constant(s.constant_term());
  for (const Term& t : s.terms()) {
    auto [cp, sp] = cos_sin_of_quarter_turns(static_cast<long>(t.harmonic) * turns);
    if (t.kind == Wave::cos) {
      out.add(Wave::cos, t.harmonic, t.coeff * cp);
      out.add(Wave::sin, t.harmonic, t.coeff * (-d * sp));
    } else {
      out.add(Wave::cos, t.harmonic, t.coeff * sp);
      out.add(Wave::sin, t.harmonic, t.coeff * (d * cp));
    }
  }
  return out;
}

Real eval_float(const TrigSum& s, const Real& x, long precision_bits) {
  const Real xw = Real(Rat(0), precision_bits) + x;
  const Real half_x = xw / 2;
  std::vector<Real> parts;
  parts.reserve(s.term_count() + 1);
  parts.emplace_back(s.constant_term(), precision_bits);
  for (const Term& t : s.terms()) {
    Real arg = half_x * static_cast<long>(t.harmonic);
    Real wave = t.kind == Wave::cos ? cos(arg) : sin(arg);
    parts.push_back(Real(t.coeff, precision_bits) * wave);
  }
  return compensated_sum(parts, precision_bits);
}

double eval_double(const TrigSum& s, double x) {
  double sum = s.constant_term().get_d();
  for (const Term& t : s.terms()) {
    const double arg = 0.5 * x * t.harmonic;
    sum += t.coeff.get_d() * (t.kind == Wave::cos ? std::cos(arg) : std::sin(arg));
  }
  return sum;
}

ExactValue eval_exact(const TrigSum& s, const Rat& c) {
  HalfAngleForm form = to_algebraic(s);
  return {poly_eval(form.cos_part, c), poly_eval(form.sin_part, c)};
}

ExactFullValue eval_exact_full(const TrigSum& s, const Rat& t) {
  FullAngleForm form = to_full_angle(s);
  return {poly_eval(form.cos_part, t), poly_eval(form.sin_part, t)};
}

}  // namespace trigineq
