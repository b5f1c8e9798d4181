#include "trigineq/chebyshev.hpp"

#include <stdexcept>

namespace trigineq {

namespace {

constexpr std::size_t kSharedCapacity = 256;

const Poly kTwoT{Rat(0), Rat(2)};

}  // namespace

ChebTable::ChebTable(std::size_t capacity) {
  t_.reserve(capacity + 1);
  u_.reserve(capacity + 1);
  t_.push_back(Poly{Rat(1)});
  u_.push_back(Poly{Rat(1)});
  if (capacity >= 1) {
    t_.push_back(Poly{Rat(0), Rat(1)});
    u_.push_back(kTwoT);
  }
  for (std::size_t k = 1; k < capacity; ++k) {
    t_.push_back(kTwoT * t_[k] - t_[k - 1]);
    u_.push_back(kTwoT * u_[k] - u_[k - 1]);
  }
}

const ChebTable& shared_cheb_table() {
  static const ChebTable table(kSharedCapacity);
  return table;
}

Poly cheb_T(std::size_t k) {
  if (k <= kSharedCapacity) return shared_cheb_table().T(k);
  return ChebTable(k).T(k);
}

Poly cheb_U(std::size_t k) {
  if (k <= kSharedCapacity) return shared_cheb_table().U(k);
  return ChebTable(k).U(k);
}

HalfAngleForm operator*(const HalfAngleForm& a, const HalfAngleForm& b) {
  static const Poly one_minus_c2{Rat(1), Rat(0), Rat(-1)};
  return {a.cos_part * b.cos_part + one_minus_c2 * a.sin_part * b.sin_part,
          a.cos_part * b.sin_part + a.sin_part * b.cos_part};
}

namespace {

// Adds coeff * basis into acc without materialising the scaled polynomial.
void accumulate(std::vector<Rat>& acc, const Poly& basis, const Rat& coeff) {
  if (acc.size() < basis.size()) acc.resize(basis.size(), Rat(0));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis.coeffs()[i] != 0) acc[i] += coeff * basis.coeffs()[i];
  }
}

template <class Form>
Form convert(const TrigSum& s, bool full_angle) {
  const unsigned divisor = full_angle ? 2 : 1;
  const std::size_t needed = s.max_harmonic() / divisor + 1;
  const ChebTable* table = &shared_cheb_table();
  std::optional<ChebTable> local;
  if (needed > table->capacity()) {
    local.emplace(needed);
    table = &*local;
  }
  std::vector<Rat> cos_acc{s.constant_term()};
  std::vector<Rat> sin_acc;
  for (const Term& t : s.terms()) {
    const unsigned k = t.harmonic / divisor;
    if (t.kind == Wave::cos) {
      accumulate(cos_acc, table->T(k), t.coeff);
    } else {
      accumulate(sin_acc, table->U(k - 1), t.coeff);
    }
  }
  return Form{Poly(std::move(cos_acc)), Poly(std::move(sin_acc))};
}

}  // namespace

HalfAngleForm to_algebraic(const TrigSum& s) { return convert<HalfAngleForm>(s, false); }

FullAngleForm to_full_angle(const TrigSum& s) {
  if (!s.integer_harmonics()) throw std::domain_error("sum has half-integer harmonics; use the half-angle form");
  return convert<FullAngleForm>(s, true);
}

FullAngleForm half_to_full(const HalfAngleForm& form) {
  // c^2 = (1 + t)/2
  const Poly c2_of_t{make_rat(1, 2), make_rat(1, 2)};
  Poly cos_t = compose(even_part_in_square(form.cos_part), c2_of_t);
  // sin_part is odd: sin_part(c) = c * r(c^2), and sin(u) c = sin(x)/2.
  Poly shifted;
  if (!form.sin_part.is_zero()) {
    if (form.sin_part.coeff(0) != 0) throw std::domain_error("sine part is not odd");
    shifted = Poly(std::vector<Rat>(form.sin_part.coeffs().begin() + 1, form.sin_part.coeffs().end()));
  }
  Poly sin_t = compose(even_part_in_square(shifted), c2_of_t) * make_rat(1, 2);
  return {std::move(cos_t), std::move(sin_t)};
}

Angle parse_angle(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty angle");
  auto pos = s.find("pi");
  if (pos == std::string::npos) {
    Rat value = parse_rat(s);
    if (value != 0) throw std::invalid_argument("angle '" + text + "' must be written as a multiple of pi");
    return Angle{Rat(0)};
  }
  std::string head = s.substr(0, pos);
  std::string tail = s.substr(pos + 2);
  Rat numerator;
  if (head.empty() || head == "+") {
    numerator = 1;
  } else if (head == "-") {
    numerator = -1;
  } else {
    if (head.back() == '*') head.pop_back();
    numerator = parse_rat(head);
  }
  Rat denominator = 1;
  if (!tail.empty()) {
    if (tail.front() != '/') throw std::invalid_argument("malformed angle '" + text + "'");
    denominator = parse_rat(tail.substr(1));
    if (denominator <= 0) throw std::invalid_argument("malformed angle '" + text + "'");
  }
  return Angle{canonical(numerator / denominator)};
}

std::string to_string(const Angle& a) {
  const Rat& q = a.pi_multiple;
  if (q == 0) return "0";
  std::string out;
  if (q.get_num() == -1) {
    out = "-pi";
  } else if (q.get_num() == 1) {
    out = "pi";
  } else {
    out = q.get_num().get_str() + "pi";
  }
  if (q.get_den() != 1) out += "/" + q.get_den().get_str();
  return out;
}

std::optional<Rat> rational_cos(const Angle& a) {
  // Reduce q mod 2 and compare against the angles with rational cosine.
  Rat q = a.pi_multiple;
  Int floor_half;
  Rat half_q = q / 2;
  mpz_fdiv_q(floor_half.get_mpz_t(), half_q.get_num_mpz_t(), half_q.get_den_mpz_t());
  Rat r = canonical(q - 2 * Rat(floor_half));
  if (r == 0) return Rat(1);
  if (r == 1) return Rat(-1);
  if (r == make_rat(1, 2) || r == make_rat(3, 2)) return Rat(0);
  if (r == make_rat(1, 3) || r == make_rat(5, 3)) return make_rat(1, 2);
  if (r == make_rat(2, 3) || r == make_rat(4, 3)) return make_rat(-1, 2);
  return std::nullopt;
}

RatInterval x_interval_to_c(const Angle& a, const Angle& b) {
  if (!(a.pi_multiple >= 0 && a.pi_multiple < b.pi_multiple && b.pi_multiple <= 2)) {
    throw std::domain_error("interval must satisfy 0 <= a < b <= 2pi");
  }
  auto lo = rational_cos(Angle{canonical(b.pi_multiple / 2)});
  auto hi = rational_cos(Angle{canonical(a.pi_multiple / 2)});
  if (!lo || !hi) {
    throw std::domain_error("endpoint " + to_string(lo ? a : b) + " has an irrational half-angle cosine; use the grid path");
  }
  return {*lo, *hi};
}

RatInterval x_interval_to_t(const Angle& a, const Angle& b) {
  if (!(a.pi_multiple >= 0 && a.pi_multiple < b.pi_multiple && b.pi_multiple <= 1)) {
    throw std::domain_error("t = cos(x) is monotone only for 0 <= a < b <= pi");
  }
  auto lo = rational_cos(b);
  auto hi = rational_cos(a);
  if (!lo || !hi) {
    throw std::domain_error("endpoint " + to_string(lo ? a : b) + " has an irrational cosine; use the grid path");
  }
  return {*lo, *hi};
}

}  // namespace trigineq
