// Positivity certificates for trigonometric sums on an interval of x.
//
// The Sturm route converts sum - bound to a single polynomial in t = cos(x)
// (integer harmonics on a sub-interval of [0, pi]) or in c = cos(x/2), counts the
// distinct roots strictly inside the image interval, and probes one interior
// point. Zero roots plus a positive probe proves the strict inequality for that
// one instance (family, m, n, bound, interval). The grid route scans in
// multiple precision and can only return numeric evidence.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trigineq/catalog.hpp"
#include "trigineq/chebyshev.hpp"
#include "trigineq/real.hpp"
#include "trigineq/sturm.hpp"

namespace trigineq {

enum class Method { sturm, grid };
enum class MethodChoice { automatic, sturm, grid };
enum class Verdict { proved, numeric_only, refuted, inconclusive };
enum class Variable { t, c };

std::string_view to_string(Method m);
std::string_view to_string(Verdict v);
std::string_view to_string(Variable v);

/// Open interval (lo, hi) of x.
struct AngleInterval {
  Angle lo;
  Angle hi;

  friend bool operator==(const AngleInterval&, const AngleInterval&) = default;
};

/// Parses "0..pi", "0..2pi/3", "pi/3..pi".
AngleInterval parse_interval(const std::string& text);
std::string to_string(const AngleInterval& interval);

struct Witness {
  std::string x;       // decimal, 30 significant digits
  std::string margin;  // value - bound at x
  double x_double = 0;
  double margin_double = 0;
};

struct Certificate {
  FamilyId family;
  Rat bound;
  AngleInterval interval;
  Method method = Method::sturm;
  Verdict verdict = Verdict::inconclusive;

  // Sturm route.
  Variable variable = Variable::t;
  Wave part = Wave::cos;  // which part of the form carries the sign
  int degree = -1;
  std::size_t open_root_count = 0;
  std::size_t root_count = 0;  // closed image interval
  std::vector<std::string> endpoint_zeros;
  Rat probe;
  int probe_sign = 0;

  // sign of value - bound at x = lo and x = hi
  std::array<int, 2> endpoint_signs{0, 0};

  // Grid route.
  std::optional<std::string> grid_minimum;
  long grid_points = 0;
  long precision_bits = 0;

  std::optional<Witness> witness;
  std::string note;
  std::int64_t runtime_ms = 0;
};

struct CertifyOptions {
  MethodChoice method = MethodChoice::automatic;
  long grid_points = 2048;
  int refinement_rounds = 3;
  long precision_bits = kDefaultPrecisionBits;
};

/// Certifies sum(x) > bound for x in the open interval. Sin-type forms are
/// certified for bound 0 only, cos-type forms for any bound; anything else uses
/// the grid route. Requesting MethodChoice::sturm for a form or interval the
/// Sturm route cannot handle throws std::domain_error naming the grid path.
Certificate certify_sum(const TrigSum& sum, const Rat& bound, const AngleInterval& interval,
                        const CertifyOptions& options = {});
Certificate certify_positive(const FamilyId& family, const Rat& bound, const AngleInterval& interval,
                             const CertifyOptions& options = {});

struct RecheckResult {
  Real min_margin;
  double min_x = 0;
  bool passed = false;
};

/// Float oracle: evaluates value - bound at `samples` seeded random interior
/// points and passes when every margin exceeds -1e-20.
RecheckResult recheck(const TrigSum& sum, const Rat& bound, const AngleInterval& interval, int samples,
                      std::uint64_t seed, long precision_bits = kDefaultPrecisionBits);

struct GridScan {
  Real minimum;
  Real argmin;
};

/// Minimum of f over `points` interior points of (lo, hi), then `rounds` zooms
/// around the best point.
GridScan grid_minimum(const std::function<Real(const Real&)>& f, const Real& lo, const Real& hi, long points,
                      int rounds);

}  // namespace trigineq
