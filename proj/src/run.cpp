#include "trigineq/run.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <thread>

#include "trigineq/fejer.hpp"
#include "trigineq/lemmas.hpp"

namespace trigineq {

namespace {

using Task = std::function<ResultRecord()>;

constexpr std::pair<Command, std::string_view> kCommands[] = {
    {Command::certify, "certify"}, {Command::lemmas, "lemmas"}, {Command::sharpness, "sharpness"},
    {Command::series, "series"},   {Command::scan, "scan"},     {Command::all, "all"}};

bool digits_only(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

IntRange default_n(const RunConfig& c) {
  if (c.n) return *c.n;
  if (c.command == Command::lemmas) return {21, 21};
  return {1, 1};
}

// Runs tasks on `jobs` threads; results land in task order.
std::vector<ResultRecord> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<ResultRecord> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& e) {
        results[i] = {"error", "task " + std::to_string(i), false, Json{{"error", e.what()}}};
      }
    }
  };
  const int count = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < count; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

Rat resolve_bound(const RunConfig& c, const FamilyId& id) {
  if (c.bound.empty()) return default_bound(id);
  if (c.bound == "m") return Rat(id.m);
  return parse_rat(c.bound);
}

std::vector<FamilyId> instances(const RunConfig& c, FamilyTag tag, IntRange ms, IntRange ns) {
  std::vector<FamilyId> out;
  const IntRange m_used = uses_m(tag) ? ms : IntRange{1, 1};
  for (long m = m_used.lo; m <= m_used.hi; ++m) {
    for (long n = ns.lo; n <= ns.hi; ++n) out.push_back({tag, m, n, c.variant});
  }
  return out;
}

void certify_tasks(std::vector<Task>& tasks, const RunConfig& c, FamilyTag tag, IntRange ms, IntRange ns,
                   const std::string& interval, bool scan) {
  CertifyOptions opt;
  opt.method = scan ? MethodChoice::grid : c.method;
  opt.grid_points = c.grid_points;
  opt.precision_bits = c.precision_bits;
  const AngleInterval iv = parse_interval(interval);
  for (const FamilyId& id : instances(c, tag, ms, ns)) {
    const Rat bound = resolve_bound(c, id);
    const bool timings = c.timings;
    tasks.push_back([=] {
      ResultRecord r = record(certify_positive(id, bound, iv, opt), timings);
      if (scan) r.kind = "scan";
      return r;
    });
  }
}

void lemma_tasks(std::vector<Task>& tasks, const RunConfig& c, IntRange ms, IntRange ns) {
  const LemmaOptions opt{c.grid_points, std::max(c.precision_bits, kLemmaBits)};
  for (long n = ns.lo; n <= ns.hi; ++n) {
    for (long m = ms.lo; m <= ms.hi; ++m) {
      tasks.push_back([=] { return record(lemma1_condition(m, n, std::min(c.grid_points, 512L))); });
      tasks.push_back([=] { return record(lemma2_transfer(m, n, 32)); });
    }
    for (auto fn : {&lemma3, &lemma4, &lemma5, &lemma6, &lemma7}) {
      tasks.push_back([=] { return record(fn(n, opt)); });
    }
    if (n >= 21) tasks.push_back([=] { return record(theorem5_case_partition(n, opt)); });
  }
}

Json check_json(const std::string& name, bool pass, Json details) {
  return Json{{"name", name}, {"pass", pass}, {"arithmetic", "exact"}, {"details", std::move(details)}};
}

ResultRecord series_record(long m, const Rat& omega, long order, long samples) {
  const WParams p{m, omega};
  const PowerSeries w = w_coefficients(p, order);
  const MonotonicityResult mono = check_nonnegative(w);
  Json checks = Json::array();
  Json md{{"scope", mono.scope}, {"strictly_positive", mono.strictly_positive}};
  if (mono.first_negative) md["first_negative"] = *mono.first_negative;
  checks.push_back(check_json("absolute_monotonicity", mono.pass, md));

  const PowerSeries num = w_numerator(p, order);
  bool recon = true;
  for (long k = 0; k <= order - m - 3; ++k) {
    const Rat expected = k == 0 ? Rat(1) : k == 1 ? Rat(-omega) : Rat(0);
    if (num[k] != expected) recon = false;
  }
  checks.push_back(check_json("reconstruction", recon, Json{{"orders", "0.." + std::to_string(order - m - 3)}}));

  const SuperadditiveResult sup = check_superadditive(p, samples);
  Json sd{{"samples", sup.samples}, {"worst_relative_margin", sup.worst_margin.to_string(20)}};
  Json sc = check_json("superadditive", sup.pass, sd);
  sc["arithmetic"] = "float";
  checks.push_back(sc);

  char growth[32];
  std::snprintf(growth, sizeof growth, "%.4f", growth_exponent(w));
  Json gc = check_json("growth", true, Json{{"exponent_estimate", growth}, {"note", "empirical, no asymptotic claim"}});
  gc["arithmetic"] = "float";
  checks.push_back(gc);

  bool pass = true;
  for (const Json& c : checks) pass = pass && c["pass"].get<bool>();
  Json payload{{"m", m}, {"omega", rat_json(omega)}, {"order", order}, {"checks", checks},
               {"last_coefficient", rat_json(w[static_cast<std::size_t>(order)])}};
  return {"series", "W m=" + std::to_string(m) + " omega=" + to_string(omega), pass, payload};
}

void series_tasks(std::vector<Task>& tasks, const RunConfig& c, IntRange ms, const std::vector<Rat>& omegas) {
  for (long m = ms.lo; m <= ms.hi; ++m) {
    for (const Rat& w : omegas) {
      const long order = c.order, samples = c.samples;
      tasks.push_back([=] { return series_record(m, w, order, samples); });
    }
  }
}

void sharpness_tasks(std::vector<Task>& tasks, const RunConfig& c) {
  std::vector<ClaimId> claims = c.claim ? std::vector<ClaimId>{*c.claim} : all_claims();
  for (ClaimId id : claims) {
    const int depth = c.depth;
    tasks.push_back([=] { return record(check_sharpness(id, depth)); });
  }
}

}  // namespace

std::string_view to_string(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "?";
}

Command parse_command(std::string_view name) {
  for (const auto& [cmd, n] : kCommands) {
    if (n == name) return cmd;
  }
  throw UsageError("unknown command '" + std::string(name) + "'");
}

IntRange parse_range(std::string_view text) {
  const auto sep = text.find("..");
  const std::string_view a = sep == std::string_view::npos ? text : text.substr(0, sep);
  const std::string_view b = sep == std::string_view::npos ? text : text.substr(sep + 2);
  auto sign_ok = [](std::string_view s) { return s.starts_with('-') ? digits_only(s.substr(1)) : digits_only(s); };
  if (!sign_ok(a) || !sign_ok(b) || a.size() > 9 || b.size() > 9) {
    throw UsageError("malformed range '" + std::string(text) + "' (expected N or A..B)");
  }
  IntRange r{std::stol(std::string(a)), std::stol(std::string(b))};
  if (r.lo > r.hi) throw UsageError("malformed range '" + std::string(text) + "': empty");
  return r;
}

std::vector<Rat> parse_rat_list(std::string_view text) {
  std::vector<Rat> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(parse_rat(item));
    } catch (const std::invalid_argument&) {
      throw UsageError("malformed rational '" + std::string(item) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Rat default_bound(const FamilyId& id) {
  if (id.tag == FamilyTag::B12) return Rat(id.m);
  if ((id.tag == FamilyTag::U14 && id.m == 1) || id.tag == FamilyTag::REMARK2_1) return make_rat(-1, 4);
  return Rat(0);
}

void validate(const RunConfig& c) {
  if (c.m.lo > c.m.hi) throw UsageError("m range is empty");
  if (c.precision_bits < 64) throw UsageError("precision_bits must be ≥ 64");
  if (c.grid_points < 16) throw UsageError("grid_points must be ≥ 16");
  if (c.jobs < 1) throw UsageError("jobs must be ≥ 1");
  if (c.depth < 8) throw UsageError("depth must be ≥ 8");
  if (c.samples < 100) throw UsageError("samples must be ≥ 100");
  if (c.order < 8) throw UsageError("order must be ≥ 8");
  const IntRange n = default_n(c);
  try {
    parse_interval(c.interval);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!c.bound.empty() && c.bound != "m") {
    try {
      parse_rat(c.bound);
    } catch (const std::invalid_argument&) {
      throw UsageError("malformed bound '" + c.bound + "'");
    }
  }
  switch (c.command) {
    case Command::certify:
    case Command::scan: {
      if (!c.family) throw UsageError("--family is required for " + std::string(to_string(c.command)));
      try {
        for (long m : {c.m.lo, c.m.hi}) {
          for (long nn : {n.lo, n.hi}) validate(FamilyId{*c.family, m, nn, c.variant});
        }
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (c.command == Command::certify && c.method == MethodChoice::sturm) {
        const AngleInterval iv = parse_interval(c.interval);
        auto rational_image = [&](auto convert) {
          try {
            convert(iv.lo, iv.hi);
            return true;
          } catch (const std::domain_error&) {
            return false;
          }
        };
        if (!rational_image(x_interval_to_c) && !rational_image(x_interval_to_t)) {
          throw UsageError("interval " + c.interval +
                           " has no rational cosine image; the Sturm route needs one, use --method grid");
        }
      }
      break;
    }
    case Command::lemmas:
      if (c.m.lo < 1) throw UsageError("m must be ≥ 1");
      if (n.lo < 1) throw UsageError("n must be ≥ 1");
      break;
    case Command::series:
      if (c.m.lo < 1) throw UsageError("m must be ≥ 1");
      for (const Rat& w : c.omegas) {
        if (abs(w) > 1) throw UsageError("omega must satisfy |omega| ≤ 1");
      }
      break;
    case Command::sharpness:
    case Command::all:
      break;
  }
}

Json config_echo(const RunConfig& c) {
  const IntRange n = default_n(c);
  Json omegas = Json::array();
  for (const Rat& w : c.omegas) omegas.push_back(rat_json(w));
  const std::string_view method = c.method == MethodChoice::automatic ? "auto"
                                  : c.method == MethodChoice::sturm   ? "sturm"
                                                                      : "grid";
  Json j{{"command", std::string(to_string(c.command))},
         {"m", Json{{"lo", c.m.lo}, {"hi", c.m.hi}}},
         {"n", Json{{"lo", n.lo}, {"hi", n.hi}}},
         {"interval", c.interval},
         {"bound", c.bound.empty() ? "default" : c.bound},
         {"method", std::string(method)},
         {"variant", c.variant},
         {"precision_bits", c.precision_bits},
         {"grid_points", c.grid_points},
         {"depth", c.depth},
         {"order", c.order},
         {"samples", c.samples},
         {"omegas", omegas},
         {"format", c.format == Format::json ? "json" : "csv"}};
  j["family"] = c.family ? Json(std::string(tag_name(*c.family))) : Json(nullptr);
  j["claim"] = c.claim ? Json(std::string(to_string(*c.claim))) : Json(nullptr);
  return j;
}

RunOutcome run(const RunConfig& c) {
  validate(c);
  const auto start = std::chrono::steady_clock::now();
  const IntRange n = default_n(c);
  std::vector<Task> tasks;
  switch (c.command) {
    case Command::certify: certify_tasks(tasks, c, *c.family, c.m, n, c.interval, false); break;
    case Command::scan: certify_tasks(tasks, c, *c.family, c.m, n, c.interval, true); break;
    case Command::lemmas: lemma_tasks(tasks, c, c.m, n); break;
    case Command::sharpness: sharpness_tasks(tasks, c); break;
    case Command::series: series_tasks(tasks, c, c.m, c.omegas); break;
    case Command::all: {
      RunConfig d = c;
      d.bound.clear();
      certify_tasks(tasks, d, FamilyTag::P_DIFF, {1, 1}, {1, 30}, "0..2pi/3", false);
      certify_tasks(tasks, d, FamilyTag::THETA_DIFF, {1, 1}, {1, 20}, "0..2pi/3", false);
      for (FamilyTag tag : {FamilyTag::A11, FamilyTag::B12, FamilyTag::U14, FamilyTag::V15, FamilyTag::C16,
                            FamilyTag::D17, FamilyTag::TAU_SIGNED}) {
        certify_tasks(tasks, d, tag, {1, 3}, {1, 8}, "0..pi", false);
      }
      lemma_tasks(tasks, d, {1, 1}, {21, 21});
      sharpness_tasks(tasks, d);
      series_tasks(tasks, d, {1, 3}, {Rat(-1), Rat(0), Rat(1)});
      break;
    }
  }
  RunOutcome out;
  out.report.config = config_echo(c);
  for (ResultRecord& r : run_tasks(tasks, c.jobs)) out.report.add(std::move(r));
  if (c.timings) {
    out.report.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  out.exit_code = out.report.summary.failed == 0 ? 0 : 1;
  return out;
}

int execute(const RunConfig& c, std::ostream& out, std::ostream& diag) {
  try {
    validate(c);
  } catch (const UsageError& e) {
    diag << "error: " << e.what() << "\n";
    return 2;
  }
  std::ofstream file;
  if (c.output != "-") {
    file.open(c.output, std::ios::binary | std::ios::trunc);
    if (!file) {
      diag << "error: cannot write output path '" << c.output << "'\n";
      return 2;
    }
  }
  std::ofstream coeffs;
  if (!c.coefficients_path.empty()) {
    coeffs.open(c.coefficients_path, std::ios::binary | std::ios::trunc);
    if (!coeffs) {
      diag << "error: cannot write output path '" << c.coefficients_path << "'\n";
      return 2;
    }
  }
  const RunOutcome result = run(c);
  const std::string bytes = emit(result.report, c.format);
  (c.output == "-" ? out : file) << bytes;
  if (coeffs.is_open()) coeffs << to_csv(w_coefficients({c.m.lo, c.omegas.front()}, c.order));
  diag << result.report.summary.passed << "/" << result.report.summary.total << " passed\n";
  return result.exit_code;
}

}  // namespace trigineq
