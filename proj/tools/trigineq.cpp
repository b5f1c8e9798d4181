// Command-line front end: certificate sweeps, lemma checks, sharpness probes and series analyses.
#include <iostream>

#include "CLI11.hpp"
#include "trigineq/run.hpp"

using namespace trigineq;

namespace {

struct RawFlags {
  std::string family, m, n, bound, claim, omega, method = "auto", format = "json";
};

void add_common(CLI::App* sub, RunConfig& c, RawFlags& raw) {
  sub->add_option("--family", raw.family, "family tag, e.g. P_DIFF");
  sub->add_option("--m", raw.m, "m range, N or A..B");
  sub->add_option("--n", raw.n, "n range, N or A..B");
  sub->add_option("--interval", c.interval, "open interval of x: 0..pi, 0..2pi/3, 0..2pi")->capture_default_str();
  sub->add_option("--bound", raw.bound, "rational bound, or m");
  sub->add_option("--method", raw.method, "auto, sturm or grid")->capture_default_str();
  sub->add_option("--variant", c.variant, "tau variant for TAU_SIGNED")->capture_default_str();
  sub->add_option("--claim", raw.claim, "sharpness claim id");
  sub->add_option("--depth", c.depth, "sharpness sequence length")->capture_default_str();
  sub->add_option("--omega", raw.omega, "comma-separated rationals in [-1, 1]");
  sub->add_option("--order", c.order, "series truncation order")->capture_default_str();
  sub->add_option("--samples", c.samples, "superadditivity samples")->capture_default_str();
  sub->add_option("--coefficients", c.coefficients_path, "write the W coefficient table as CSV");
  sub->add_option("--precision-bits", c.precision_bits, "working precision")
      ->envname("TRIGINEQ_PRECISION_BITS")
      ->capture_default_str();
  sub->add_option("--grid-points", c.grid_points, "grid scan points")->capture_default_str();
  sub->add_option("--output,-o", c.output, "output path, - for stdout")->capture_default_str();
  sub->add_option("--format", raw.format, "json or csv")->capture_default_str();
  sub->add_option("--jobs,-j", c.jobs, "worker threads")->capture_default_str();
  sub->add_flag("--timings", c.timings, "include runtimes (output is no longer reproducible)");
}

void apply(const RawFlags& raw, RunConfig& c) {
  if (!raw.family.empty()) {
    c.family = parse_family_tag(raw.family);
    if (!c.family) throw UsageError("unknown family tag '" + raw.family + "'");
  }
  if (!raw.m.empty()) c.m = parse_range(raw.m);
  if (!raw.n.empty()) c.n = parse_range(raw.n);
  c.bound = raw.bound;
  if (!raw.claim.empty()) {
    c.claim = parse_claim(raw.claim);
    if (!c.claim) throw UsageError("unknown claim '" + raw.claim + "'");
  }
  if (!raw.omega.empty()) c.omegas = parse_rat_list(raw.omega);
  if (raw.method == "auto") {
    c.method = MethodChoice::automatic;
  } else if (raw.method == "sturm") {
    c.method = MethodChoice::sturm;
  } else if (raw.method == "grid") {
    c.method = MethodChoice::grid;
  } else {
    throw UsageError("unknown method '" + raw.method + "'");
  }
  if (raw.format == "json") {
    c.format = Format::json;
  } else if (raw.format == "csv") {
    c.format = Format::csv;
  } else {
    throw UsageError("unknown format '" + raw.format + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates and checks for binomial-weighted trigonometric sums"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  RunConfig config;
  RawFlags raw;
  const std::pair<Command, const char*> commands[] = {
      {Command::certify, "Certify positivity for a family over m and n ranges"},
      {Command::lemmas, "Run the lemma checks and the case partition"},
      {Command::sharpness, "Evaluate the sequences behind the sharp constants"},
      {Command::series, "Taylor coefficients of W, monotonicity and superadditivity"},
      {Command::scan, "Grid scan only, no exact certificate"},
      {Command::all, "A representative run of every command"}};
  for (const auto& [cmd, help] : commands) {
    CLI::App* sub = app.add_subcommand(std::string(to_string(cmd)), help);
    add_common(sub, config, raw);
    sub->callback([&config, cmd = cmd] { config.command = cmd; });
  }

  try {
    app.parse(argc, argv);
    apply(raw, config);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return execute(config, std::cout, std::cerr);
}
