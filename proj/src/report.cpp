#include "trigineq/report.hpp"

#include <sstream>
#include <stdexcept>

namespace trigineq {

void ReportEnvelope::add(ResultRecord r) {
  ++summary.total;
  if (r.pass) {
    ++summary.passed;
  } else {
    ++summary.failed;
  }
  results.push_back(std::move(r));
}

Json rat_json(const Rat& q) { return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

Rat rat_from_json(const Json& j) {
  return parse_rat(j.at("num").get<std::string>() + "/" + j.at("den").get<std::string>());
}

namespace {

std::string family_label(const FamilyId& f) {
  std::string s(tag_name(f.tag));
  if (uses_m(f.tag)) s += " m=" + std::to_string(f.m);
  s += " n=" + std::to_string(f.n);
  if (f.tag == FamilyTag::TAU_SIGNED) s += " tau" + std::to_string(f.variant);
  return s;
}

Json family_json(const FamilyId& f) {
  Json j{{"tag", std::string(tag_name(f.tag))}, {"m", f.m}, {"n", f.n}};
  if (f.tag == FamilyTag::TAU_SIGNED) j["variant"] = f.variant;
  return j;
}

FamilyId family_from_json(const Json& j) {
  const auto tag = parse_family_tag(j.at("tag").get<std::string>());
  if (!tag) throw std::invalid_argument("unknown family tag in report");
  FamilyId f{*tag, j.at("m").get<long>(), j.at("n").get<long>()};
  if (j.contains("variant")) f.variant = j.at("variant").get<int>();
  return f;
}

Verdict verdict_from(const std::string& s) {
  for (Verdict v : {Verdict::proved, Verdict::numeric_only, Verdict::refuted, Verdict::inconclusive}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

bool certificate_passes(const Certificate& c) {
  return c.verdict == Verdict::proved || c.verdict == Verdict::numeric_only;
}

Json details_json(const Check& c) {
  Json d = Json::object();
  for (const auto& [k, v] : c.details) d[k] = v;
  return d;
}

std::string details_text(const Json& details) {
  std::string out;
  for (const auto& [k, v] : details.items()) {
    if (!out.empty()) out += ';';
    out += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return out;
}

}  // namespace

Json to_json(const Certificate& c, bool timings) {
  Json j{{"family", family_json(c.family)},
         {"bound", rat_json(c.bound)},
         {"interval", to_string(c.interval)},
         {"method", std::string(to_string(c.method))},
         {"verdict", std::string(to_string(c.verdict))},
         {"scope", "single instance (family, m, n, bound, interval)"},
         {"endpoint_signs", {c.endpoint_signs[0], c.endpoint_signs[1]}},
         {"precision_bits", c.precision_bits}};
  if (c.method == Method::sturm) {
    j["variable"] = std::string(to_string(c.variable));
    j["part"] = c.part == Wave::cos ? "cos" : "sin";
    j["degree"] = c.degree;
    j["root_count"] = c.root_count;
    j["open_root_count"] = c.open_root_count;
    j["endpoint_zeros"] = c.endpoint_zeros;
    j["probe"] = rat_json(c.probe);
    j["probe_sign"] = c.probe_sign;
  } else {
    j["grid_minimum"] = c.grid_minimum.value_or("");
    j["grid_points"] = c.grid_points;
  }
  if (c.witness) {
    j["witness"] = Json{{"x", c.witness->x}, {"margin", c.witness->margin}};
  }
  if (!c.note.empty()) j["note"] = c.note;
  if (timings) j["runtime_ms"] = c.runtime_ms;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.family = family_from_json(j.at("family"));
  c.bound = rat_from_json(j.at("bound"));
  c.interval = parse_interval(j.at("interval").get<std::string>());
  c.method = j.at("method").get<std::string>() == "sturm" ? Method::sturm : Method::grid;
  c.verdict = verdict_from(j.at("verdict").get<std::string>());
  c.endpoint_signs = {j.at("endpoint_signs")[0].get<int>(), j.at("endpoint_signs")[1].get<int>()};
  c.precision_bits = j.at("precision_bits").get<long>();
  if (c.method == Method::sturm) {
    c.variable = j.at("variable").get<std::string>() == "t" ? Variable::t : Variable::c;
    c.part = j.at("part").get<std::string>() == "cos" ? Wave::cos : Wave::sin;
    c.degree = j.at("degree").get<int>();
    c.root_count = j.at("root_count").get<std::size_t>();
    c.open_root_count = j.at("open_root_count").get<std::size_t>();
    c.endpoint_zeros = j.at("endpoint_zeros").get<std::vector<std::string>>();
    c.probe = rat_from_json(j.at("probe"));
    c.probe_sign = j.at("probe_sign").get<int>();
  } else {
    c.grid_minimum = j.at("grid_minimum").get<std::string>();
    c.grid_points = j.at("grid_points").get<long>();
  }
  if (j.contains("witness")) {
    Witness w;
    w.x = j["witness"].at("x").get<std::string>();
    w.margin = j["witness"].at("margin").get<std::string>();
    w.x_double = std::stod(w.x);
    w.margin_double = std::stod(w.margin);
    c.witness = w;
  }
  if (j.contains("note")) c.note = j["note"].get<std::string>();
  if (j.contains("runtime_ms")) c.runtime_ms = j["runtime_ms"].get<std::int64_t>();
  return c;
}

Json to_json(const LemmaReport& r) {
  Json checks = Json::array();
  for (const Check& c : r.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"formula", c.formula},
                          {"arithmetic", c.exact ? "exact" : "float"},
                          {"pass", c.pass},
                          {"details", details_json(c)}});
  }
  Json j{{"lemma_id", r.lemma_id}, {"n", r.n}, {"checks", checks}};
  if (!r.warning.empty()) j["warning"] = r.warning;
  return j;
}

Json to_json(const SharpnessReport& r) {
  Json points = Json::array();
  for (const SequencePoint& p : r.points) points.push_back(Json{{"index", p.index}, {"value", p.value}, {"gap", p.gap}});
  Json j{{"claim", std::string(to_string(r.claim))},
         {"sequence", r.sequence_spec},
         {"target", rat_json(r.target)},
         {"exact", r.exact},
         {"points", points},
         {"extrapolated_limit", r.extrapolated_limit},
         {"final_gap", r.final_gap},
         {"pass", r.pass}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

ResultRecord record(const Certificate& cert, bool timings) {
  return {"certificate", family_label(cert.family) + " " + to_string(cert.interval), certificate_passes(cert),
          to_json(cert, timings)};
}

ResultRecord record(const LemmaReport& report) {
  return {"lemma", report.lemma_id + " n=" + std::to_string(report.n), report.passed(), to_json(report)};
}

ResultRecord record(const SharpnessReport& report) {
  return {"sharpness", std::string(to_string(report.claim)), report.pass, to_json(report)};
}

Json to_json(const ReportEnvelope& r) {
  Json results = Json::array();
  for (const ResultRecord& rec : r.results) {
    results.push_back(Json{{"kind", rec.kind}, {"id", rec.id}, {"pass", rec.pass}, {"data", rec.payload}});
  }
  Json j{{"schema_version", r.schema_version},
         {"tool_version", r.tool_version},
         {"config", r.config},
         {"results", results},
         {"summary", Json{{"total", r.summary.total}, {"passed", r.summary.passed}, {"failed", r.summary.failed}}}};
  if (r.wall_time_ms) j["wall_time_ms"] = *r.wall_time_ms;
  return j;
}

ReportEnvelope envelope_from_json(const Json& j) {
  ReportEnvelope r;
  r.schema_version = j.at("schema_version").get<std::string>();
  r.tool_version = j.at("tool_version").get<std::string>();
  r.config = j.at("config");
  for (const Json& rec : j.at("results")) {
    r.results.push_back(
        {rec.at("kind").get<std::string>(), rec.at("id").get<std::string>(), rec.at("pass").get<bool>(), rec.at("data")});
  }
  const Json& s = j.at("summary");
  r.summary = {s.at("total").get<long>(), s.at("passed").get<long>(), s.at("failed").get<long>()};
  if (j.contains("wall_time_ms")) r.wall_time_ms = j["wall_time_ms"].get<std::int64_t>();
  return r;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::string emit(const ReportEnvelope& report, Format format) {
  if (format == Format::json) return to_json(report).dump(2) + "\n";

  std::ostringstream out;
  auto row = [&](std::initializer_list<std::string> fields) {
    bool first = true;
    for (const std::string& f : fields) {
      if (!first) out << ',';
      out << csv_field(f);
      first = false;
    }
    out << "\r\n";
  };
  auto yes = [](bool b) { return std::string(b ? "true" : "false"); };
  row({"kind", "id", "check", "pass", "result", "detail"});
  for (const ResultRecord& rec : report.results) {
    const Json& d = rec.payload;
    if (rec.kind == "certificate" || rec.kind == "scan") {
      std::string detail = "method=" + d.at("method").get<std::string>();
      if (d.contains("root_count")) {
        detail += ";root_count=" + d["root_count"].dump() + ";open_root_count=" + d["open_root_count"].dump();
        std::string zeros;
        for (const auto& z : d["endpoint_zeros"]) zeros += (zeros.empty() ? "" : " ") + z.get<std::string>();
        detail += ";endpoint_zeros=" + zeros;
      }
      if (d.contains("grid_minimum")) detail += ";grid_minimum=" + d["grid_minimum"].get<std::string>();
      if (d.contains("witness")) detail += ";witness_x=" + d["witness"]["x"].get<std::string>();
      const Rat bound = rat_from_json(d.at("bound"));
      row({rec.kind, rec.id, "value > " + to_string(bound) + " on " + d.at("interval").get<std::string>(),
           yes(rec.pass), d.at("verdict").get<std::string>(), detail});
    } else if (rec.kind == "lemma" || rec.kind == "series") {
      for (const Json& c : d.at("checks")) {
        row({rec.kind, rec.id, c.at("name").get<std::string>(), yes(c.at("pass").get<bool>()),
             c.value("arithmetic", std::string()), details_text(c.value("details", Json::object()))});
      }
    } else if (rec.kind == "sharpness") {
      row({rec.kind, rec.id, "limit", yes(rec.pass), d.at("final_gap").get<std::string>(),
           "target=" + to_string(rat_from_json(d.at("target"))) +
               ";extrapolated=" + d.at("extrapolated_limit").get<std::string>()});
    } else {
      row({rec.kind, rec.id, "", yes(rec.pass), "", ""});
    }
  }
  return out.str();
}

}  // namespace trigineq
