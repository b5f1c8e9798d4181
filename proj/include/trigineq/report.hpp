// Report envelope and its JSON / CSV encodings.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "trigineq/certificate.hpp"
#include "trigineq/lemma_report.hpp"
#include "trigineq/power_series.hpp"
#include "trigineq/sharpness.hpp"

namespace trigineq {

using Json = nlohmann::json;

inline constexpr std::string_view kSchemaVersion = "report-v1";
inline constexpr std::string_view kToolVersion = TRIGINEQ_VERSION;

enum class Format { json, csv };

/// One result row group. `payload` holds the kind-specific fields.
struct ResultRecord {
  std::string kind;  // certificate, lemma, sharpness, series, scan
  std::string id;
  bool pass = false;
  Json payload;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

struct Summary {
  long total = 0;
  long passed = 0;
  long failed = 0;

  friend bool operator==(const Summary&, const Summary&) = default;
};

struct ReportEnvelope {
  std::string schema_version{kSchemaVersion};
  std::string tool_version{kToolVersion};
  Json config = Json::object();
  std::vector<ResultRecord> results;
  Summary summary;
  std::optional<std::int64_t> wall_time_ms;  // present only when timings are requested

  void add(ResultRecord record);
  friend bool operator==(const ReportEnvelope&, const ReportEnvelope&) = default;
};

Json rat_json(const Rat& q);
Rat rat_from_json(const Json& j);

/// `timings` adds runtime_ms.
Json to_json(const Certificate& cert, bool timings = false);
Certificate certificate_from_json(const Json& j);
Json to_json(const LemmaReport& report);
Json to_json(const SharpnessReport& report);

ResultRecord record(const Certificate& cert, bool timings = false);
ResultRecord record(const LemmaReport& report);
ResultRecord record(const SharpnessReport& report);

Json to_json(const ReportEnvelope& report);
ReportEnvelope envelope_from_json(const Json& j);

/// JSON: sorted keys, two-space indent, trailing newline. CSV: one row per
/// check with RFC 4180 quoting and CRLF line ends.
std::string emit(const ReportEnvelope& report, Format format);

std::string csv_field(std::string_view field);

}  // namespace trigineq
