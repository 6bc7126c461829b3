#pragma once

// Verification reports: one record per check, with the provenance of the
// expectation, the outcome, block sizes and timing. Encoded as json
// (schema "qzm-report/1"), csv, or a plain-text table.

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qzm {

inline constexpr const char* kReportSchema = "qzm-report/1";
inline constexpr const char* kToolVersion = "1.0.0";

enum class Expectation { PaperClaim, DerivedOracle, Exploratory };
enum class Outcome { Pass, Fail, Skipped, Budget };
std::string to_string(Expectation e);
std::string to_string(Outcome o);

enum class OutputFormat { Text, Json, Csv };
OutputFormat format_from_string(const std::string& s);

struct RunConfig {
  std::string command;
  int n = 2;
  int k = 1;
  bool generic_q = false;
  std::size_t budget = 100000;
  int samples = 25;
  std::uint64_t seed = 1;
  std::string cache_dir;
  OutputFormat format = OutputFormat::Text;
  std::string out;
  int hook_row = 2;

  int h() const { return n + k; }
  nlohmann::ordered_json to_json() const;
};

struct CheckRecord {
  std::string name;
  Expectation expectation = Expectation::DerivedOracle;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Outcome result = Outcome::Pass;
  std::string detail;
  nlohmann::ordered_json sizes = nlohmann::ordered_json::object();
  double time_ms = 0.0;
};

class Report {
 public:
  Report(RunConfig cfg, std::string epsilon_tag);

  const RunConfig& config() const { return cfg_; }
  const std::vector<CheckRecord>& checks() const { return checks_; }
  void add(CheckRecord r) { checks_.push_back(std::move(r)); }
  /// Attach free-form data (diagram tables, dimensions) under "data".
  nlohmann::ordered_json& data() { return data_; }

  std::size_t count(Outcome o) const;
  /// True iff some paper-claim check failed.
  bool paper_claim_failed() const;

  /// Timing fields are "time_ms" per record and "elapsed_ms" at top level.
  nlohmann::ordered_json to_json(bool include_timing = true) const;
  std::string to_csv() const;
  std::string to_text() const;
  std::string render(OutputFormat f) const;

 private:
  RunConfig cfg_;
  std::string epsilon_;
  std::vector<CheckRecord> checks_;
  nlohmann::ordered_json data_ = nlohmann::ordered_json::object();
  std::chrono::steady_clock::time_point start_;
};

/// Runs body with timing; BudgetExceeded becomes Outcome::Budget and any
/// other exception a failure carrying its message. body fills result,
/// detail and sizes of the record it is given.
void run_check(Report& report, std::string name, Expectation e, nlohmann::ordered_json params,
               const std::function<void(CheckRecord&)>& body);

}  // namespace qzm
