#include "qzm/report.hpp"

#include <iomanip>
#include <sstream>

#include "qzm/errors.hpp"

namespace qzm {

std::string to_string(Expectation e) {
  switch (e) {
    case Expectation::PaperClaim: return "paper-claim";
    case Expectation::DerivedOracle: return "derived-oracle";
    case Expectation::Exploratory: return "exploratory";
  }
  return "?";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skipped: return "skipped";
    case Outcome::Budget: return "budget";
  }
  return "?";
}

OutputFormat format_from_string(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw InvalidParameter("unknown output format: " + s);
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["n"] = n;
  j["k"] = k;
  j["h"] = h();
  j["field"] = generic_q ? "generic" : "root-of-unity";
  j["budget"] = budget;
  j["samples"] = samples;
  j["seed"] = seed;
  j["hook_row"] = hook_row;
  return j;
}

Report::Report(RunConfig cfg, std::string epsilon_tag)
    : cfg_(std::move(cfg)), epsilon_(std::move(epsilon_tag)), start_(std::chrono::steady_clock::now()) {}

std::size_t Report::count(Outcome o) const {
  std::size_t c = 0;
  for (const auto& r : checks_) c += r.result == o ? 1 : 0;
  return c;
}

bool Report::paper_claim_failed() const {
  for (const auto& r : checks_)
    if (r.expectation == Expectation::PaperClaim && r.result == Outcome::Fail) return true;
  return false;
}

nlohmann::ordered_json Report::to_json(bool include_timing) const {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["tool"] = "qzm";
  j["version"] = kToolVersion;
  j["epsilon"] = epsilon_;
  j["config"] = cfg_.to_json();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : checks_) {
    nlohmann::ordered_json c;
    c["name"] = r.name;
    c["expectation"] = to_string(r.expectation);
    c["params"] = r.params;
    c["result"] = to_string(r.result);
    c["detail"] = r.detail;
    c["sizes"] = r.sizes;
    if (include_timing) c["time_ms"] = r.time_ms;
    arr.push_back(std::move(c));
  }
  j["checks"] = std::move(arr);
  j["data"] = data_;
  nlohmann::ordered_json s;
  s["total"] = checks_.size();
  s["pass"] = count(Outcome::Pass);
  s["fail"] = count(Outcome::Fail);
  s["skipped"] = count(Outcome::Skipped);
  s["budget"] = count(Outcome::Budget);
  s["paper_claim_failed"] = paper_claim_failed();
  j["summary"] = s;
  if (include_timing)
    j["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string Report::to_csv() const {
  std::ostringstream out;
  out << "name,expectation,params,result,detail,sizes,time_ms\n";
  for (const auto& r : checks_) {
    out << csv_field(r.name) << ',' << to_string(r.expectation) << ',' << csv_field(r.params.dump()) << ','
        << to_string(r.result) << ',' << csv_field(r.detail) << ',' << csv_field(r.sizes.dump()) << ',' << std::fixed
        << std::setprecision(3) << r.time_ms << '\n';
  }
  return out.str();
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "qzm " << kToolVersion << "  command=" << cfg_.command << "  n=" << cfg_.n << " k=" << cfg_.k
      << " h=" << cfg_.h() << "  field=" << (cfg_.generic_q ? "generic" : "root-of-unity") << "  epsilon=" << epsilon_
      << "  seed=" << cfg_.seed << '\n';
  std::size_t width = 10;
  for (const auto& r : checks_) width = std::max(width, r.name.size());
  for (const auto& r : checks_) {
    out << std::left << std::setw(8) << to_string(r.result) << std::setw(16) << to_string(r.expectation)
        << std::setw(static_cast<int>(width) + 2) << r.name << r.params.dump();
    if (!r.detail.empty()) out << "  " << r.detail;
    out << '\n';
  }
  out << "summary: " << count(Outcome::Pass) << " pass, " << count(Outcome::Fail) << " fail, "
      << count(Outcome::Skipped) << " skipped, " << count(Outcome::Budget) << " budget\n";
  return out.str();
}

std::string Report::render(OutputFormat f) const {
  switch (f) {
    case OutputFormat::Json: return to_json().dump(2) + "\n";
    case OutputFormat::Csv: return to_csv();
    case OutputFormat::Text: return to_text();
  }
  return {};
}

void run_check(Report& report, std::string name, Expectation e, nlohmann::ordered_json params,
               const std::function<void(CheckRecord&)>& body) {
  CheckRecord r;
  r.name = std::move(name);
  r.expectation = e;
  r.params = std::move(params);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const BudgetExceeded& ex) {
    r.result = Outcome::Budget;
    r.detail = ex.what();
  } catch (const std::exception& ex) {
    r.result = Outcome::Fail;
    r.detail = std::string("error: ") + ex.what();
  }
  r.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  report.add(std::move(r));
}

}  // namespace qzm
