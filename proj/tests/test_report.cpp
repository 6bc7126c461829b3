#include "doctest.h"
#include "qzm/errors.hpp"
#include "qzm/suites.hpp"

using namespace qzm;

namespace {

RunConfig run(const std::string& command, int n, int k) {
  RunConfig c;
  c.command = command;
  c.n = n;
  c.k = k;
  c.samples = 5;
  return c;
}

}  // namespace

TEST_CASE("report encodings") {
  Report r(run("enumerate", 2, 2), "tag");
  run_check(r, "ok", Expectation::PaperClaim, {{"x", 1}}, [](CheckRecord& c) { c.result = Outcome::Pass; });
  run_check(r, "budget", Expectation::DerivedOracle, {}, [](CheckRecord&) { throw BudgetExceeded("family", 20, 10); });
  run_check(r, "explore", Expectation::Exploratory, {}, [](CheckRecord& c) { c.result = Outcome::Fail; });
  CHECK(r.count(Outcome::Pass) == 1);
  CHECK(r.count(Outcome::Budget) == 1);
  CHECK_FALSE(r.paper_claim_failed());
  const auto j = r.to_json(false);
  CHECK(j["schema"] == "qzm-report/1");
  CHECK(j["config"]["seed"] == 1);
  CHECK(j["summary"]["fail"] == 1);
  CHECK_FALSE(j["checks"][0].contains("time_ms"));
  CHECK(r.to_csv().rfind("name,expectation,params,result,detail,sizes,time_ms\n", 0) == 0);
  CHECK(r.to_text().find("summary: 1 pass, 1 fail, 0 skipped, 1 budget") != std::string::npos);
  run_check(r, "broken", Expectation::PaperClaim, {}, [](CheckRecord&) { throw DomainError("bad"); });
  CHECK(r.paper_claim_failed());
  CHECK(format_from_string("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(format_from_string("xml"), InvalidParameter);
}

TEST_CASE("enumerate command") {
  const Report r = cmd_enumerate(run("enumerate", 2, 2));
  CHECK(r.count(Outcome::Fail) == 0);
  auto& rr = const_cast<Report&>(r);
  CHECK(rr.data()["diagrams"].size() == 4);
  CHECK(cmd_enumerate(run("enumerate", 3, 1)).to_json(false)["data"]["diagrams"].size() == 7);
  CHECK(cmd_enumerate(run("enumerate", 3, 2)).to_json(false)["data"]["diagrams"].size() == 11);
}

TEST_CASE("field and algebra commands pass") {
  CHECK(cmd_verify_field(run("verify-field", 2, 2)).count(Outcome::Fail) == 0);
  RunConfig g = run("verify-field", 3, 2);
  g.generic_q = true;
  CHECK(cmd_verify_field(g).count(Outcome::Fail) == 0);
  const Report a = cmd_verify_algebra(run("verify-algebra", 2, 1));
  CHECK(a.count(Outcome::Fail) == 0);
  CHECK(a.count(Outcome::Pass) == a.checks().size());
}

TEST_CASE("fprime report is deterministic") {
  const RunConfig c = run("fprime", 2, 2);
  const Report a = cmd_fprime(c);
  const Report b = cmd_fprime(c);
  CHECK(a.to_json(false).dump() == b.to_json(false).dump());
  CHECK_FALSE(a.paper_claim_failed());
}

TEST_CASE("check-w rejects a bad hook row") {
  RunConfig c = run("check-w", 2, 1);
  CHECK_THROWS_AS(cmd_check_w(c), InvalidParameter);
  c = run("check-w", 3, 3);
  const Report r = cmd_check_w(c);
  for (const auto& rec : r.checks()) CHECK(rec.expectation == Expectation::Exploratory);
}
