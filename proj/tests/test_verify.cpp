#include "doctest.h"

#include <set>

#include "json.hpp"

#include "aslw/errors.hpp"
#include "aslw/verify.hpp"

using namespace aslw;

namespace {

SLTable make(const std::string& name, const std::string& order_s, int depth) {
  FiniteRootSystem sys = build_system(name);
  LetterOrder order = LetterOrder::from_string(order_s, sys.n_letters());
  return generate_up_to_delta(sys, order, depth);
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("suite names are stable and validated") {
  const auto& names = all_suite_names();
  std::set<std::string> got(names.begin(), names.end());
  std::set<std::string> want{"convexity",        "monotonicity",   "flags",
                             "factorization",    "dec_periodicity", "inc_periodicity",
                             "connectivity",     "special_orders",  "tables",
                             "word_lemmas"};
  CHECK(got == want);

  VerifyConfig bad;
  bad.suites = {"convexity", "no_such_suite"};
  bad.cells = {{"A2", "0,1,2", 4}};
  CHECK_THROWS_AS(run_suite(bad), usage_error);
}

TEST_CASE("all_order_cells enumerates every permutation once") {
  auto cells = all_order_cells("C2", 6);
  CHECK(cells.size() == 6);
  std::set<std::string> orders;
  for (const CellSpec& c : cells) {
    CHECK(c.system == "C2");
    CHECK(c.depth == 6);
    orders.insert(c.order);
  }
  CHECK(orders.size() == 6);
  CHECK(all_order_cells("A1", 3).size() == 2);
}

TEST_CASE("recorder bookkeeping: violations, caps and warnings") {
  SuiteResult result;
  result.name = "demo";
  Recorder rec(&result, "cellA", "replay-cmd");
  rec.check(true, "fine");
  rec.check(false, "broken once");
  rec.warn("heads up");
  CHECK(result.checks == 2);
  REQUIRE(result.violations.size() == 1);
  CHECK(result.violations[0].instance == "broken once");
  CHECK(result.violations[0].cell == "cellA");
  CHECK(result.violations[0].replay == "replay-cmd");
  REQUIRE(result.warnings.size() == 1);

  for (int i = 0; i < 200; ++i) rec.check(false, "bulk " + std::to_string(i));
  CHECK(result.violations.size() <= 51);  // capped, plus one suppression notice
  CHECK(result.checks == 202);

  RunStatistics stats;
  std::mutex mu;
  Recorder rec2(&result, "cellA", "replay-cmd", &stats, &mu);
  rec2.note_s(4, "somewhere");
  rec2.note_s(2, "elsewhere");
  rec2.note_c(3, "inc spot");
  rec2.note_u_ratio(1.5, "u spot");
  CHECK(stats.max_s == 4);
  CHECK(stats.max_s_where == "somewhere");
  CHECK(stats.max_c == 3);
  CHECK(stats.max_u_ratio == doctest::Approx(1.5));
}

TEST_CASE("clean cells pass every chain suite") {
  VerifyConfig cfg;
  cfg.suites = {"convexity",      "monotonicity",    "flags",         "factorization",
                "dec_periodicity", "inc_periodicity", "connectivity", "special_orders"};
  cfg.cells = {{"A2", "0,1,2", 6}, {"C2", "0,1,2", 8}, {"G2", "1,2,0", 8}};
  cfg.threads = 1;
  VerifyReport rep = run_suite(cfg);
  CHECK(rep.ok());
  CHECK(rep.total_violations() == 0);
  CHECK(rep.total_checks() > 1000);
  CHECK(rep.suites.size() == cfg.suites.size() * cfg.cells.size());
  for (const SuiteResult& r : rep.suites) {
    INFO(r.name << " on " << r.cell);
    CHECK(r.violations.empty());
  }
  CHECK(rep.stats.max_s >= 1);
  CHECK(rep.stats.max_u_ratio > 0.0);
  CHECK(rep.stats.max_u_ratio < 10.0);
}

TEST_CASE("word lemma suite runs the requested number of cases") {
  VerifyConfig cfg;
  cfg.suites = {"word_lemmas"};
  cfg.word_lemma_cases = 500;
  cfg.threads = 1;
  VerifyReport rep = run_suite(cfg);
  CHECK(rep.ok());
  REQUIRE(rep.suites.size() == 1);
  CHECK(rep.suites[0].checks >= 500);
  CHECK(rep.suites[0].violations.empty());
}

TEST_CASE("connectivity outcomes on pinned cells") {
  SuiteResult result;
  Recorder rec(&result, "C2 0,1,2", "");
  SLTable c2 = make("C2", "0,1,2", 2);
  ConnectivityOutcome out = check_connectivity(c2, rec);
  CHECK(out.criterion);
  CHECK(out.direct);
  CHECK(result.violations.empty());

  SLTable d5 = make("D5", "0,1,2,3,4,5", 2);
  ConnectivityOutcome out2 = check_connectivity(d5, rec);
  CHECK(out2.direct);
  CHECK(result.violations.empty());
}

TEST_CASE("periodicity checkers accept pinned chains in isolation") {
  SuiteResult result;
  Recorder rec(&result, "cell", "");

  SLTable f4 = make("F4", "0,2,4,1,3", 10);
  check_dec_periodicity(f4, {0, 1, 1, 2, 2}, rec);
  CHECK(result.violations.empty());

  SLTable c2 = make("C2", "0,1,2", 8);
  check_inc_periodicity(c2, {1, 0, 0}, rec);
  CHECK(result.violations.empty());
  CHECK(result.checks > 0);
}

TEST_CASE("table tightness on small systems") {
  SuiteResult result;
  RunStatistics stats;
  std::mutex mu;
  Recorder rec(&result, "tables", "", &stats, &mu);
  check_tables({"A1", "A2", "A3", "B2", "C2", "G2"}, rec);
  CHECK(result.violations.empty());
  CHECK(result.checks > 0);
  CHECK(stats.max_s == 5);   // G2 decreasing bound
  CHECK(stats.max_c == 3);   // G2 increasing bound
}

TEST_CASE("reports serialize to JSON and text") {
  VerifyConfig cfg;
  cfg.suites = {"monotonicity"};
  cfg.cells = {{"A2", "1,2,0", 4}};
  cfg.threads = 1;
  VerifyReport rep = run_suite(cfg);
  CHECK(rep.ok());

  nlohmann::json j = nlohmann::json::parse(report_to_json(rep));
  REQUIRE(j.contains("suites"));
  CHECK(j["suites"].size() == 1);
  CHECK(j["suites"][0]["name"] == "monotonicity");
  CHECK(j["suites"][0]["cell"] == std::string("A2 order=1,2,0"));
  CHECK(j["suites"][0]["violations"].empty());
  CHECK(j.contains("stats"));
  CHECK(j["ok"] == true);

  std::string text = report_to_text(rep);
  CHECK(text.find("monotonicity") != std::string::npos);
  CHECK(text.find("OK") != std::string::npos);
}

}  // TEST_SUITE
