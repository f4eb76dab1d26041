#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "dumont/verify.hpp"

using namespace dumont;

TEST_CASE("catalog") {
  const auto& checks = list_checks();
  CHECK(checks.size() >= 30);
  std::set<std::string> ids;
  for (const auto& c : checks) ids.insert(c.id);
  CHECK(ids.size() == checks.size());
  CHECK(ids.count("d2-2143-product"));
  CHECK(ids.count("d2-3142-narayana-fix"));
  CHECK(ids.count("genocchi-count"));
  CHECK(ids.count("bijection-roundtrips"));
  int suspects = 0;
  for (const auto& c : checks) suspects += c.suspect;
  CHECK(suspects == 4);
}

TEST_CASE("individual checks") {
  CheckReport r = run_check("d2-2143-product", 4);
  CHECK(r.verdict == "pass");
  REQUIRE(r.rows.size() >= 4);
  for (const auto& row : r.rows) {
    CHECK(row.equal);
    CHECK(row.formula == row.oracle);
  }
  bool saw = false;
  for (const auto& row : r.rows)
    if (row.n == 4) {
      CHECK(row.formula == "21");
      saw = true;
    }
  CHECK(saw);

  CheckReport ones = run_check("d1-321-one", 4);
  CHECK(ones.verdict == "pass");
  for (const auto& row : ones.rows) CHECK(row.oracle == "1");

  CheckReport zero = run_check("d2-132-zero", 4);
  CHECK(zero.verdict == "pass");
  for (const auto& row : zero.rows)
    if (row.n >= 2) CHECK(row.oracle == "0");

  CHECK_THROWS(run_check("no-such-check", 3));
}

TEST_CASE("suspect checks report documented discrepancies") {
  CheckReport fix = run_check("d2-2143-fix-formula", 4);
  CHECK(fix.verdict == "discrepancy_documented");
  for (const auto& row : fix.rows) {
    CHECK(row.equal == (row.n == 0));
    if (!row.equal) CHECK(row.formula != row.oracle);
  }

  CheckReport table = run_check("sec4-A-table", 3);
  CHECK(table.verdict == "discrepancy_documented");

  CheckReport b312 = run_check("sec4-B-312-catalan", 4);
  CHECK(b312.verdict == "discrepancy_documented");
  for (const auto& row : b312.rows) CHECK(row.equal == (row.n < 3));
}

TEST_CASE("deterministic reports") {
  std::vector<std::string> ids = {"d2-321-catalan", "d2-231-powers",
                                  "sec4-C-123", "L_k-coefficients"};
  for (const auto& id : ids) {
    CheckReport a = run_check(id, 4);
    CheckReport b = run_check(id, 4);
    CHECK(a.verdict == "pass");
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].formula == b.rows[i].formula);
      CHECK(a.rows[i].oracle == b.rows[i].oracle);
    }
  }
}

TEST_CASE("aggregate run and JSON serialization") {
  auto reports = run_all(3);
  CHECK(reports.size() == list_checks().size());
  CHECK(all_must_pass_ok(reports));
  std::string json = report_json(reports);
  CHECK(json.find("\"verdict\"") != std::string::npos);
  CHECK(json.find("d2-2143-product") != std::string::npos);
  // deterministic up to the recorded runtimes
  auto again = run_all(3);
  REQUIRE(again.size() == reports.size());
  for (size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].verdict == again[i].verdict);
    REQUIRE(reports[i].rows.size() == again[i].rows.size());
    for (size_t j = 0; j < reports[i].rows.size(); ++j) {
      CHECK(reports[i].rows[j].formula == again[i].rows[j].formula);
      CHECK(reports[i].rows[j].oracle == again[i].rows[j].oracle);
    }
  }
}
