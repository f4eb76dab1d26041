#pragma once

#include <functional>
#include <string>
#include <vector>

namespace dumont {

struct CheckRow {
  int n = 0;
  std::string formula;
  std::string oracle;
  bool equal = false;
};

struct CheckSpec {
  std::string id;
  std::string description;
  int default_max_n = 6;
  bool suspect = false;
  // For suspect checks: the indices where the formula side is known to
  // disagree with brute force. Any other mismatch pattern is a failure.
  std::function<bool(int)> documented_mismatch;
  std::function<std::vector<CheckRow>(int max_n)> run;
};

struct CheckReport {
  std::string id;
  std::string verdict;  // pass | fail | discrepancy_documented
  std::vector<CheckRow> rows;
  double runtime_ms = 0.0;
};

const std::vector<CheckSpec>& list_checks();

// max_n <= 0 means the check's default; larger requests are capped at the
// default to keep runtimes bounded.
CheckReport run_check(const std::string& id, int max_n = 0);
std::vector<CheckReport> run_all(int max_n = 0);

std::string report_json(const std::vector<CheckReport>& reports);
bool all_must_pass_ok(const std::vector<CheckReport>& reports);

}  // namespace dumont
