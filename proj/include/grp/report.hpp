#pragma once

#include <string>
#include <vector>

#include "grp/catalog.hpp"
#include "grp/theorems.hpp"

namespace grp {

// One line of suite output: a check verdict plus the group's radical orders.
struct ReportRecord {
  std::string group;
  int order = 0;
  std::string check_id;
  CheckStatus status = CheckStatus::Holds;
  std::string witness;
  int phi = 0;
  int fit = 0;
  int fstar = 0;
  int ftilde = 0;
  int ftilde_inf = 0;
  int stab_index = 0;
  bool internal = false;  // the row reports an internal error, never acceptable
  bool probe = false;     // probe rows never gate the exit code
};

struct SuiteOptions {
  std::vector<std::string> checks;  // empty selects every registered check
  Budget budget;
  int max_order = kDefaultOrderCap;
  int jobs = 1;
};

struct SuiteResult {
  std::vector<ReportRecord> records;
  int exit_code = 0;  // 0 clean, 1 proven-check failure or internal error
};

// Runs the selected checks over the corpus, parallel over groups, output in
// (corpus, registry) order regardless of the worker count.  Throws Error for
// an unknown check id.
SuiteResult run_suite(const std::vector<PreparedGroup>& corpus, const SuiteOptions& opts);

// Human-readable summary: radical orders per group, verdict counts per check,
// then any failing rows in full.
std::string emit_table(const std::vector<ReportRecord>& records);

// Machine form: one key=value record per line, witness quoted and escaped.
std::string emit_records(const std::vector<ReportRecord>& records);

}  // namespace grp
