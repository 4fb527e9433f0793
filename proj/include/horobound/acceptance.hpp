#pragma once

#include <functional>
#include <string>
#include <vector>

#include "horobound/limits.hpp"

namespace horobound {

struct CriterionInfo {
  int id = 0;
  std::string name;
  std::vector<std::string> tags;
  double budget_seconds = 0;
};

struct CriterionResult {
  CriterionInfo info;
  std::string status;  // PASS, FAIL or SKIPPED
  double seconds = 0;
  std::string detail;
};

struct AcceptanceOptions {
  /// Criterion ids ("3") or tags ("gamma1"); empty runs everything.
  std::vector<std::string> only;
  /// Negative control: a graph name from mutation_targets() whose default
  /// center is joined to its whole distance-3 sphere before any criterion
  /// sees it.
  std::string mutate;
  unsigned workers = 1;
  Limits limits;
};

const std::vector<CriterionInfo>& acceptance_criteria();
std::vector<std::string> mutation_targets();

/// Runs the selected criteria in id order. `on_result` is called as each
/// one finishes. Throws InvalidInput for an unknown filter or mutation.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// One line: status, id, name, time against budget, detail.
std::string format_result(const CriterionResult& r);

}  // namespace horobound
