#pragma once

// The instance suite behind `repdim verify paper` and the acceptance binary.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "repdim/engine.hpp"

namespace repdim::suite {

enum class Verdict { Pass, Fail, Warn };
std::string to_string(Verdict v);

struct Row {
  std::string instance;
  std::string expected;
  std::string computed;
  Verdict verdict = Verdict::Pass;
};

struct Criterion {
  std::string id;     // "AC1" ... "AC12"
  std::string title;
  std::vector<std::string> tags;  // names accepted by --filter
  double budget_seconds = 0;
};

struct CriterionResult {
  Criterion criterion;
  std::vector<Row> rows;
  double seconds = 0;
  bool within_budget() const;
  bool passed() const;  // no FAIL row and within budget
  bool warned() const;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t gldim_cap = kDefaultGldimCap;
  std::size_t jobs = 1;
  std::optional<std::string> filter;  // criterion id or tag
};

const std::vector<Criterion>& criteria();
/// True when the criterion id or one of its tags equals `filter`.
bool selected(const Criterion& c, const std::optional<std::string>& filter);
/// Filters naming no criterion are rejected by the caller.
bool known_filter(const std::string& filter);

/// Runs the selected criteria in order; `on_result` sees each as it finishes.
std::vector<CriterionResult> run(const SuiteOptions& options,
                                 const std::function<void(const CriterionResult&)>& on_result = {});

/// "exact 2", "[2, 3]" or "[2, ?]".
std::string interval(const RepdimReport& r);

}  // namespace repdim::suite
