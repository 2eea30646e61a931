#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbt/cnf.hpp"
#include "sbt/search.hpp"

namespace sbt {

struct PipelineConfig {
  SearchConfig search;
  /// Model driving the guided collapse; the solver's model otherwise.
  std::optional<Assignment> assignment;
  /// Run collapse_search and db3_sort_decision on the reduced instance.
  bool run_searches = true;
};

struct PipelineCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct PipelineReport {
  FormulaStats original;
  FormulaStats normalized;
  bool satisfiable = false;
  int span = 0;
  std::size_t triples = 0;
  std::size_t blocks = 0;
  std::string permutation;
  std::optional<Outcome> collapsible;
  std::optional<Outcome> sorts_in_db3; // d_t = n/3
  std::optional<std::size_t> guided_trace_length;
  std::map<std::string, double> timings; // seconds
  std::vector<std::string> trace_files;
  std::vector<PipelineCheck> checks;

  bool all_passed() const;
  bool budget_exhausted() const;
  std::string to_json() const;
};

/// normalize, reduce, emit, then cross-check every property the pipeline
/// relies on. Never throws for a failed check; it is recorded instead.
PipelineReport run_pipeline(const CnfFormula &f, const PipelineConfig &cfg = {});

} // namespace sbt
