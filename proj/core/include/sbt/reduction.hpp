#pragma once

#include <string>
#include <vector>

#include "sbt/blocks.hpp"
#include "sbt/cnf.hpp"
#include "sbt/search.hpp"

namespace sbt {

/// Variable standing for the `occurrence`-th occurrence (1-based) of literal
/// x_var or ~x_var: "X_2^1", "Xbar_2^1".
std::string literal_variable_name(int var, bool negated, int occurrence);

/// Clause position (1-based clause and position) mapped to its L_p variable.
struct LiteralSlot {
  int clause;
  int position;
  std::string variable;
};

struct ReductionOutput {
  CnfFormula formula;
  Assembling assembling;
  std::vector<LiteralSlot> literal_map;
  /// How the second input of the last and-block was read.
  std::string last_conjunct;

  const std::string &literal_variable(int clause, int position) const;
};

/// Block list of I_phi: group (*) for every boolean variable, then (**) for
/// every clause, then (***), then (****). Throws Error(not_normalized).
std::vector<BlockSpec> reduction_specs(const CnfFormula &f,
                                       std::vector<LiteralSlot> *literal_map = nullptr);

ReductionOutput reduce(const CnfFormula &f);

/// Collapse trace that activates the variables in the order of the
/// satisfiability proof for the model `a`, then clears every block.
/// Throws Error(unsatisfying_assignment) if `a` does not satisfy the formula.
StepTrace guided_collapse(const ReductionOutput &out, const Assignment &a);

/// Variable ids in the order the trace activates them. Replays the trace.
std::vector<std::string> activation_sequence(const Assembling &a, const StepTrace &trace);

/// P = { i : X_i activated before A_phi }. Throws Error(incomplete_trace)
/// unless the trace collapses the instance, and Error(unsatisfying_assignment)
/// if the extracted assignment fails the formula.
Assignment extract_assignment(const ReductionOutput &out, const StepTrace &trace);

} // namespace sbt
