#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sbt {

struct Literal {
  int var; // 1-based
  bool negated = false;

  friend bool operator==(const Literal &, const Literal &) = default;
};

using Clause = std::vector<Literal>;

/// The set P of boolean variables assigned true.
struct Assignment {
  std::set<int> true_vars;

  bool value(int var) const { return true_vars.count(var) != 0; }
  bool value(const Literal &lit) const { return value(lit.var) != lit.negated; }
  friend bool operator==(const Assignment &, const Assignment &) = default;
};

struct FormulaStats {
  int m = 0;
  int gamma = 0;
  std::vector<int> positive;     // q_i, index 1..m
  std::vector<int> negative;     // q̄_i, index 1..m
  std::vector<int> clause_sizes; // k(C_c), index 0..gamma-1
};

class CnfFormula {
public:
  /// Throws Error(parse_error) when a literal references a variable
  /// outside [1, m].
  CnfFormula(int m, std::vector<Clause> clauses);

  int variable_count() const noexcept { return m_; }
  int clause_count() const noexcept { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause> &clauses() const noexcept { return clauses_; }
  FormulaStats stats() const;

  /// gamma >= 2, m >= 2, every clause has >= 2 literals, every variable
  /// occurs >= 2 times positively and >= 2 times negatively.
  bool is_normalized() const;
  bool satisfied_by(const Assignment &a) const;

  friend bool operator==(const CnfFormula &, const CnfFormula &) = default;

private:
  int m_;
  std::vector<Clause> clauses_;
};

/// Rewrites f into an equisatisfiable normalized formula: singleton clauses
/// have their literal duplicated, tautologies (x_i v ~x_i) are appended until
/// every q_i, q̄_i >= 2, a dummy second variable is added when m = 1, and a
/// tautology pads gamma up to 2. Throws Error(empty_formula) for a formula
/// without clauses or with an empty clause.
CnfFormula normalize(const CnfFormula &f);

/// A model found by DPLL with unit propagation, or nullopt.
std::optional<Assignment> solve(const CnfFormula &f);

/// Every model over variables 1..m by truth-table enumeration (m <= 20).
std::vector<Assignment> all_models(const CnfFormula &f);

CnfFormula parse_dimacs(std::string_view text);
std::string format_dimacs(const CnfFormula &f);
std::string format_clause(const Clause &c);

/// "1010" sets x1 and x3 true. Throws Error(parse_error) unless the string
/// has exactly m characters from {0, 1}.
Assignment parse_assignment_bits(std::string_view bits, int m);
std::string format_assignment_bits(const Assignment &a, int m);

} // namespace sbt
