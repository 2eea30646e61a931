#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sbt/blocks.hpp"
#include "sbt/cnf.hpp"
#include "sbt/tdt.hpp"

namespace sbt::testing {

struct CorpusFormula {
  std::string name;
  std::string dimacs;
  bool satisfiable;
  // Small enough for collapse_search and db3_sort_decision in a test run.
  bool searchable;
};

inline const std::vector<CorpusFormula> &corpus() {
  static const std::vector<CorpusFormula> formulas{
      {"four-var",
       "c (x1 v x2 v ~x3)(x1 v ~x2)(~x1 v x2 v ~x4)(~x1 v x3 v x4)(x3 v ~x4)(~x2 v ~x3 v x4)\n"
       "p cnf 4 6\n1 2 -3 0\n1 -2 0\n-1 2 -4 0\n-1 3 4 0\n3 -4 0\n-2 -3 4 0\n",
       true, true},
      {"xor2", "p cnf 2 2\n1 2 0\n-1 -2 0\n", true, true},
      {"implication", "p cnf 2 2\n1 0\n2 -1 0\n", true, true},
      {"pick-one", "p cnf 3 3\n1 2 3 0\n-1 -2 0\n-3 0\n", true, false},
      {"cycle3", "p cnf 3 4\n1 -2 0\n2 -3 0\n3 -1 0\n1 2 3 0\n", true, true},
      {"unit", "p cnf 1 1\n1 0\n", true, true},
      {"contradiction", "p cnf 1 2\n1 0\n-1 0\n", false, true},
      {"all-pairs", "p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n", false, true},
      {"chain", "p cnf 2 3\n1 0\n-1 2 0\n-2 0\n", false, true},
  };
  return formulas;
}

inline CnfFormula corpus_formula(const std::string &name) {
  for (const auto &f : corpus())
    if (f.name == name) return parse_dimacs(f.dimacs);
  throw std::out_of_range(name);
}

// I = a1 c2 b1 b2 c1 a2
inline TdtInstance example_two_triples() {
  return TdtInstance::from_names({"a1", "c2", "b1", "b2", "c1", "a2"},
                                 {{"a1", "b1", "c1"}, {"a2", "b2", "c2"}});
}

// [X1, X2] = var(Y); Y = or(X1, X2)
inline std::vector<BlockSpec> var_or_specs() {
  return {{BlockKind::var, {"Y"}, {"X1", "X2"}, ""}, {BlockKind::disj, {"X1", "X2"}, {"Y"}, ""}};
}

inline const char *kVarOrImages =
    "0 17 5 3 20 12 1 14 4 29 16 13 9 8 2 11 32 19 15 22 28 18 24 7 27 26 10 6 31 21 30 25 23 33";

// Eleven steps collapsing var_or_specs() to the empty instance.
inline std::vector<std::array<std::string, 3>> var_or_collapse_order() {
  return {{"B1.d1", "B1.e1", "B1.f1"}, {"X1.x", "X1.y", "X1.z"}, {"X1.a", "X1.b", "X1.c"},
          {"B2.a'", "B2.b'", "B2.c'"}, {"B2.d", "B2.e", "B2.f"},  {"Y.x", "Y.y", "Y.z"},
          {"Y.a", "Y.b", "Y.c"},       {"B1.a'", "B1.b'", "B1.c'"}, {"B1.d2", "B1.e2", "B1.f2"},
          {"X2.x", "X2.y", "X2.z"},    {"X2.a", "X2.b", "X2.c"}};
}

} // namespace sbt::testing
