#include "sbt/reduction.hpp"

#include <map>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "sbt/error.hpp"

using namespace sbt;
using sbt::testing::corpus_formula;

namespace {

std::map<std::string, int> kind_counts(const Assembling &a) {
  std::map<std::string, int> out;
  for (const BlockSpec &s : a.specs) ++out[std::string(to_string(s.kind))];
  return out;
}

std::map<std::string, int> group_counts(const Assembling &a) {
  std::map<std::string, int> out;
  for (const BlockSpec &s : a.specs) ++out[s.group.substr(0, s.group.find(' '))];
  return out;
}

} // namespace

TEST(Reduce, FourVarShape) {
  const ReductionOutput r = reduce(corpus_formula("four-var"));
  const Assembling &a = r.assembling;
  EXPECT_EQ(a.specs.size(), 30u);
  EXPECT_EQ(a.instance().span(), 414);
  EXPECT_EQ(a.instance().triple_count(), 138u);
  EXPECT_EQ(group_counts(a), (std::map<std::string, int>{{"(*)", 12}, {"(**)", 10}, {"(***)", 5}, {"(****)", 3}}));
  EXPECT_EQ(kind_counts(a), (std::map<std::string, int>{{"var", 4}, {"copy", 11}, {"or", 10}, {"and", 5}}));
  EXPECT_EQ(r.last_conjunct, "Gamma_6");
}

TEST(Reduce, ContradictionShape) {
  const ReductionOutput r = reduce(normalize(corpus_formula("contradiction")));
  EXPECT_EQ(r.assembling.instance().span(), 192);
  EXPECT_EQ(r.assembling.instance().triple_count(), 64u);
  EXPECT_EQ(kind_counts(r.assembling),
            (std::map<std::string, int>{{"var", 2}, {"copy", 5}, {"or", 4}, {"and", 3}}));
}

TEST(Reduce, BlockOrderFollowsGroups) {
  const ReductionOutput r = reduce(corpus_formula("four-var"));
  const auto &s = r.assembling.specs;
  EXPECT_EQ(s[0].kind, BlockKind::var);
  EXPECT_EQ(s[0].inputs, (std::vector<std::string>{"A_phi^1"}));
  EXPECT_EQ(s[0].outputs, (std::vector<std::string>{"X_1", "Xbar_1"}));
  EXPECT_EQ(s[1].inputs, (std::vector<std::string>{"X_1"}));
  EXPECT_EQ(s[1].outputs, (std::vector<std::string>{"X_1^1", "X_1^2"}));
  // clause 1 = (x1 v x2 v ~x3)
  EXPECT_EQ(s[12].inputs, (std::vector<std::string>{"X_1^1", "X_2^1"}));
  EXPECT_EQ(s[12].outputs, (std::vector<std::string>{"V_1^2"}));
  EXPECT_EQ(s[13].inputs, (std::vector<std::string>{"V_1^2", "Xbar_3^1"}));
  EXPECT_EQ(s[13].outputs, (std::vector<std::string>{"Gamma_1"}));
  EXPECT_EQ(s[22].inputs, (std::vector<std::string>{"Gamma_1", "Gamma_2"}));
  EXPECT_EQ(s[22].outputs, (std::vector<std::string>{"W_2"}));
  EXPECT_EQ(s[26].inputs, (std::vector<std::string>{"W_5", "Gamma_6"}));
  EXPECT_EQ(s[26].outputs, (std::vector<std::string>{"A_phi"}));
  EXPECT_EQ(s[27].outputs, (std::vector<std::string>{"A_phi^1", "Y_2"}));
  EXPECT_EQ(s[29].outputs, (std::vector<std::string>{"A_phi^3", "A_phi^4"}));
}

TEST(Reduce, LongChains) {
  // x1 occurs four times positively
  const CnfFormula f = normalize(parse_dimacs("p cnf 2 4\n1 2 0\n1 -2 0\n1 2 -1 0\n1 -2 -1 0\n"));
  const ReductionOutput r = reduce(f);
  EXPECT_TRUE(r.assembling.variable_index("U_1^2"));
  EXPECT_TRUE(r.assembling.variable_index("U_1^3"));
  EXPECT_FALSE(r.assembling.variable_index("U_1^4"));
  EXPECT_TRUE(r.assembling.variable_index("V_3^2"));
  EXPECT_TRUE(r.assembling.variable_index("W_3"));
  EXPECT_EQ(r.literal_variable(3, 3), "Xbar_1^1");
  EXPECT_EQ(r.literal_variable(4, 1), "X_1^4");
}

TEST(Reduce, EveryVariableHasSourceAndTarget) {
  for (const auto &c : sbt::testing::corpus()) {
    const ReductionOutput r = reduce(normalize(parse_dimacs(c.dimacs)));
    for (const VariableDecl &v : r.assembling.variables) {
      EXPECT_GE(v.source, 0);
      EXPECT_GE(v.target, 0);
      EXPECT_NE(v.source, v.target);
    }
    EXPECT_TRUE(is_valid_context(r.assembling.context, r.assembling.variables)) << c.name;
  }
}

TEST(Reduce, RequiresNormalizedFormula) {
  try {
    reduce(corpus_formula("contradiction"));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::not_normalized);
  }
}

TEST(GuidedCollapse, FourVarWithStatedModel) {
  const ReductionOutput r = reduce(corpus_formula("four-var"));
  const Assignment model = parse_assignment_bits("1010", 4);
  const StepTrace tr = guided_collapse(r, model);
  EXPECT_EQ(tr.size(), 138u);
  EXPECT_TRUE(replay_trace(r.assembling.instance(), tr).is_empty());
  EXPECT_EQ(extract_assignment(r, tr), model);

  const auto order = activation_sequence(r.assembling, tr);
  const auto pos = [&](const std::string &id) { return std::find(order.begin(), order.end(), id) - order.begin(); };
  EXPECT_LT(pos("X_1"), pos("A_phi"));
  EXPECT_LT(pos("Xbar_2"), pos("A_phi"));
  EXPECT_GT(pos("X_2"), pos("A_phi"));
  EXPECT_EQ(order.size(), r.assembling.variables.size());
}

TEST(GuidedCollapse, EveryModelOfEveryCorpusFormula) {
  for (const auto &c : sbt::testing::corpus()) {
    if (!c.satisfiable) continue;
    const ReductionOutput r = reduce(normalize(parse_dimacs(c.dimacs)));
    for (const Assignment &m : all_models(r.formula)) {
      const StepTrace tr = guided_collapse(r, m);
      EXPECT_EQ(static_cast<int>(tr.size()) * 3, r.assembling.instance().span()) << c.name;
      EXPECT_TRUE(r.formula.satisfied_by(extract_assignment(r, tr))) << c.name;
    }
  }
}

TEST(GuidedCollapse, RejectsNonModel) {
  const ReductionOutput r = reduce(normalize(corpus_formula("contradiction")));
  try {
    guided_collapse(r, Assignment{{1}});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::unsatisfying_assignment);
  }
}

TEST(ExtractAssignment, FromSearchedTrace) {
  const ReductionOutput r = reduce(corpus_formula("four-var"));
  const CollapseResult cr = collapse_search(r.assembling.instance());
  ASSERT_EQ(cr.outcome, Outcome::yes);
  EXPECT_TRUE(r.formula.satisfied_by(extract_assignment(r, *cr.trace)));
}

TEST(ExtractAssignment, IncompleteTrace) {
  const ReductionOutput r = reduce(corpus_formula("four-var"));
  StepTrace tr = guided_collapse(r, parse_assignment_bits("1010", 4));
  tr.steps.erase(tr.steps.begin() + 40, tr.steps.end());
  try {
    extract_assignment(r, tr);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::incomplete_trace);
  }
}
