#include "sbt/pipeline.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace sbt;
using sbt::testing::corpus_formula;

TEST(Pipeline, SatisfiableWithModel) {
  PipelineConfig cfg;
  cfg.assignment = parse_assignment_bits("1010", 4);
  const PipelineReport r = run_pipeline(corpus_formula("four-var"), cfg);
  EXPECT_TRUE(r.all_passed());
  EXPECT_TRUE(r.satisfiable);
  EXPECT_EQ(r.span, 414);
  EXPECT_EQ(r.triples, 138u);
  EXPECT_EQ(r.blocks, 30u);
  EXPECT_EQ(r.collapsible, Outcome::yes);
  EXPECT_EQ(r.sorts_in_db3, Outcome::yes);
  EXPECT_EQ(r.guided_trace_length, 138u);
}

TEST(Pipeline, Unsatisfiable) {
  const PipelineReport r = run_pipeline(corpus_formula("contradiction"));
  EXPECT_TRUE(r.all_passed());
  EXPECT_FALSE(r.satisfiable);
  EXPECT_EQ(r.span, 192);
  EXPECT_EQ(r.collapsible, Outcome::no);
  EXPECT_EQ(r.sorts_in_db3, Outcome::no);
  EXPECT_FALSE(r.guided_trace_length);
  EXPECT_EQ(r.normalized.m, 2);
  EXPECT_EQ(r.original.m, 1);
}

TEST(Pipeline, NonModelIsRecordedAsFailure) {
  PipelineConfig cfg;
  cfg.assignment = parse_assignment_bits("1000", 4);
  cfg.run_searches = false;
  const PipelineReport r = run_pipeline(corpus_formula("four-var"), cfg);
  EXPECT_FALSE(r.all_passed());
}

TEST(Pipeline, BudgetIsReported) {
  PipelineConfig cfg;
  cfg.search.node_budget = 10;
  const PipelineReport r = run_pipeline(corpus_formula("contradiction"), cfg);
  EXPECT_TRUE(r.budget_exhausted());
  EXPECT_EQ(r.collapsible, Outcome::budget_exhausted);
}

TEST(Pipeline, JsonReport) {
  PipelineConfig cfg;
  cfg.run_searches = false;
  const auto j = nlohmann::json::parse(run_pipeline(corpus_formula("xor2"), cfg).to_json());
  EXPECT_EQ(j.at("instance").at("span"), 192);
  EXPECT_TRUE(j.contains("checks"));
}
