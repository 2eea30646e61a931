// Randomized checks. Each generator is derived from --seed; rerun with the
// printed seed to reproduce a failure.
#include <cstdlib>
#include <cstring>
#include <iostream>

#include <gtest/gtest.h>

#include "properties.hpp"

using namespace sbt::testing;

namespace {

std::uint64_t g_seed = 20240611;

void expect_ok(const CheckResult &r) { EXPECT_FALSE(r.has_value()) << *r; }

} // namespace

TEST(Property, BreakpointsDropByAtMostThree) { expect_ok(check_breakpoint_drop(g_seed)); }
TEST(Property, ExactDistanceMatchesOracleExhaustively) { expect_ok(check_oracle_exhaustive(7)); }
TEST(Property, SuccIsFixedPointFreeOfOrderThree) { expect_ok(check_succ_order_three(g_seed)); }
TEST(Property, ThreeBreakpointMovesMatchBruteForce) { expect_ok(check_three_bp_moves(g_seed)); }
TEST(Property, StepsPreserveEquivalenceAlongRandomCollapses) { expect_ok(check_equivalence_walks(g_seed)); }
TEST(Property, EnabledTriplesAreThreeBreakpointMoves) { expect_ok(check_enabled_bijection_walks(g_seed)); }
TEST(Property, TraceMovesHaveSmallMinFactor) { expect_ok(check_trace_min_factor()); }
TEST(Property, NormalizePreservesSatisfiability) { expect_ok(check_normalize(g_seed)); }

int main(int argc, char **argv) {
  ::testing::InitGoogleTest(&argc, argv);
  for (int a = 1; a < argc; ++a) {
    if (std::strcmp(argv[a], "--seed") == 0 && a + 1 < argc) {
      g_seed = std::strtoull(argv[++a], nullptr, 10);
    } else if (std::strncmp(argv[a], "--seed=", 7) == 0) {
      g_seed = std::strtoull(argv[a] + 7, nullptr, 10);
    } else {
      std::cerr << "unknown argument: " << argv[a] << "\n";
      return 2;
    }
  }
  std::cout << "seed " << g_seed << "\n";
  return RUN_ALL_TESTS();
}
