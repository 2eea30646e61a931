#include "sbt/emitter.hpp"

#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "sbt/error.hpp"
#include "sbt/reduction.hpp"

using namespace sbt;

TEST(Layout, VarOr) {
  const Assembling a = assemble(sbt::testing::var_or_specs());
  const Layout lay = compute_layout(a);
  EXPECT_EQ(lay.p, (std::vector<int>{0, 15}));
  EXPECT_EQ(lay.q, (std::vector<int>{15, 33}));
  EXPECT_EQ(lay.alpha_of("Y"), 5);
  EXPECT_EQ(lay.beta_of("Y"), 9);
  EXPECT_EQ(lay.alpha_of("X1"), 15);
  EXPECT_EQ(lay.beta_of("X1"), 28);
  EXPECT_EQ(lay.alpha_of("X2"), 18);
  EXPECT_EQ(lay.beta_of("X2"), 31);
  EXPECT_EQ(lay.images[0].size(), 18u);
  EXPECT_EQ(lay.images[1].size(), 15u);
}

TEST(Layout, EndsAtSpan) {
  for (const auto &c : sbt::testing::corpus()) {
    const Assembling a = reduce(normalize(parse_dimacs(c.dimacs))).assembling;
    const Layout lay = compute_layout(a);
    EXPECT_EQ(lay.p.front(), 0);
    EXPECT_EQ(lay.q.back(), a.instance().span()) << c.name;
    std::vector<int> all;
    for (const auto &set : lay.images) all.insert(all.end(), set.begin(), set.end());
    std::sort(all.begin(), all.end());
    std::vector<int> expected(static_cast<std::size_t>(a.instance().span()));
    std::iota(expected.begin(), expected.end(), 1);
    EXPECT_EQ(all, expected) << c.name;
  }
}

TEST(Layout, RejectsHarnessBlocks) {
  const Assembling a = assemble({{BlockKind::driver, {}, {"A"}, ""}, {BlockKind::sink, {"A"}, {}, ""}});
  try {
    compute_layout(a);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::non_basic_block);
  }
}

TEST(Emit, VarOrImages) {
  const Assembling a = assemble(sbt::testing::var_or_specs());
  const EmittedPermutation e = emit_permutation(a);
  EXPECT_EQ(format_permutation(e.permutation), sbt::testing::kVarOrImages);
  EXPECT_EQ(e.permutation(1), 17);
  EXPECT_EQ(e.permutation(19), 22);
  EXPECT_EQ(e.permutation(33), 33);
  EXPECT_TRUE(is_equivalent(a.instance(), e.permutation));
  EXPECT_TRUE(check_emission(a, e).empty());
  EXPECT_EQ(breakpoint_count(e.permutation), 33);
}

TEST(Emit, CorpusAssemblings) {
  for (const auto &c : sbt::testing::corpus()) {
    const Assembling a = reduce(normalize(parse_dimacs(c.dimacs))).assembling;
    const EmittedPermutation e = emit_permutation(a);
    EXPECT_TRUE(is_equivalent(a.instance(), e.permutation)) << c.name;
    EXPECT_TRUE(check_emission(a, e).empty()) << c.name;
    EXPECT_TRUE(is_three_permutation(e.permutation)) << c.name;
    EXPECT_EQ(breakpoint_count(e.permutation), a.instance().span()) << c.name;
  }
}

TEST(Emit, CheckerCatchesTampering) {
  const Assembling a = assemble(sbt::testing::var_or_specs());
  EmittedPermutation e = emit_permutation(a);
  std::vector<int> images(e.permutation.images().begin(), e.permutation.images().end());
  std::swap(images[1], images[2]);
  e.permutation = Permutation(images);
  EXPECT_FALSE(check_emission(a, e).empty());
}

TEST(ThreePermutation, Examples) {
  EXPECT_TRUE(is_three_permutation(parse_permutation(sbt::testing::kVarOrImages)));
  EXPECT_FALSE(is_three_permutation(Permutation::identity(6)));
  EXPECT_FALSE(is_three_permutation(parse_permutation("0 2 4 3 1 5")));
  EXPECT_TRUE(is_three_permutation(parse_permutation("0 2 1 3")));
}
