#include "sbt/io.hpp"

#include <filesystem>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "sbt/error.hpp"

using namespace sbt;
namespace fs = std::filesystem;

namespace {

class TempDir : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sbt_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

using RoundTrip3dt = TempDir;

} // namespace

TEST_F(RoundTrip3dt, TwoTriples) {
  const fs::path p = dir_ / "i.3dt";
  write_file(p, "span 6\nword a1 c2 b1 b2 c1 a2\ntriple a1 b1 c1\ntriple a2 b2 c2\n");
  const TdtInstance inst = roundtrip_3dt(p);
  EXPECT_EQ(inst, sbt::testing::example_two_triples());
}

TEST_F(RoundTrip3dt, Empty) {
  const fs::path p = dir_ / "e.3dt";
  write_file(p, "span 6\nword . . . . . .\n");
  EXPECT_TRUE(roundtrip_3dt(p).is_empty());
}

TEST_F(RoundTrip3dt, Errors) {
  const fs::path p = dir_ / "bad.3dt";
  write_file(p, "span 4\nword a b c d\ntriple a b c\n");
  EXPECT_THROW(roundtrip_3dt(p), Error);
  write_file(p, "span 3\nword a a c\ntriple a b c\n");
  EXPECT_THROW(roundtrip_3dt(p), Error);
  write_file(p, "span 3\nword  a b c\ntriple a b c\n");
  EXPECT_THROW(roundtrip_3dt(p), Error);
  try {
    roundtrip_3dt(dir_ / "missing.3dt");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::io_error);
  }
}

TEST(Trace, FormatAndParse) {
  const TdtInstance inst = sbt::testing::example_two_triples();
  const StepTrace tr = collapse_search(inst).trace.value();
  const std::string text = format_trace(inst, tr);
  EXPECT_EQ(text,
            "{\"index\":1,\"triple\":[\"a1\",\"b1\",\"c1\"],\"i\":1,\"j\":3,\"k\":5,"
            "\"word-after\":\". b2 . c2 . a2\"}\n"
            "{\"index\":2,\"triple\":[\"a2\",\"b2\",\"c2\"],\"i\":2,\"j\":4,\"k\":6,"
            "\"word-after\":\". . . . . .\"}\n");
  const auto records = parse_trace(text);
  ASSERT_EQ(records.size(), 2u);
  const StepTrace back = trace_from_records(inst, records);
  EXPECT_EQ(back.moves(), tr.moves());
}

TEST(Trace, RejectsMismatch) {
  const TdtInstance inst = sbt::testing::example_two_triples();
  const auto records = parse_trace(
      "{\"index\":1,\"triple\":[\"a1\",\"b1\",\"c1\"],\"i\":1,\"j\":2,\"k\":5,\"word-after\":\"\"}\n");
  EXPECT_THROW(trace_from_records(inst, records), Error);
  EXPECT_THROW(parse_trace("{\"index\":2,\"triple\":null,\"i\":1,\"j\":2,\"k\":3}\n"), Error);
  EXPECT_THROW(parse_trace("not json\n"), Error);
}

TEST(Trace, MoveTrace) {
  const Permutation p = parse_permutation("0 3 1 2 4 5");
  const std::string text = format_move_trace(p, {Transposition(1, 2, 4)});
  EXPECT_EQ(text, "{\"index\":1,\"triple\":null,\"i\":1,\"j\":2,\"k\":4,\"word-after\":\"0 1 2 3 4 5\"}\n");
  EXPECT_EQ(parse_trace(text).front().move, Transposition(1, 2, 4));
}

TEST(Metadata, RebuildsAssembling) {
  const ReductionOutput r = reduce(sbt::testing::corpus_formula("four-var"));
  const std::string meta = reduction_metadata(r);
  EXPECT_NE(meta.find("\"last_conjunct\": \"Gamma_6\""), std::string::npos);
  const Assembling back = assembling_from_metadata(meta);
  EXPECT_EQ(back.instance(), r.assembling.instance());
  EXPECT_EQ(back.decomposition(), r.assembling.decomposition());
  EXPECT_THROW(assembling_from_metadata("{\"span\": 3}"), Error);
  EXPECT_THROW(assembling_from_metadata("{"), Error);
}

TEST(Metadata, LayoutReport) {
  const Assembling a = assemble(sbt::testing::var_or_specs());
  const std::string rep = layout_report(a, compute_layout(a));
  EXPECT_NE(rep.find("\"alpha\": 15"), std::string::npos);
  EXPECT_NE(rep.find("\"q\": 33"), std::string::npos);
}
