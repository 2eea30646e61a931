#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sbt/blocks.hpp"
#include "sbt/emitter.hpp"
#include "sbt/reduction.hpp"
#include "sbt/search.hpp"

namespace sbt {

/// Throws Error(io_error).
std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, std::string_view content);

/// Loads a 3DT file and checks that its canonical serialization reproduces
/// the file byte for byte. Throws Error(parse_error) when it does not.
TdtInstance roundtrip_3dt(const std::filesystem::path &path);

/// One JSON record per line:
///   {"index":1,"triple":["a","b","c"],"i":1,"j":3,"k":5,"word-after":"..."}
std::string format_trace(const TdtInstance &start, const StepTrace &trace);
/// Moves on a permutation; "triple" is null and "word-after" holds images.
std::string format_move_trace(const Permutation &start, const std::vector<Transposition> &moves);

struct TraceRecord {
  int index;
  std::optional<std::array<std::string, 3>> triple;
  Transposition move;
  std::string word_after;
};
/// Throws Error(parse_error).
std::vector<TraceRecord> parse_trace(std::string_view text);

/// Resolves triple names against `start` and checks every record against
/// the replay. Throws Error(incomplete_trace) on any mismatch.
StepTrace trace_from_records(const TdtInstance &start, const std::vector<TraceRecord> &records);

/// Sidecar describing the blocks of an assembling: index, kind, group,
/// s_h, t_h, inputs, outputs; with reduction extras when available.
std::string assembling_metadata(const Assembling &a);
std::string reduction_metadata(const ReductionOutput &out);

/// Rebuilds the assembling a sidecar describes. Throws Error(parse_error).
Assembling assembling_from_metadata(std::string_view json);

/// p/q per block and alpha/beta per variable.
std::string layout_report(const Assembling &a, const Layout &layout);

} // namespace sbt
