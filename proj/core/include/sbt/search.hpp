#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sbt/permutation.hpp"
#include "sbt/tdt.hpp"

namespace sbt {

/// Three-valued answer of every exhaustive search. `budget_exhausted` is
/// never folded into `no`.
enum class Outcome { yes, no, budget_exhausted };

std::string_view to_string(Outcome o) noexcept;

enum class OrderHeuristic {
  /// Try the candidate with the smallest first position first.
  smallest_position,
  /// Try candidates in the order the instance lists its triples.
  triple_index,
};

struct SearchConfig {
  /// Dead states remembered at most; beyond that the search keeps going
  /// without caching new ones.
  std::size_t memo_capacity = std::size_t{1} << 24;
  OrderHeuristic order = OrderHeuristic::smallest_position;
  unsigned workers = 1;
  /// Nodes expanded before giving up with Outcome::budget_exhausted.
  std::optional<std::uint64_t> node_budget;

  /// Throws std::invalid_argument if workers == 0 or a budget is zero.
  void validate() const;
};

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t dead_states = 0;
};

struct TraceStep {
  Triple triple;
  Transposition move;
};

/// A sequence of 3DT-steps from the state identified by initial_key.
struct StepTrace {
  std::string initial_key;
  std::vector<TraceStep> steps;

  std::size_t size() const noexcept { return steps.size(); }
  std::vector<Transposition> moves() const;
};

struct CollapseResult {
  Outcome outcome = Outcome::no;
  std::optional<StepTrace> trace;
  SearchStats stats;
};

/// Memoized DFS for a sequence of 3DT-steps reducing `inst` to the empty
/// instance.
CollapseResult collapse_search(const TdtInstance &inst, const SearchConfig &cfg = {});

struct SortResult {
  Outcome outcome = Outcome::no;
  /// Witness scenario of exactly d_b(p)/3 moves when outcome == yes.
  std::vector<Transposition> moves;
  SearchStats stats;
};

/// Decides d_t(p) == d_b(p)/3 by searching sequences of moves that each
/// remove three breakpoints.
SortResult db3_sort_decision(const Permutation &p, const SearchConfig &cfg = {});

/// Replays a trace, checking that every step is legal and records the
/// transposition the step actually performs. Returns the final state.
/// Throws Error(incomplete_trace) on a mismatch.
TdtInstance replay_trace(const TdtInstance &start, const StepTrace &trace);

/// Applies the moves in order.
Permutation replay_moves(const Permutation &start, const std::vector<Transposition> &moves);

} // namespace sbt
