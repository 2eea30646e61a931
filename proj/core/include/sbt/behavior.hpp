#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sbt/blocks.hpp"

namespace sbt {

/// One basic block in a valid context: a driver "x b y" per input variable,
/// then the block, then a sink "a z c" per output variable.
/// Inputs and outputs are named A (single) or A1, A2 (pairs), so copy and
/// var read A -> A1, A2 while and and or read A1, A2 -> A.
struct Harness {
  BlockKind kind;
  Assembling assembling;
  int block; // index of the block under test
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
};

/// Throws Error(non_basic_block) for driver and sink.
Harness make_harness(BlockKind kind);

using ActivationOrder = std::vector<std::string>;

/// Every order in which the variables are activated along step sequences
/// from ctx that reach the empty instance. Throws Error(budget_exhausted)
/// once more than node_budget distinct states are explored.
std::set<ActivationOrder> activation_orders(const BlockContext &ctx,
                                            const std::vector<VariableDecl> &vars,
                                            std::uint64_t node_budget = 1'000'000);

enum class EdgeKind { internal, input, output };

/// States of the block under test along successful step sequences, labeled
/// by the dot-free projection of the block.
struct BehaviorGraph {
  struct Edge {
    int from;
    int to;
    EdgeKind kind;
    std::string label;
  };

  std::vector<std::string> nodes;
  std::vector<Edge> edges;
  int initial = 0;

  bool is_acyclic() const;
  /// Nodes without outgoing edges.
  std::vector<int> terminals() const;
  std::string to_dot(std::string_view name) const;
};

BehaviorGraph behavior_graph(const Harness &h, std::uint64_t node_budget = 1'000'000);

} // namespace sbt
