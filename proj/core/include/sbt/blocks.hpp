#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sbt/tdt.hpp"

namespace sbt {

/// The four gadget kinds plus the two harness kinds used to place a single
/// gadget in a valid context (driver "x b y" feeds an input, sink "a z c"
/// consumes an output). Harness kinds are for tests and exploration only.
enum class BlockKind { copy, conj, disj, var, driver, sink };

std::string_view to_string(BlockKind kind) noexcept;
/// Accepts "copy", "and", "or", "var", "driver", "sink".
BlockKind parse_block_kind(std::string_view name);
bool is_basic(BlockKind kind) noexcept;

struct Arity {
  int inputs;
  int outputs;
};
Arity arity(BlockKind kind) noexcept;

struct BlockSpec {
  BlockKind kind;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  /// Free-form provenance label carried into metadata (e.g. "(*) x1").
  std::string group;
};

/// Word and internal triples of one instantiated block.
struct BlockWord {
  std::vector<std::string> word;
  std::vector<std::array<std::string, 3>> internal_triples;
};

/// Symbol name for role `role` ("a", "b", ... "z") of variable `id`.
std::string variable_symbol(std::string_view id, std::string_view role);
/// Symbol name for internal symbol `local` of block `block` (0-based).
std::string internal_symbol(int block, std::string_view local);

/// Throws Error(arity_mismatch) when the spec's arity does not match its kind.
BlockWord instantiate_block(const BlockSpec &spec, int block_index);

/// (s_1, ..., s_l) over span n. Blocks are 0-based here: block h covers
/// positions [start(h)+1, end(h)].
class BlockDecomposition {
public:
  /// Throws Error(undefined_decomposition) unless starts[0] == 0, starts is
  /// strictly increasing and starts.back() < span.
  BlockDecomposition(std::vector<int> starts, int span);

  int block_count() const noexcept { return static_cast<int>(starts_.size()); }
  int span() const noexcept { return span_; }
  int start(int h) const { return starts_[static_cast<std::size_t>(h)]; }
  int end(int h) const {
    return h + 1 < block_count() ? starts_[static_cast<std::size_t>(h) + 1] : span_;
  }
  const std::vector<int> &starts() const noexcept { return starts_; }
  /// Block containing position p in [1, span].
  int block_of(int p) const;

  friend bool operator==(const BlockDecomposition &, const BlockDecomposition &) = default;

private:
  std::vector<int> starts_;
  int span_;
};

/// A = [(a,b,c), (x,y,z)] with the blocks it links in the initial assembling.
struct VariableDecl {
  std::string id;
  Triple abc;
  Triple xyz;
  int source; // block defining A (holds b, x, y)
  int target; // block consuming A (holds a, z, c)
};

/// A 3DT-instance together with a block decomposition.
struct BlockContext {
  TdtInstance instance;
  BlockDecomposition decomposition;
};

struct Assembling {
  std::vector<BlockSpec> specs;
  std::vector<VariableDecl> variables; // first-use order
  BlockContext context;

  const TdtInstance &instance() const noexcept { return context.instance; }
  const BlockDecomposition &decomposition() const noexcept { return context.decomposition; }
  /// Throws std::out_of_range for an unknown id.
  const VariableDecl &variable(std::string_view id) const;
  std::optional<std::size_t> variable_index(std::string_view id) const;

  std::unordered_map<std::string, std::size_t> registry;
};

/// Concatenates the instantiated blocks and wires the variables.
/// Throws Error(unmatched_variable) unless every variable is the input of
/// exactly one block and the output of exactly one other block, and
/// Error(invalid_variable) if a variable fails a validity condition in the
/// initial decomposition.
Assembling assemble(std::vector<BlockSpec> specs);

/// Why `var` is not valid in `ctx`, or nullopt when it is.
std::optional<std::string> variable_violation(const BlockContext &ctx, const VariableDecl &var);

/// Variables whose (x,y,z) triple is still present.
std::vector<const VariableDecl *> live_variables(const BlockContext &ctx,
                                                 const std::vector<VariableDecl> &vars);

/// The external triples of ctx are exactly the triples of the live
/// variables, and every live variable is valid.
bool is_valid_context(const BlockContext &ctx, const std::vector<VariableDecl> &vars);

/// Only the source/target block conditions (the ones preserved by any step).
bool satisfies_block_conditions(const BlockContext &ctx, const VariableDecl &var);

bool is_internal(const BlockContext &ctx, const Triple &t);

/// The 3DT-step on t with the decomposition remapped through tau^{-1}.
/// Throws Error(not_well_ordered) or Error(undefined_decomposition).
BlockContext step_with_blocks(const BlockContext &ctx, const Triple &t);

/// Full block (dots kept) and block (dots removed) of block h.
struct BlockProjection {
  std::vector<std::string> full;
  std::vector<std::string> compact;
};
BlockProjection project_block(const BlockContext &ctx, int h);

} // namespace sbt
