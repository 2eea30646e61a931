#pragma once

#include <cstdint>
#include <vector>

#include "sbt/permutation.hpp"

namespace sbt {

/// Largest span the brute-force oracle accepts; its table has (n-1)! entries.
inline constexpr int kOracleMaxSpan = 10;

/// Transposition distance by iterative deepening over all transpositions,
/// starting from ceil(d_b/3) and pruning any branch where three breakpoints
/// per remaining move cannot reach the identity.
/// Throws Error(depth_exceeded) if d_t(p) > max_depth.
int exact_distance(const Permutation &p, int max_depth);

/// Transposition distance read from a breadth-first search over every
/// permutation of span p.n(). The table for each span is built once and
/// cached. Throws Error(span_too_large) when p.n() > kOracleMaxSpan.
int bfs_distance_oracle(const Permutation &p);

/// Full distance table for a span, indexed by lexicographic rank of the
/// interior images pi(1..n-1). Exposed for exhaustive sweeps.
const std::vector<std::int8_t> &bfs_distance_table(int n);

/// Lexicographic rank of pi(1..n-1) among permutations of [1, n-1].
std::uint64_t interior_rank(const Permutation &p);

} // namespace sbt
