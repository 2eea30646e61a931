#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "sbt/blocks.hpp"
#include "sbt/permutation.hpp"

namespace sbt {

struct Layout {
  std::vector<int> p; // per block
  std::vector<int> q;
  std::unordered_map<std::string, int> alpha; // per variable id
  std::unordered_map<std::string, int> beta;
  std::vector<std::vector<int>> images; // P_h, sorted

  int alpha_of(const std::string &id) const { return alpha.at(id); }
  int beta_of(const std::string &id) const { return beta.at(id); }
};

/// Throws Error(non_basic_block) for driver or sink blocks.
Layout compute_layout(const Assembling &a);

struct EmittedPermutation {
  Permutation permutation;
  Layout layout;
};

/// The permutation equivalent to the assembling, one literal image table
/// per block kind.
EmittedPermutation emit_permutation(const Assembling &a);

/// Independent re-check of an emission: the rules on every variable's six
/// symbols and their left neighbours, the successor rule everywhere else,
/// pi(s_h) = p_h, pi(t_h) = q_h and each block mapping onto P_h.
/// Returns one message per violation.
std::vector<std::string> check_emission(const Assembling &a, const EmittedPermutation &e);

/// The map u -> pi^{-1}(pi(u-1)+1) on [1, n] is fixed-point free and of order 3.
bool is_three_permutation(const Permutation &p);

} // namespace sbt
