#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sbt/cnf.hpp"
#include "sbt/permutation.hpp"
#include "sbt/tdt.hpp"

namespace sbt::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Permutation random_permutation(int n, Rng &rng) {
  std::vector<int> interior(static_cast<std::size_t>(std::max(n - 1, 0)));
  std::iota(interior.begin(), interior.end(), 1);
  std::shuffle(interior.begin(), interior.end(), rng);
  std::vector<int> images{0};
  images.insert(images.end(), interior.begin(), interior.end());
  if (n > 0) images.push_back(n);
  return Permutation(images);
}

// n >= 3
inline Transposition random_transposition(int n, Rng &rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  std::sort(v.begin(), v.begin() + 3);
  return Transposition(v[0], v[1], v[2]);
}

// `triples` triples scattered over a word of span >= 3 * triples.
inline TdtInstance random_instance(int triples, int span, Rng &rng) {
  std::vector<std::string> word(static_cast<std::size_t>(span), ".");
  std::vector<std::size_t> slots(word.size());
  std::iota(slots.begin(), slots.end(), 0);
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<std::array<std::string, 3>> ts;
  for (int t = 0; t < triples; ++t) {
    std::array<std::string, 3> names;
    for (int r = 0; r < 3; ++r) {
      names[static_cast<std::size_t>(r)] = std::string(1, "abc"[r]) + std::to_string(t);
      word[slots[static_cast<std::size_t>(3 * t + r)]] = names[static_cast<std::size_t>(r)];
    }
    ts.push_back(names);
  }
  return TdtInstance::from_names(word, ts);
}

// No empty clauses; variables 1..m all occur.
inline CnfFormula random_formula(int m, int clauses, int max_width, Rng &rng) {
  std::vector<Clause> cs;
  for (int c = 0; c < clauses; ++c) {
    Clause clause;
    const int w = uniform(rng, 1, max_width);
    for (int l = 0; l < w; ++l) clause.push_back({uniform(rng, 1, m), uniform(rng, 0, 1) == 1});
    cs.push_back(std::move(clause));
  }
  for (int v = 1; v <= m; ++v) {
    bool used = false;
    for (const Clause &c : cs)
      for (const Literal &l : c) used = used || l.var == v;
    if (!used) cs[static_cast<std::size_t>(uniform(rng, 0, clauses - 1))].push_back({v, false});
  }
  return CnfFormula(m, std::move(cs));
}

} // namespace sbt::testing
