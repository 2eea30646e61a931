#include "properties.hpp"

#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "generators.hpp"
#include "sbt/distance.hpp"
#include "sbt/emitter.hpp"
#include "sbt/reduction.hpp"
#include "sbt/search.hpp"

namespace sbt::testing {

namespace {

Rng rng_for(std::uint64_t seed, std::uint64_t salt) { return Rng(seed * 0x9E3779B97F4A7C15ULL + salt); }

template <class... Parts> std::string describe(const Parts &...parts) {
  std::ostringstream os;
  ((os << parts), ...);
  return os.str();
}

struct Reduced {
  const CorpusFormula *source;
  ReductionOutput out;
  Permutation pi;
};

const std::vector<Reduced> &reduced_corpus() {
  static const std::vector<Reduced> all = [] {
    std::vector<Reduced> v;
    for (const auto &c : corpus()) {
      ReductionOutput r = reduce(normalize(parse_dimacs(c.dimacs)));
      Permutation pi = emit_permutation(r.assembling).permutation;
      v.push_back({&c, std::move(r), std::move(pi)});
    }
    return v;
  }();
  return all;
}

std::set<Transposition> brute_three_bp_moves(const Permutation &p) {
  std::set<Transposition> out;
  const int db = breakpoint_count(p);
  for (int i = 1; i <= p.n(); ++i)
    for (int j = i + 1; j <= p.n(); ++j)
      for (int k = j + 1; k <= p.n(); ++k) {
        const Transposition t(i, j, k);
        if (breakpoint_count(apply_transposition(p, t)) == db - 3) out.insert(t);
      }
  return out;
}

std::set<Transposition> as_set(const std::vector<Transposition> &v) { return {v.begin(), v.end()}; }

template <class T> const T &pick(const std::vector<T> &v, Rng &rng) {
  return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

} // namespace

CheckResult check_breakpoint_drop(std::uint64_t seed, int cases) {
  Rng rng = rng_for(seed, 1);
  for (int c = 0; c < cases; ++c) {
    const int n = uniform(rng, 3, 40);
    const Permutation p = random_permutation(n, rng);
    const Transposition t = random_transposition(n, rng);
    if (breakpoint_count(apply_transposition(p, t)) < breakpoint_count(p) - 3)
      return describe("breakpoints of ", p, " drop by more than 3 under ", t);
  }
  return std::nullopt;
}

CheckResult check_oracle_exhaustive(int max_span) {
  for (int n = 1; n <= max_span; ++n) {
    std::vector<int> interior(static_cast<std::size_t>(n - 1));
    std::iota(interior.begin(), interior.end(), 1);
    do {
      std::vector<int> images{0};
      images.insert(images.end(), interior.begin(), interior.end());
      images.push_back(n);
      const Permutation p(images);
      const int exact = exact_distance(p, n);
      const int oracle = bfs_distance_oracle(p);
      if (exact != oracle) return describe(p, ": exact ", exact, ", oracle ", oracle);
    } while (std::next_permutation(interior.begin(), interior.end()));
  }
  return std::nullopt;
}

CheckResult check_succ_order_three(std::uint64_t seed, int cases) {
  Rng rng = rng_for(seed, 2);
  for (int c = 0; c < cases; ++c) {
    const int triples = uniform(rng, 1, 10);
    const TdtInstance inst = random_instance(triples, 3 * triples + uniform(rng, 0, 6), rng);
    const SuccMap succ = succ_map(inst);
    const auto domain = succ.domain();
    if (domain.size() != 3u * static_cast<std::size_t>(triples))
      return describe("succ domain has wrong size on ", inst.word_string());
    for (int p : domain)
      if (succ(p) == p || !succ.in_domain(succ(p)) || succ(succ(succ(p))) != p)
        return describe("succ fails at ", p, " on ", inst.word_string());
  }
  return std::nullopt;
}

CheckResult check_three_bp_moves(std::uint64_t seed, int cases) {
  Rng rng = rng_for(seed, 3);
  for (int c = 0; c < cases; ++c) {
    const Permutation p = random_permutation(uniform(rng, 3, 12), rng);
    if (as_set(three_bp_moves(p)) != brute_three_bp_moves(p))
      return describe("three_bp_moves disagrees with brute force on ", p);
  }
  return std::nullopt;
}

CheckResult check_equivalence_walks(std::uint64_t seed, int cases) {
  Rng rng = rng_for(seed, 4);
  int checked = 0;
  while (checked < cases) {
    for (const Reduced &r : reduced_corpus()) {
      TdtInstance inst = r.out.assembling.instance();
      Permutation pi = r.pi;
      const int length = uniform(rng, 1, 40);
      for (int s = 0; s < length; ++s) {
        const auto enabled = enabled_triples(inst);
        if (enabled.empty()) break;
        const Triple t = pick(enabled, rng);
        const Transposition tau = step_transposition(inst, t);
        inst = apply_step(inst, t);
        pi = apply_transposition(pi, tau);
        if (!is_equivalent(inst, pi)) return describe(r.source->name, ": equivalence lost at step ", s + 1);
        ++checked;
      }
    }
  }
  return std::nullopt;
}

CheckResult check_enabled_bijection_walks(std::uint64_t seed, int walks) {
  const Assembling a = assemble(var_or_specs());
  const Permutation start = emit_permutation(a).permutation;
  Rng rng = rng_for(seed, 5);
  for (int w = 0; w < walks; ++w) {
    TdtInstance inst = a.instance();
    Permutation pi = start;
    while (true) {
      std::set<Transposition> mapped;
      const auto enabled = enabled_triples(inst);
      for (const Triple &t : enabled) mapped.insert(step_transposition(inst, t));
      if (mapped != brute_three_bp_moves(pi) || mapped != as_set(three_bp_moves(pi)))
        return describe("enabled triples and 3-breakpoint moves differ at ", inst.word_string());
      if (enabled.empty()) break;
      const Triple t = pick(enabled, rng);
      pi = apply_transposition(pi, step_transposition(inst, t));
      inst = apply_step(inst, t);
    }
  }
  return std::nullopt;
}

CheckResult check_trace_min_factor() {
  for (const Reduced &r : reduced_corpus()) {
    for (const Assignment &m : all_models(r.out.formula))
      for (const TraceStep &s : guided_collapse(r.out, m).steps)
        if (s.move.min_factor() > 6) return describe(r.source->name, ": trace move ", s.move, " has min factor > 6");
  }
  return std::nullopt;
}

CheckResult check_normalize(std::uint64_t seed, int cases) {
  Rng rng = rng_for(seed, 6);
  for (int c = 0; c < cases; ++c) {
    const int m = uniform(rng, 1, 5);
    const CnfFormula f = random_formula(m, uniform(rng, 1, 8), 3, rng);
    const CnfFormula g = normalize(f);
    if (!g.is_normalized()) return describe("not normalized:\n", format_dimacs(g));
    const auto model = solve(g);
    if (solve(f).has_value() != model.has_value()) return describe("satisfiability changed for\n", format_dimacs(f));
    if (model) {
      Assignment restricted;
      for (int v : model->true_vars)
        if (v <= m) restricted.true_vars.insert(v);
      if (!f.satisfied_by(restricted)) return describe("model does not restrict to\n", format_dimacs(f));
    }
  }
  return std::nullopt;
}

} // namespace sbt::testing
