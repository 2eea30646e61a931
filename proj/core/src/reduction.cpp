#include "sbt/reduction.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "sbt/error.hpp"

namespace sbt {

namespace {

std::string indexed(std::string_view base, int i) { return std::string(base) + "_" + std::to_string(i); }

std::string indexed(std::string_view base, int i, int j) {
  return indexed(base, i) + "^" + std::to_string(j);
}

std::string x_name(int i, bool negated) { return indexed(negated ? "Xbar" : "X", i); }
std::string u_name(int i, bool negated, int j) { return indexed(negated ? "Ubar" : "U", i, j); }
std::string v_name(int c, int p) { return indexed("V", c, p); }
std::string gamma_name(int c) { return indexed("Gamma", c); }
std::string w_name(int c) { return indexed("W", c); }
std::string y_name(int i) { return indexed("Y", i); }
std::string a_phi_copy(int i) { return "A_phi^" + std::to_string(i); }
const std::string kAPhi = "A_phi";

// Output variable of the j-th copy block of a literal chain of length q.
std::pair<std::string, std::string> chain_outputs(int i, bool negated, int j, int q) {
  return {literal_variable_name(i, negated, j),
          j == q - 1 ? literal_variable_name(i, negated, q) : u_name(i, negated, j + 1)};
}

} // namespace

std::string literal_variable_name(int var, bool negated, int occurrence) {
  return indexed(negated ? "Xbar" : "X", var, occurrence);
}

const std::string &ReductionOutput::literal_variable(int clause, int position) const {
  for (const LiteralSlot &s : literal_map)
    if (s.clause == clause && s.position == position) return s.variable;
  throw std::out_of_range("no literal at clause " + std::to_string(clause) + " position " +
                          std::to_string(position));
}

std::vector<BlockSpec> reduction_specs(const CnfFormula &f, std::vector<LiteralSlot> *literal_map) {
  if (!f.is_normalized()) throw Error(Errc::not_normalized, "reduce needs a normalized formula");
  const FormulaStats st = f.stats();
  const int m = st.m;
  const int gamma = st.gamma;
  std::vector<BlockSpec> specs;

  // (*)
  for (int i = 1; i <= m; ++i) {
    const std::string group = "(*) x" + std::to_string(i);
    specs.push_back({BlockKind::var, {a_phi_copy(i)}, {x_name(i, false), x_name(i, true)}, group});
    for (bool negated : {false, true}) {
      const int q = (negated ? st.negative : st.positive)[static_cast<std::size_t>(i)];
      std::string prev = x_name(i, negated);
      for (int j = 1; j <= q - 1; ++j) {
        auto [first, second] = chain_outputs(i, negated, j, q);
        specs.push_back({BlockKind::copy, {prev}, {first, second}, group});
        prev = second;
      }
    }
  }

  // (**)
  std::vector<int> seen_pos(static_cast<std::size_t>(m) + 1), seen_neg(static_cast<std::size_t>(m) + 1);
  std::vector<LiteralSlot> slots;
  for (int c = 1; c <= gamma; ++c) {
    const Clause &clause = f.clauses()[static_cast<std::size_t>(c - 1)];
    const int k = static_cast<int>(clause.size());
    std::vector<std::string> lits;
    for (int p = 1; p <= k; ++p) {
      const Literal &lit = clause[static_cast<std::size_t>(p - 1)];
      const int j = ++(lit.negated ? seen_neg : seen_pos)[static_cast<std::size_t>(lit.var)];
      lits.push_back(literal_variable_name(lit.var, lit.negated, j));
      slots.push_back({c, p, lits.back()});
    }
    const std::string group = "(**) C" + std::to_string(c);
    std::string prev = lits[0];
    for (int p = 2; p <= k; ++p) {
      const std::string out = p == k ? gamma_name(c) : v_name(c, p);
      specs.push_back({BlockKind::disj, {prev, lits[static_cast<std::size_t>(p - 1)]}, {out}, group});
      prev = out;
    }
  }

  // (***), the last input read as Gamma_gamma
  {
    std::string prev = gamma_name(1);
    for (int c = 2; c <= gamma; ++c) {
      const std::string out = c == gamma ? kAPhi : w_name(c);
      specs.push_back({BlockKind::conj, {prev, gamma_name(c)}, {out}, "(***)"});
      prev = out;
    }
  }

  // (****)
  {
    std::string prev = kAPhi;
    for (int i = 1; i <= m - 1; ++i) {
      const std::string second = i == m - 1 ? a_phi_copy(m) : y_name(i + 1);
      specs.push_back({BlockKind::copy, {prev}, {a_phi_copy(i), second}, "(****)"});
      prev = second;
    }
  }

  if (literal_map) *literal_map = std::move(slots);
  return specs;
}

ReductionOutput reduce(const CnfFormula &f) {
  std::vector<LiteralSlot> slots;
  std::vector<BlockSpec> specs = reduction_specs(f, &slots);
  return ReductionOutput{f, assemble(std::move(specs)), std::move(slots),
                         gamma_name(f.clause_count())};
}

namespace {

bool block_has_symbols(const BlockContext &ctx, int h) {
  for (int p = ctx.decomposition.start(h) + 1; p <= ctx.decomposition.end(h); ++p)
    if (ctx.instance.at(p) != kDot) return true;
  return false;
}

// Enabled triples lying entirely inside block h.
std::vector<Triple> local_moves(const BlockContext &ctx, int h) {
  std::vector<Triple> out;
  const int lo = ctx.decomposition.start(h), hi = ctx.decomposition.end(h);
  for (const Triple &t : enabled_triples(ctx.instance)) {
    const TriplePositions tp = triple_positions(ctx.instance, t);
    if (tp.i > lo && tp.k <= hi) out.push_back(t);
  }
  return out;
}

class GuidedCollapse {
public:
  explicit GuidedCollapse(const Assembling &a) : assembling_(a), ctx_(a.context) {}

  void activate(const std::string &id) {
    if (activated_.count(id)) return;
    const VariableDecl &v = assembling_.variable(id);
    run_local(v.source, [&](const BlockContext &c) { return is_well_ordered(c.instance, v.xyz); },
              "activate " + id);
    push(v.xyz);
    activated_.insert(id);
  }

  void clear_blocks() {
    for (int h = 0; h < ctx_.decomposition.block_count(); ++h)
      run_local(h, [&](const BlockContext &c) { return !block_has_symbols(c, h); },
                "clear block " + std::to_string(h + 1));
  }

  bool is_activated(const std::string &id) const { return activated_.count(id) != 0; }
  StepTrace take() { return std::move(trace_); }

  template <class Goal>
  void run_local(int h, Goal goal, const std::string &what) {
    // breadth-first over steps inside block h
    struct Node {
      BlockContext ctx;
      int parent;
      Triple via;
    };
    std::vector<Node> nodes{{ctx_, -1, {}}};
    std::unordered_set<std::string> seen{ctx_.instance.canonical_key()};
    for (std::size_t at = 0; at < nodes.size(); ++at) {
      if (goal(nodes[at].ctx)) {
        std::vector<Triple> path;
        for (int n = static_cast<int>(at); nodes[static_cast<std::size_t>(n)].parent >= 0;
             n = nodes[static_cast<std::size_t>(n)].parent)
          path.push_back(nodes[static_cast<std::size_t>(n)].via);
        std::reverse(path.begin(), path.end());
        for (const Triple &t : path) push(t);
        return;
      }
      for (const Triple &t : local_moves(nodes[at].ctx, h)) {
        BlockContext next = step_with_blocks(nodes[at].ctx, t);
        if (seen.insert(next.instance.canonical_key()).second)
          nodes.push_back({std::move(next), static_cast<int>(at), t});
      }
    }
    throw Error(Errc::incomplete_trace, "guided collapse cannot " + what);
  }

private:
  void push(const Triple &t) {
    if (trace_.steps.empty()) trace_.initial_key = ctx_.instance.canonical_key();
    trace_.steps.push_back({t, step_transposition(ctx_.instance, t)});
    ctx_ = step_with_blocks(ctx_, t);
  }

  const Assembling &assembling_;
  BlockContext ctx_;
  StepTrace trace_;
  std::unordered_set<std::string> activated_;
};

} // namespace

StepTrace guided_collapse(const ReductionOutput &out, const Assignment &a) {
  const CnfFormula &f = out.formula;
  if (!f.satisfied_by(a))
    throw Error(Errc::unsatisfying_assignment, "assignment does not satisfy the formula");
  const FormulaStats st = f.stats();
  GuidedCollapse g(out.assembling);

  auto literal_side = [&](int i, bool negated) {
    const int q = (negated ? st.negative : st.positive)[static_cast<std::size_t>(i)];
    g.activate(x_name(i, negated));
    for (int j = 1; j <= q - 1; ++j) {
      auto [first, second] = chain_outputs(i, negated, j, q);
      g.activate(first);
      g.activate(second);
    }
  };

  for (int i = 1; i <= st.m; ++i) literal_side(i, !a.value(i));

  std::vector<int> first_true(static_cast<std::size_t>(st.gamma) + 1);
  for (int c = 1; c <= st.gamma; ++c) {
    const Clause &clause = f.clauses()[static_cast<std::size_t>(c - 1)];
    const int k = static_cast<int>(clause.size());
    int p0 = 1;
    while (!a.value(clause[static_cast<std::size_t>(p0 - 1)])) ++p0;
    first_true[static_cast<std::size_t>(c)] = p0;
    for (int p = std::max(p0, 2); p <= k; ++p) g.activate(p == k ? gamma_name(c) : v_name(c, p));
  }

  for (int c = 2; c <= st.gamma; ++c) g.activate(c == st.gamma ? kAPhi : w_name(c));

  for (int i = 1; i <= st.m - 1; ++i) {
    g.activate(a_phi_copy(i));
    g.activate(i == st.m - 1 ? a_phi_copy(st.m) : y_name(i + 1));
  }

  for (int i = 1; i <= st.m; ++i) literal_side(i, a.value(i));

  for (int c = 1; c <= st.gamma; ++c)
    for (int p = 2; p < first_true[static_cast<std::size_t>(c)]; ++p) g.activate(v_name(c, p));

  for (const VariableDecl &v : out.assembling.variables)
    if (!g.is_activated(v.id))
      throw Error(Errc::incomplete_trace, "guided collapse left " + v.id + " inactive");
  g.clear_blocks();
  return g.take();
}

std::vector<std::string> activation_sequence(const Assembling &a, const StepTrace &trace) {
  std::map<Triple, std::string> by_xyz;
  for (const VariableDecl &v : a.variables) by_xyz.emplace(v.xyz, v.id);
  replay_trace(a.instance(), trace);
  std::vector<std::string> out;
  for (const TraceStep &s : trace.steps)
    if (const auto it = by_xyz.find(s.triple); it != by_xyz.end()) out.push_back(it->second);
  return out;
}

Assignment extract_assignment(const ReductionOutput &out, const StepTrace &trace) {
  if (!replay_trace(out.assembling.instance(), trace).is_empty())
    throw Error(Errc::incomplete_trace, "trace does not collapse the instance");
  const std::vector<std::string> order = activation_sequence(out.assembling, trace);
  const auto a_phi = std::find(order.begin(), order.end(), kAPhi);
  if (a_phi == order.end()) throw Error(Errc::incomplete_trace, "trace never activates A_phi");
  Assignment a;
  for (int i = 1; i <= out.formula.variable_count(); ++i)
    if (std::find(order.begin(), a_phi, x_name(i, false)) != a_phi) a.true_vars.insert(i);
  if (!out.formula.satisfied_by(a))
    throw Error(Errc::unsatisfying_assignment, "extracted assignment does not satisfy the formula");
  return a;
}

} // namespace sbt
