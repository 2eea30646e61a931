#include "sbt/behavior.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <unordered_map>

#include "sbt/error.hpp"

namespace sbt {

Harness make_harness(BlockKind kind) {
  if (!is_basic(kind))
    throw Error(Errc::non_basic_block, "harness needs a basic block, got '" +
                                           std::string(to_string(kind)) + "'");
  const Arity ar = arity(kind);
  auto names = [](int count) {
    return count == 1 ? std::vector<std::string>{"A"} : std::vector<std::string>{"A1", "A2"};
  };
  std::vector<std::string> inputs = names(ar.inputs), outputs = names(ar.outputs);
  std::vector<BlockSpec> specs;
  for (const auto &id : inputs) specs.push_back({BlockKind::driver, {}, {id}, "driver"});
  specs.push_back({kind, inputs, outputs, std::string(to_string(kind))});
  for (const auto &id : outputs) specs.push_back({BlockKind::sink, {id}, {}, "sink"});
  return Harness{kind, assemble(std::move(specs)), ar.inputs, std::move(inputs), std::move(outputs)};
}

namespace {

std::string state_key(const BlockContext &ctx) {
  std::string key = ctx.instance.canonical_key();
  for (int s : ctx.decomposition.starts()) {
    key.push_back(static_cast<char>(s & 0xff));
    key.push_back(static_cast<char>(s >> 8));
  }
  return key;
}

// Exhaustive exploration; each state remembers its successors and the set
// of activation-order suffixes leading from it to the empty instance.
class Explorer {
public:
  Explorer(const std::vector<VariableDecl> &vars, std::uint64_t budget) : budget_(budget) {
    for (std::size_t v = 0; v < vars.size(); ++v) by_xyz_.emplace(vars[v].xyz, static_cast<int>(v));
  }

  struct Succ {
    Triple triple;
    int child;
  };
  struct State {
    BlockContext ctx;
    std::vector<Succ> succ;
    std::set<std::vector<int>> orders;
  };

  int visit(const BlockContext &ctx) {
    std::string key = state_key(ctx);
    if (const auto it = index_.find(key); it != index_.end()) return it->second;
    if (states_.size() >= budget_)
      throw Error(Errc::budget_exhausted, "behavior exploration exceeded " +
                                              std::to_string(budget_) + " states");
    const int id = static_cast<int>(states_.size());
    states_.push_back(std::make_unique<State>(State{ctx, {}, {}}));
    index_.emplace(std::move(key), id);
    if (ctx.instance.is_empty()) {
      states_[static_cast<std::size_t>(id)]->orders.insert(std::vector<int>{});
      return id;
    }
    for (const Triple &t : enabled_triples(ctx.instance)) {
      const int child = visit(step_with_blocks(ctx, t));
      State &self = *states_[static_cast<std::size_t>(id)];
      self.succ.push_back({t, child});
      const auto var = by_xyz_.find(t);
      for (const auto &suffix : states_[static_cast<std::size_t>(child)]->orders) {
        if (var == by_xyz_.end()) {
          self.orders.insert(suffix);
        } else {
          std::vector<int> order{var->second};
          order.insert(order.end(), suffix.begin(), suffix.end());
          self.orders.insert(std::move(order));
        }
      }
    }
    return id;
  }

  const State &state(int id) const { return *states_[static_cast<std::size_t>(id)]; }
  std::size_t size() const noexcept { return states_.size(); }
  std::optional<int> variable_of(const Triple &t) const {
    const auto it = by_xyz_.find(t);
    if (it == by_xyz_.end()) return std::nullopt;
    return it->second;
  }

private:
  std::uint64_t budget_;
  std::map<Triple, int> by_xyz_;
  std::vector<std::unique_ptr<State>> states_;
  std::unordered_map<std::string, int> index_;
};

} // namespace

std::set<ActivationOrder> activation_orders(const BlockContext &ctx,
                                            const std::vector<VariableDecl> &vars,
                                            std::uint64_t node_budget) {
  Explorer ex(vars, node_budget);
  const int root = ex.visit(ctx);
  std::set<ActivationOrder> out;
  for (const auto &order : ex.state(root).orders) {
    ActivationOrder named;
    for (int v : order) named.push_back(vars[static_cast<std::size_t>(v)].id);
    out.insert(std::move(named));
  }
  return out;
}

BehaviorGraph behavior_graph(const Harness &h, std::uint64_t node_budget) {
  const auto &vars = h.assembling.variables;
  Explorer ex(vars, node_budget);
  const int root = ex.visit(h.assembling.context);

  BehaviorGraph g;
  std::unordered_map<std::string, int> node_of;
  auto node = [&](const BlockContext &ctx) {
    std::string label;
    for (const auto &s : project_block(ctx, h.block).compact) {
      if (!label.empty()) label += ' ';
      label += s;
    }
    const auto [it, inserted] = node_of.try_emplace(label, static_cast<int>(g.nodes.size()));
    if (inserted) g.nodes.push_back(label);
    return it->second;
  };
  g.initial = node(ex.state(root).ctx);

  std::set<std::tuple<int, int, int, std::string>> seen_edges;
  for (std::size_t s = 0; s < ex.size(); ++s) {
    const auto &st = ex.state(static_cast<int>(s));
    if (st.orders.empty()) continue;
    const int from = node(st.ctx);
    for (const auto &[t, child] : st.succ) {
      const auto &cs = ex.state(child);
      if (cs.orders.empty()) continue;
      const int to = node(cs.ctx);
      if (to == from) continue;
      EdgeKind kind = EdgeKind::internal;
      std::string label = st.ctx.instance.triple_string(t);
      if (const auto v = ex.variable_of(t)) {
        const std::string &id = vars[static_cast<std::size_t>(*v)].id;
        const bool input = std::find(h.inputs.begin(), h.inputs.end(), id) != h.inputs.end();
        kind = input ? EdgeKind::input : EdgeKind::output;
        label = id;
      }
      if (seen_edges.emplace(from, to, static_cast<int>(kind), label).second)
        g.edges.push_back({from, to, kind, label});
    }
  }
  return g;
}

bool BehaviorGraph::is_acyclic() const {
  std::vector<int> indegree(nodes.size(), 0);
  for (const Edge &e : edges) ++indegree[static_cast<std::size_t>(e.to)];
  std::vector<int> ready;
  for (std::size_t v = 0; v < nodes.size(); ++v)
    if (indegree[v] == 0) ready.push_back(static_cast<int>(v));
  std::size_t done = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++done;
    for (const Edge &e : edges)
      if (e.from == v && --indegree[static_cast<std::size_t>(e.to)] == 0) ready.push_back(e.to);
  }
  return done == nodes.size();
}

std::vector<int> BehaviorGraph::terminals() const {
  std::vector<bool> has_out(nodes.size(), false);
  for (const Edge &e : edges) has_out[static_cast<std::size_t>(e.from)] = true;
  std::vector<int> out;
  for (std::size_t v = 0; v < nodes.size(); ++v)
    if (!has_out[v]) out.push_back(static_cast<int>(v));
  return out;
}

std::string BehaviorGraph::to_dot(std::string_view name) const {
  auto quote = [](const std::string &s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') q += '\\';
      q += ch;
    }
    return q + "\"";
  };
  std::string out = "digraph " + quote(std::string(name)) + " {\n  node [shape=box];\n";
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    out += "  n" + std::to_string(v) + " [label=" + quote(nodes[v].empty() ? "(empty)" : nodes[v]);
    if (static_cast<int>(v) == initial) out += ", penwidth=2";
    out += "];\n";
  }
  for (const Edge &e : edges) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=" + quote(e.label);
    switch (e.kind) {
    case EdgeKind::internal: break;
    case EdgeKind::input: out += ", style=bold, penwidth=3"; break;
    case EdgeKind::output: out += ", color=\"black:white:black\""; break;
    }
    out += "];\n";
  }
  return out + "}\n";
}

} // namespace sbt
