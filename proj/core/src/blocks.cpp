#include "sbt/blocks.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sbt/error.hpp"

namespace sbt {

namespace {

struct Template {
  // Tokens "inN.r" (role r of input N), "outN.r" (role r of output N) or
  // "int.s" (internal symbol s).
  std::vector<std::string_view> word;
  std::vector<std::array<std::string_view, 3>> internal;
};

const Template &template_for(BlockKind kind) {
  static const Template copy{
      {"in0.a", "out0.y", "int.e", "in0.z", "int.d", "out1.y", "out0.x", "out0.b", "in0.c",
       "out1.x", "out1.b", "int.f"},
      {{"d", "e", "f"}}};
  static const Template conj{
      {"in0.a", "int.e", "in0.z", "in1.a", "in0.c", "in1.z", "int.d", "out0.y", "in1.c",
       "out0.x", "out0.b", "int.f"},
      {{"d", "e", "f"}}};
  static const Template disj{
      {"in0.a", "int.b'", "in0.z", "in1.a", "int.d", "out0.y", "int.a'", "out0.x", "out0.b",
       "int.f", "in1.z", "in0.c", "int.e", "int.c'", "in1.c"},
      {{"a'", "b'", "c'"}, {"d", "e", "f"}}};
  static const Template var{
      {"int.d1", "out0.y", "in0.a", "int.d2", "out1.y", "int.e1", "int.a'", "int.e2", "out0.x",
       "out0.b", "int.f1", "int.c'", "in0.z", "int.b'", "in0.c", "out1.x", "out1.b", "int.f2"},
      {{"d1", "e1", "f1"}, {"d2", "e2", "f2"}, {"a'", "b'", "c'"}}};
  static const Template driver{{"out0.x", "out0.b", "out0.y"}, {}};
  static const Template sink{{"in0.a", "in0.z", "in0.c"}, {}};
  switch (kind) {
  case BlockKind::copy: return copy;
  case BlockKind::conj: return conj;
  case BlockKind::disj: return disj;
  case BlockKind::var: return var;
  case BlockKind::driver: return driver;
  case BlockKind::sink: return sink;
  }
  throw std::logic_error("unknown block kind");
}

} // namespace

std::string_view to_string(BlockKind kind) noexcept {
  switch (kind) {
  case BlockKind::copy: return "copy";
  case BlockKind::conj: return "and";
  case BlockKind::disj: return "or";
  case BlockKind::var: return "var";
  case BlockKind::driver: return "driver";
  case BlockKind::sink: return "sink";
  }
  return "?";
}

BlockKind parse_block_kind(std::string_view name) {
  for (BlockKind k : {BlockKind::copy, BlockKind::conj, BlockKind::disj, BlockKind::var,
                      BlockKind::driver, BlockKind::sink})
    if (to_string(k) == name) return k;
  throw Error(Errc::parse_error, "unknown block kind '" + std::string(name) + "'");
}

bool is_basic(BlockKind kind) noexcept {
  return kind != BlockKind::driver && kind != BlockKind::sink;
}

Arity arity(BlockKind kind) noexcept {
  switch (kind) {
  case BlockKind::copy: return {1, 2};
  case BlockKind::conj: return {2, 1};
  case BlockKind::disj: return {2, 1};
  case BlockKind::var: return {1, 2};
  case BlockKind::driver: return {0, 1};
  case BlockKind::sink: return {1, 0};
  }
  return {0, 0};
}

std::string variable_symbol(std::string_view id, std::string_view role) {
  std::string s(id);
  s += '.';
  s += role;
  return s;
}

std::string internal_symbol(int block, std::string_view local) {
  return "B" + std::to_string(block + 1) + "." + std::string(local);
}

BlockWord instantiate_block(const BlockSpec &spec, int block_index) {
  const Arity ar = arity(spec.kind);
  if (static_cast<int>(spec.inputs.size()) != ar.inputs ||
      static_cast<int>(spec.outputs.size()) != ar.outputs)
    throw Error(Errc::arity_mismatch,
                "block '" + std::string(to_string(spec.kind)) + "' takes " +
                    std::to_string(ar.inputs) + " input(s) and " + std::to_string(ar.outputs) +
                    " output(s)");
  const Template &tpl = template_for(spec.kind);
  BlockWord out;
  out.word.reserve(tpl.word.size());
  for (std::string_view token : tpl.word) {
    const std::size_t dot = token.find('.');
    const std::string_view slot = token.substr(0, dot);
    const std::string_view role = token.substr(dot + 1);
    if (slot == "int") {
      out.word.push_back(internal_symbol(block_index, role));
    } else if (slot.starts_with("in")) {
      out.word.push_back(variable_symbol(spec.inputs.at(static_cast<std::size_t>(slot[2] - '0')), role));
    } else {
      out.word.push_back(variable_symbol(spec.outputs.at(static_cast<std::size_t>(slot[3] - '0')), role));
    }
  }
  for (const auto &t : tpl.internal)
    out.internal_triples.push_back({internal_symbol(block_index, t[0]),
                                    internal_symbol(block_index, t[1]),
                                    internal_symbol(block_index, t[2])});
  return out;
}

BlockDecomposition::BlockDecomposition(std::vector<int> starts, int span)
    : starts_(std::move(starts)), span_(span) {
  if (starts_.empty() || starts_.front() != 0)
    throw Error(Errc::undefined_decomposition, "block decomposition must start at 0");
  for (std::size_t h = 1; h < starts_.size(); ++h)
    if (starts_[h - 1] >= starts_[h])
      throw Error(Errc::undefined_decomposition, "block boundaries must increase strictly");
  if (starts_.back() >= span_)
    throw Error(Errc::undefined_decomposition, "last block boundary must be below the span");
}

int BlockDecomposition::block_of(int p) const {
  // last h with start(h) < p
  const auto it = std::lower_bound(starts_.begin(), starts_.end(), p);
  return static_cast<int>(it - starts_.begin()) - 1;
}

const VariableDecl &Assembling::variable(std::string_view id) const {
  const auto idx = variable_index(id);
  if (!idx) throw std::out_of_range("unknown variable '" + std::string(id) + "'");
  return variables[*idx];
}

std::optional<std::size_t> Assembling::variable_index(std::string_view id) const {
  const auto it = registry.find(std::string(id));
  if (it == registry.end()) return std::nullopt;
  return it->second;
}

Assembling assemble(std::vector<BlockSpec> specs) {
  if (specs.empty()) throw Error(Errc::unmatched_variable, "an assembling needs at least one block");
  struct Use {
    int source = -1;
    int target = -1;
  };
  std::map<std::string, Use> uses;
  std::vector<std::string> order;
  auto touch = [&](const std::string &id) -> Use & {
    auto [it, inserted] = uses.try_emplace(id);
    if (inserted) order.push_back(id);
    return it->second;
  };

  std::vector<std::string> word;
  std::vector<std::array<std::string, 3>> triples;
  std::vector<int> starts;
  for (std::size_t h = 0; h < specs.size(); ++h) {
    const BlockSpec &spec = specs[h];
    const BlockWord bw = instantiate_block(spec, static_cast<int>(h));
    starts.push_back(static_cast<int>(word.size()));
    word.insert(word.end(), bw.word.begin(), bw.word.end());
    triples.insert(triples.end(), bw.internal_triples.begin(), bw.internal_triples.end());
    for (const auto &id : spec.inputs) {
      Use &u = touch(id);
      if (u.target >= 0)
        throw Error(Errc::unmatched_variable, "variable '" + id + "' is the input of two blocks");
      u.target = static_cast<int>(h);
    }
    for (const auto &id : spec.outputs) {
      Use &u = touch(id);
      if (u.source >= 0)
        throw Error(Errc::unmatched_variable, "variable '" + id + "' is the output of two blocks");
      u.source = static_cast<int>(h);
    }
  }
  for (const auto &id : order) {
    const Use &u = uses.at(id);
    if (u.source < 0) throw Error(Errc::unmatched_variable, "variable '" + id + "' has no source block");
    if (u.target < 0) throw Error(Errc::unmatched_variable, "variable '" + id + "' has no target block");
    if (u.source == u.target)
      throw Error(Errc::unmatched_variable, "variable '" + id + "' links a block to itself");
    triples.push_back({variable_symbol(id, "a"), variable_symbol(id, "b"), variable_symbol(id, "c")});
    triples.push_back({variable_symbol(id, "x"), variable_symbol(id, "y"), variable_symbol(id, "z")});
  }

  const int span = static_cast<int>(word.size());
  Assembling out{std::move(specs), {},
                 BlockContext{TdtInstance::from_names(word, triples), BlockDecomposition(starts, span)},
                 {}};
  const TdtInstance &inst = out.context.instance;
  for (const auto &id : order) {
    const Use &u = uses.at(id);
    const auto abc = inst.find_triple(variable_symbol(id, "a"), variable_symbol(id, "b"),
                                      variable_symbol(id, "c"));
    const auto xyz = inst.find_triple(variable_symbol(id, "x"), variable_symbol(id, "y"),
                                      variable_symbol(id, "z"));
    out.registry.emplace(id, out.variables.size());
    out.variables.push_back({id, *abc, *xyz, u.source, u.target});
  }
  for (const VariableDecl &v : out.variables)
    if (auto why = variable_violation(out.context, v))
      throw Error(Errc::invalid_variable, "variable '" + v.id + "': " + *why);
  return out;
}

namespace {

struct Located {
  int pos;
  int block;
};

} // namespace

std::optional<std::string> variable_violation(const BlockContext &ctx, const VariableDecl &var) {
  const TdtInstance &inst = ctx.instance;
  const BlockDecomposition &dec = ctx.decomposition;
  auto locate = [&](SymbolId s) -> std::optional<Located> {
    const int p = inst.position_of(s);
    if (p == 0) return std::nullopt;
    return Located{p, dec.block_of(p)};
  };
  const auto a = locate(var.abc.a), b = locate(var.abc.b), c = locate(var.abc.c);
  const auto x = locate(var.xyz.a), y = locate(var.xyz.b), z = locate(var.xyz.c);
  if (!a || !b || !c || !x || !y || !z) return "some of its symbols are gone";
  if (!(b->block == x->block && x->block == y->block)) return "b, x, y are not in one block";
  if (!(a->block == c->block && c->block == z->block)) return "a, c, z are not in one block";
  if (a->block == b->block) return "source and target blocks coincide";
  if (x->pos < y->pos) {
    // x, b, y must be consecutive symbols in that order
    if (!(x->pos < b->pos && b->pos < y->pos)) return "x < y but b is not between them";
    for (int p = x->pos + 1; p < y->pos; ++p)
      if (p != b->pos && inst.at(p) != kDot) return "x, b, y are not consecutive";
  }
  if (!(a->pos < z->pos && z->pos < c->pos)) return "a < z < c does not hold";
  return std::nullopt;
}

bool satisfies_block_conditions(const BlockContext &ctx, const VariableDecl &var) {
  const TdtInstance &inst = ctx.instance;
  const BlockDecomposition &dec = ctx.decomposition;
  std::array<int, 6> blocks{};
  const std::array<SymbolId, 6> syms{var.abc.a, var.abc.b, var.abc.c, var.xyz.a, var.xyz.b, var.xyz.c};
  for (std::size_t r = 0; r < 6; ++r) {
    const int p = inst.position_of(syms[r]);
    if (p == 0) return false;
    blocks[r] = dec.block_of(p);
  }
  // b, x, y share h0; a, c, z share h1 != h0
  return blocks[1] == blocks[3] && blocks[3] == blocks[4] && blocks[0] == blocks[2] &&
         blocks[2] == blocks[5] && blocks[0] != blocks[1];
}

std::vector<const VariableDecl *> live_variables(const BlockContext &ctx,
                                                 const std::vector<VariableDecl> &vars) {
  const auto ts = ctx.instance.triples();
  std::vector<const VariableDecl *> out;
  for (const VariableDecl &v : vars)
    if (std::find(ts.begin(), ts.end(), v.xyz) != ts.end()) out.push_back(&v);
  return out;
}

bool is_internal(const BlockContext &ctx, const Triple &t) {
  const std::vector<int> pos = ctx.instance.positions();
  const int ha = ctx.decomposition.block_of(pos[t.a]);
  return ha == ctx.decomposition.block_of(pos[t.b]) && ha == ctx.decomposition.block_of(pos[t.c]);
}

bool is_valid_context(const BlockContext &ctx, const std::vector<VariableDecl> &vars) {
  const auto live = live_variables(ctx, vars);
  std::vector<Triple> claimed;
  for (const VariableDecl *v : live) {
    if (variable_violation(ctx, *v)) return false;
    claimed.push_back(v->abc);
    claimed.push_back(v->xyz);
  }
  for (const Triple &t : ctx.instance.triples()) {
    const bool external = !is_internal(ctx, t);
    const bool in_var = std::find(claimed.begin(), claimed.end(), t) != claimed.end();
    if (external != in_var) return false;
  }
  return true;
}

BlockContext step_with_blocks(const BlockContext &ctx, const Triple &t) {
  const Transposition tau = step_transposition(ctx.instance, t);
  const BlockDecomposition &dec = ctx.decomposition;
  const int bi = dec.block_of(tau.i()), bj = dec.block_of(tau.j()), bk = dec.block_of(tau.k());
  if (bi != bj && bj != bk && bi != bk)
    throw Error(Errc::undefined_decomposition,
                "step on " + ctx.instance.triple_string(t) + " spans three blocks");
  std::vector<int> starts;
  starts.reserve(dec.starts().size());
  for (int s : dec.starts()) starts.push_back(tau.inverse_at(s));
  for (int h = 0; h < dec.block_count(); ++h)
    if (tau.inverse_at(dec.start(h)) >= tau.inverse_at(dec.end(h)))
      throw Error(Errc::undefined_decomposition, "block " + std::to_string(h + 1) + " collapses");
  return BlockContext{apply_step(ctx.instance, t), BlockDecomposition(std::move(starts), dec.span())};
}

BlockProjection project_block(const BlockContext &ctx, int h) {
  BlockProjection out;
  for (int p = ctx.decomposition.start(h) + 1; p <= ctx.decomposition.end(h); ++p) {
    const SymbolId s = ctx.instance.at(p);
    if (s == kDot) {
      out.full.emplace_back(".");
    } else {
      out.full.push_back(ctx.instance.alphabet().name(s));
      out.compact.push_back(ctx.instance.alphabet().name(s));
    }
  }
  return out;
}

} // namespace sbt
