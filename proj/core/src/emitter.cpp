#include "sbt/emitter.hpp"

#include <algorithm>

#include "sbt/error.hpp"

namespace sbt {

namespace {

enum class Base { p, alpha0, alpha1, beta0, beta1 };

struct Image {
  Base base;
  int offset;
};

// Images of positions s+1 .. t of one block.
const std::vector<Image> &image_table(BlockKind kind) {
  using B = Base;
  static const std::vector<Image> copy{
      {B::alpha0, 2}, {B::p, 8},      {B::p, 4},      {B::p, 3},      {B::alpha1, 2}, {B::p, 7},
      {B::beta0, 1},  {B::alpha0, 1}, {B::p, 6},      {B::beta1, 1},  {B::alpha1, 1}, {B::p, 9}};
  static const std::vector<Image> conj{
      {B::p, 14},     {B::p, 7},  {B::p, 3},      {B::p, 13},     {B::p, 9},      {B::p, 6},
      {B::alpha0, 2}, {B::p, 12}, {B::p, 11},     {B::beta0, 1},  {B::alpha0, 1}, {B::p, 15}};
  static const std::vector<Image> disj{
      {B::p, 7},     {B::p, 13},     {B::p, 3},  {B::p, 9},  {B::alpha0, 2},
      {B::p, 12},    {B::p, 11},     {B::beta0, 1}, {B::alpha0, 1}, {B::p, 16},
      {B::p, 6},     {B::p, 15},     {B::p, 10}, {B::p, 8},  {B::p, 18}};
  static const std::vector<Image> var{
      {B::alpha0, 2}, {B::p, 5},  {B::p, 3},      {B::alpha1, 2}, {B::p, 12},     {B::p, 1},
      {B::p, 14},     {B::p, 4},  {B::beta0, 1},  {B::alpha0, 1}, {B::p, 13},     {B::p, 9},
      {B::p, 8},      {B::p, 2},  {B::p, 11},     {B::beta1, 1},  {B::alpha1, 1}, {B::p, 15}};
  switch (kind) {
  case BlockKind::copy: return copy;
  case BlockKind::conj: return conj;
  case BlockKind::disj: return disj;
  case BlockKind::var: return var;
  default: break;
  }
  throw Error(Errc::non_basic_block,
              "no permutation layout for block kind '" + std::string(to_string(kind)) + "'");
}

// (alpha, beta) offsets from p for input slot `slot` of a block of this kind.
std::pair<int, int> input_offsets(BlockKind kind, std::size_t slot) {
  switch (kind) {
  case BlockKind::copy: return {0, 4};
  case BlockKind::conj: return slot == 0 ? std::pair{0, 7} : std::pair{3, 9};
  case BlockKind::disj: return slot == 0 ? std::pair{0, 13} : std::pair{3, 16};
  case BlockKind::var: return {5, 9};
  default: break;
  }
  throw Error(Errc::non_basic_block,
              "no permutation layout for block kind '" + std::string(to_string(kind)) + "'");
}

} // namespace

Layout compute_layout(const Assembling &a) {
  const BlockDecomposition &dec = a.decomposition();
  Layout lay;
  int p = 0;
  for (int h = 0; h < dec.block_count(); ++h) {
    const BlockSpec &spec = a.specs[static_cast<std::size_t>(h)];
    if (!is_basic(spec.kind))
      throw Error(Errc::non_basic_block,
                  "block " + std::to_string(h + 1) + " is a " + std::string(to_string(spec.kind)) +
                      " block");
    const Arity ar = arity(spec.kind);
    const int q = p + dec.end(h) - dec.start(h) + 3 * (ar.inputs - ar.outputs);
    lay.p.push_back(p);
    lay.q.push_back(q);
    for (std::size_t slot = 0; slot < spec.inputs.size(); ++slot) {
      const auto [da, db] = input_offsets(spec.kind, slot);
      lay.alpha[spec.inputs[slot]] = p + da;
      lay.beta[spec.inputs[slot]] = p + db;
    }
    p = q;
  }
  for (int h = 0; h < dec.block_count(); ++h) {
    const BlockSpec &spec = a.specs[static_cast<std::size_t>(h)];
    std::vector<int> set;
    for (int v = lay.p[static_cast<std::size_t>(h)] + 1; v <= lay.q[static_cast<std::size_t>(h)]; ++v)
      set.push_back(v);
    for (const auto &id : spec.outputs)
      for (int v : {lay.alpha.at(id) + 1, lay.alpha.at(id) + 2, lay.beta.at(id) + 1}) set.push_back(v);
    for (const auto &id : spec.inputs)
      for (int v : {lay.alpha.at(id) + 1, lay.alpha.at(id) + 2, lay.beta.at(id) + 1})
        set.erase(std::remove(set.begin(), set.end(), v), set.end());
    std::sort(set.begin(), set.end());
    lay.images.push_back(std::move(set));
  }
  return lay;
}

EmittedPermutation emit_permutation(const Assembling &a) {
  Layout lay = compute_layout(a);
  const BlockDecomposition &dec = a.decomposition();
  std::vector<int> images(static_cast<std::size_t>(dec.span()) + 1, 0);
  for (int h = 0; h < dec.block_count(); ++h) {
    const BlockSpec &spec = a.specs[static_cast<std::size_t>(h)];
    const int p = lay.p[static_cast<std::size_t>(h)];
    auto out_alpha = [&](std::size_t k) { return lay.alpha.at(spec.outputs.at(k)); };
    auto out_beta = [&](std::size_t k) { return lay.beta.at(spec.outputs.at(k)); };
    const auto &table = image_table(spec.kind);
    for (std::size_t u = 0; u < table.size(); ++u) {
      const Image &img = table[u];
      int base = p;
      switch (img.base) {
      case Base::p: break;
      case Base::alpha0: base = out_alpha(0); break;
      case Base::alpha1: base = out_alpha(1); break;
      case Base::beta0: base = out_beta(0); break;
      case Base::beta1: base = out_beta(1); break;
      }
      images[static_cast<std::size_t>(dec.start(h)) + u + 1] = base + img.offset;
    }
  }
  return {Permutation(std::move(images)), std::move(lay)};
}

std::vector<std::string> check_emission(const Assembling &a, const EmittedPermutation &e) {
  std::vector<std::string> bad;
  const TdtInstance &inst = a.instance();
  const Permutation &pi = e.permutation;
  const Layout &lay = e.layout;
  const BlockDecomposition &dec = a.decomposition();
  const int n = inst.span();
  if (pi.n() != n) return {"span differs from the instance"};

  const std::vector<int> pos = inst.positions();
  std::vector<bool> covered(static_cast<std::size_t>(n) + 1, false);
  auto expect = [&](const std::string &rule, int at, int want) {
    if (pi(at) != want)
      bad.push_back(rule + ": pi(" + std::to_string(at) + ") = " + std::to_string(pi(at)) +
                    ", expected " + std::to_string(want));
  };
  for (const VariableDecl &v : a.variables) {
    const int al = lay.alpha_of(v.id), be = lay.beta_of(v.id);
    const int pa = pos[v.abc.a], pb = pos[v.abc.b], pc = pos[v.abc.c];
    const int px = pos[v.xyz.a], py = pos[v.xyz.b], pz = pos[v.xyz.c];
    expect(v.id + " R1", pz, al + 3);
    expect(v.id + " R2", pc, be + 2);
    expect(v.id + " R3", px, be + 1);
    expect(v.id + " R4", pb, al + 1);
    expect(v.id + " P3", pa - 1, al);
    expect(v.id + " P4", pz - 1, be);
    expect(v.id + " P5", py - 1, al + 2);
    expect(v.id + " P6", pb - 1, be + 1);
    for (int u : {pz, pc, px, pb}) covered[static_cast<std::size_t>(u)] = true;
  }
  const SuccMap succ = succ_map(inst);
  const std::vector<int> pred = succ.inverse();
  for (int u = 1; u <= n; ++u) {
    if (covered[static_cast<std::size_t>(u)]) continue;
    if (succ.in_domain(u))
      expect("R5", u, pi(pred[static_cast<std::size_t>(u)] - 1) + 1);
    else
      expect("adjacency", u, pi(u - 1) + 1);
  }
  for (int h = 0; h < dec.block_count(); ++h) {
    expect("block start", dec.start(h), lay.p[static_cast<std::size_t>(h)]);
    expect("block end", dec.end(h), lay.q[static_cast<std::size_t>(h)]);
    std::vector<int> got;
    for (int u = dec.start(h) + 1; u <= dec.end(h); ++u) got.push_back(pi(u));
    std::sort(got.begin(), got.end());
    if (got != lay.images[static_cast<std::size_t>(h)])
      bad.push_back("block " + std::to_string(h + 1) + " does not map onto its image set");
  }
  return bad;
}

bool is_three_permutation(const Permutation &p) {
  const int n = p.n();
  const auto inv = p.inverse_images();
  std::vector<int> succ(static_cast<std::size_t>(n) + 1);
  for (int u = 1; u <= n; ++u) {
    succ[static_cast<std::size_t>(u)] = inv[static_cast<std::size_t>(p(u - 1) + 1)];
    if (succ[static_cast<std::size_t>(u)] == u) return false;
  }
  for (int u = 1; u <= n; ++u) {
    const int s3 = succ[static_cast<std::size_t>(succ[static_cast<std::size_t>(succ[static_cast<std::size_t>(u)])])];
    if (s3 != u) return false;
  }
  return true;
}

} // namespace sbt
