#include "sbt/tdt.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <tuple>

#include "sbt/error.hpp"
#include "text_util.hpp"

namespace sbt {

namespace {

[[noreturn]] void invalid(const std::string &what) {
  throw Error(Errc::invalid_instance, what);
}

} // namespace

SymbolId Alphabet::add(std::string name) {
  if (name.empty()) invalid("empty symbol name");
  if (name == ".") invalid("'.' is reserved for dots");
  if (detail::has_space(name)) invalid("symbol name '" + name + "' contains whitespace");
  const auto id = static_cast<SymbolId>(names_.size());
  if (!index_.emplace(name, id).second) invalid("duplicate symbol '" + name + "'");
  names_.push_back(std::move(name));
  return id;
}

std::optional<SymbolId> Alphabet::find(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> SuccMap::domain() const {
  std::vector<int> out;
  for (int p = 1; p <= span; ++p)
    if (in_domain(p)) out.push_back(p);
  return out;
}

std::vector<int> SuccMap::inverse() const {
  std::vector<int> inv(next.size(), 0);
  for (int p = 1; p <= span; ++p)
    if (in_domain(p)) inv[static_cast<std::size_t>((*this)(p))] = p;
  return inv;
}

TdtInstance TdtInstance::from_names(const std::vector<std::string> &word,
                                    const std::vector<std::array<std::string, 3>> &triples) {
  auto alphabet = std::make_shared<Alphabet>();
  std::vector<SymbolId> ids;
  ids.reserve(word.size());
  for (const auto &token : word) {
    if (token == ".") {
      ids.push_back(kDot);
      continue;
    }
    if (alphabet->find(token)) invalid("symbol '" + token + "' occurs twice in the word");
    ids.push_back(alphabet->add(token));
  }
  std::vector<Triple> ts;
  ts.reserve(triples.size());
  for (const auto &names : triples) {
    std::array<SymbolId, 3> t{};
    for (std::size_t r = 0; r < 3; ++r) {
      const auto id = alphabet->find(names[r]);
      if (!id) invalid("triple symbol '" + names[r] + "' does not occur in the word");
      t[r] = *id;
    }
    ts.push_back({t[0], t[1], t[2]});
  }
  TdtInstance inst(std::move(alphabet), std::move(ids), std::move(ts));
  inst.validate();
  return inst;
}

TdtInstance TdtInstance::from_ids(std::shared_ptr<const Alphabet> alphabet,
                                  std::vector<SymbolId> word, std::vector<Triple> triples) {
  TdtInstance inst(std::move(alphabet), std::move(word), std::move(triples));
  inst.validate();
  return inst;
}

TdtInstance TdtInstance::empty(int span) {
  if (span < 0) invalid("negative span");
  return TdtInstance(std::make_shared<Alphabet>(),
                     std::vector<SymbolId>(static_cast<std::size_t>(span), kDot), {});
}

void TdtInstance::validate() const {
  if (!alphabet_) invalid("missing alphabet");
  const std::size_t sigma = alphabet_->size();
  // 0 = absent, 1 = in word, 2 = in word and claimed by a triple
  std::vector<unsigned char> state(sigma, 0);
  std::size_t placed = 0;
  for (SymbolId s : word_) {
    if (s == kDot) continue;
    if (s >= sigma) invalid("word refers to an unknown symbol id");
    if (state[s]) invalid("symbol '" + alphabet_->name(s) + "' occurs twice in the word");
    state[s] = 1;
    ++placed;
  }
  for (const Triple &t : triples_) {
    if (t.a == t.b || t.b == t.c || t.a == t.c) invalid("triple repeats a symbol");
    for (SymbolId s : {t.a, t.b, t.c}) {
      if (s >= sigma || state[s] == 0) invalid("triple symbol is not placed in the word");
      if (state[s] == 2)
        invalid("symbol '" + alphabet_->name(s) + "' belongs to more than one triple");
      state[s] = 2;
    }
  }
  if (placed != 3 * triples_.size()) {
    for (SymbolId s : word_)
      if (s != kDot && state[s] == 1)
        invalid("symbol '" + alphabet_->name(s) + "' belongs to no triple");
  }
}

std::vector<int> TdtInstance::positions() const {
  std::vector<int> pos(alphabet_->size(), 0);
  for (std::size_t x = 0; x < word_.size(); ++x)
    if (word_[x] != kDot) pos[word_[x]] = static_cast<int>(x) + 1;
  return pos;
}

int TdtInstance::position_of(SymbolId s) const {
  for (std::size_t x = 0; x < word_.size(); ++x)
    if (word_[x] == s) return static_cast<int>(x) + 1;
  return 0;
}

std::optional<Triple> TdtInstance::find_triple(std::string_view a, std::string_view b,
                                               std::string_view c) const {
  const auto ia = alphabet_->find(a);
  const auto ib = alphabet_->find(b);
  const auto ic = alphabet_->find(c);
  if (!ia || !ib || !ic) return std::nullopt;
  const Triple wanted{*ia, *ib, *ic};
  for (const Triple &t : triples_)
    if (t == wanted) return t;
  return std::nullopt;
}

std::optional<Triple> TdtInstance::triple_of(SymbolId s) const {
  for (const Triple &t : triples_)
    if (t.contains(s)) return t;
  return std::nullopt;
}

std::string TdtInstance::word_string() const {
  std::string out;
  for (std::size_t x = 0; x < word_.size(); ++x) {
    if (x) out += ' ';
    out += word_[x] == kDot ? std::string(".") : alphabet_->name(word_[x]);
  }
  return out;
}

std::string TdtInstance::compact_word_string() const {
  std::string out;
  for (SymbolId s : word_) {
    if (s == kDot) continue;
    if (!out.empty()) out += ' ';
    out += alphabet_->name(s);
  }
  return out;
}

std::string TdtInstance::triple_string(const Triple &t) const {
  return "(" + alphabet_->name(t.a) + "," + alphabet_->name(t.b) + "," +
         alphabet_->name(t.c) + ")";
}

std::string TdtInstance::canonical_key() const {
  // role code per symbol: 3 * triple index + role
  std::vector<std::uint32_t> role(alphabet_->size(), 0);
  for (std::size_t ti = 0; ti < triples_.size(); ++ti) {
    role[triples_[ti].a] = static_cast<std::uint32_t>(3 * ti);
    role[triples_[ti].b] = static_cast<std::uint32_t>(3 * ti + 1);
    role[triples_[ti].c] = static_cast<std::uint32_t>(3 * ti + 2);
  }
  std::vector<std::uint32_t> rank(triples_.size(), 0); // 0 = unseen, else rank + 1
  std::uint32_t next_rank = 0;
  std::string key;
  key.reserve(2 * word_.size());
  for (SymbolId s : word_) {
    std::uint32_t code = 0;
    if (s != kDot) {
      const std::uint32_t ti = role[s] / 3;
      if (rank[ti] == 0) rank[ti] = ++next_rank;
      code = 3 * (rank[ti] - 1) + role[s] % 3 + 1;
    }
    key.push_back(static_cast<char>(code & 0xff));
    key.push_back(static_cast<char>((code >> 8) & 0xff));
  }
  return key;
}

bool operator==(const TdtInstance &lhs, const TdtInstance &rhs) {
  if (lhs.span() != rhs.span() || lhs.triple_count() != rhs.triple_count()) return false;
  auto name = [](const TdtInstance &inst, SymbolId s) -> const std::string & {
    return inst.alphabet().name(s);
  };
  for (int p = 1; p <= lhs.span(); ++p) {
    const SymbolId a = lhs.at(p);
    const SymbolId b = rhs.at(p);
    if ((a == kDot) != (b == kDot)) return false;
    if (a != kDot && name(lhs, a) != name(rhs, b)) return false;
  }
  using Named = std::tuple<std::string, std::string, std::string>;
  auto named = [&](const TdtInstance &inst) {
    std::set<Named> out;
    for (const Triple &t : inst.triples())
      out.emplace(name(inst, t.a), name(inst, t.b), name(inst, t.c));
    return out;
  };
  return named(lhs) == named(rhs);
}

SuccMap succ_map(const TdtInstance &inst) {
  SuccMap m;
  m.span = inst.span();
  m.next.assign(static_cast<std::size_t>(inst.span()) + 1, 0);
  const std::vector<int> pos = inst.positions();
  for (const Triple &t : inst.triples()) {
    const int pa = pos[t.a], pb = pos[t.b], pc = pos[t.c];
    m.next[static_cast<std::size_t>(pa)] = pb;
    m.next[static_cast<std::size_t>(pb)] = pc;
    m.next[static_cast<std::size_t>(pc)] = pa;
  }
  return m;
}

namespace {

TriplePositions positions_from(int pa, int pb, int pc) {
  if (pa < pb && pa < pc) return {pa, pb, pc};
  if (pb < pa && pb < pc) return {pb, pc, pa};
  return {pc, pa, pb};
}

bool is_live(const TdtInstance &inst, const Triple &t) {
  const auto ts = inst.triples();
  return std::find(ts.begin(), ts.end(), t) != ts.end();
}

} // namespace

TriplePositions triple_positions(const TdtInstance &inst, const Triple &t) {
  return positions_from(inst.position_of(t.a), inst.position_of(t.b), inst.position_of(t.c));
}

bool is_well_ordered(const TdtInstance &inst, const Triple &t) {
  return is_live(inst, t) && triple_positions(inst, t).well_ordered();
}

std::vector<Triple> enabled_triples(const TdtInstance &inst) {
  const std::vector<int> pos = inst.positions();
  std::vector<std::pair<int, Triple>> found;
  for (const Triple &t : inst.triples()) {
    const TriplePositions tp = positions_from(pos[t.a], pos[t.b], pos[t.c]);
    if (tp.well_ordered()) found.emplace_back(tp.i, t);
  }
  std::sort(found.begin(), found.end(),
            [](const auto &l, const auto &r) { return l.first < r.first; });
  std::vector<Triple> out;
  out.reserve(found.size());
  for (const auto &f : found) out.push_back(f.second);
  return out;
}

Transposition step_transposition(const TdtInstance &inst, const Triple &t) {
  if (!is_live(inst, t))
    throw Error(Errc::not_well_ordered, "triple is not part of the instance");
  const TriplePositions tp = triple_positions(inst, t);
  if (!tp.well_ordered())
    throw Error(Errc::not_well_ordered, inst.triple_string(t) + " is not well-ordered");
  return Transposition(tp.i, tp.j, tp.k);
}

TdtInstance apply_step(const TdtInstance &inst, const Triple &t) {
  const Transposition tau = step_transposition(inst, t);
  const int n = inst.span();
  std::vector<SymbolId> word(static_cast<std::size_t>(n), kDot);
  // psi' = tau^{-1} o psi, i.e. word'(x) = word(tau(x))
  for (int x = 1; x <= n; ++x) {
    const SymbolId s = inst.at(tau(x));
    word[static_cast<std::size_t>(x - 1)] = t.contains(s) ? kDot : s;
  }
  std::vector<Triple> triples;
  triples.reserve(inst.triple_count() - 1);
  for (const Triple &other : inst.triples())
    if (other != t) triples.push_back(other);
  return TdtInstance(inst.alphabet_, std::move(word), std::move(triples));
}

bool is_equivalent(const TdtInstance &inst, const Permutation &p) {
  if (p.n() != inst.span())
    throw Error(Errc::span_mismatch, "permutation span " + std::to_string(p.n()) +
                                         " differs from instance span " +
                                         std::to_string(inst.span()));
  if (p(0) != 0) return false;
  const SuccMap succ = succ_map(inst);
  const std::vector<int> pred = succ.inverse();
  for (int v = 1; v <= inst.span(); ++v) {
    const int anchor = succ.in_domain(v) ? pred[static_cast<std::size_t>(v)] : v;
    if (p(v) != p(anchor - 1) + 1) return false;
  }
  return true;
}

TdtInstance parse_tdt(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::optional<int> span;
  std::optional<std::vector<std::string>> word;
  std::vector<std::array<std::string, 3>> triples;
  for (std::string_view line : lines) {
    const auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "span") {
      if (span || tokens.size() != 2) throw Error(Errc::parse_error, "bad 'span' line");
      int value = -1;
      const auto [ptr, ec] =
          std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(), value);
      if (ec != std::errc{} || ptr != tokens[1].data() + tokens[1].size() || value < 0)
        throw Error(Errc::parse_error, "bad span value '" + std::string(tokens[1]) + "'");
      span = value;
    } else if (tokens[0] == "word") {
      if (!span) throw Error(Errc::parse_error, "'word' line before 'span' line");
      if (word) throw Error(Errc::parse_error, "duplicate 'word' line");
      if (tokens.size() - 1 != static_cast<std::size_t>(*span))
        throw Error(Errc::parse_error, "word has " + std::to_string(tokens.size() - 1) +
                                           " tokens, span is " + std::to_string(*span));
      word.emplace(tokens.begin() + 1, tokens.end());
    } else if (tokens[0] == "triple") {
      if (tokens.size() != 4) throw Error(Errc::parse_error, "'triple' needs three symbols");
      triples.push_back({std::string(tokens[1]), std::string(tokens[2]), std::string(tokens[3])});
    } else {
      throw Error(Errc::parse_error, "unknown line '" + std::string(line) + "'");
    }
  }
  if (!span) throw Error(Errc::parse_error, "missing 'span' line");
  if (!word) throw Error(Errc::parse_error, "missing 'word' line");
  return TdtInstance::from_names(*word, triples);
}

std::string format_tdt(const TdtInstance &inst) {
  std::ostringstream os;
  os << "span " << inst.span() << "\n";
  os << "word";
  for (int p = 1; p <= inst.span(); ++p) {
    const SymbolId s = inst.at(p);
    os << ' ' << (s == kDot ? std::string(".") : inst.alphabet().name(s));
  }
  os << "\n";
  const std::vector<int> pos = inst.positions();
  std::vector<std::pair<int, Triple>> ordered;
  for (const Triple &t : inst.triples())
    ordered.emplace_back(std::min({pos[t.a], pos[t.b], pos[t.c]}), t);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto &l, const auto &r) { return l.first < r.first; });
  for (const auto &[first, t] : ordered)
    os << "triple " << inst.alphabet().name(t.a) << ' ' << inst.alphabet().name(t.b) << ' '
       << inst.alphabet().name(t.c) << "\n";
  return os.str();
}

} // namespace sbt
