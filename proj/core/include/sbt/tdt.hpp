#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sbt/permutation.hpp"

namespace sbt {

using SymbolId = std::uint32_t;
inline constexpr SymbolId kDot = std::numeric_limits<SymbolId>::max();

/// Symbol names of an instance family. Shared, never mutated after the
/// initial instance is built, so every state derived by 3DT-steps refers to
/// the same table.
class Alphabet {
public:
  /// Throws Error(invalid_instance) for an empty name, a name containing
  /// whitespace, the dot token ".", or a duplicate.
  SymbolId add(std::string name);
  std::optional<SymbolId> find(std::string_view name) const;
  const std::string &name(SymbolId id) const { return names_.at(id); }
  std::size_t size() const noexcept { return names_.size(); }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, SymbolId> index_;
};

/// Ordered triple (a, b, c) of pairwise distinct symbols.
struct Triple {
  SymbolId a;
  SymbolId b;
  SymbolId c;

  bool contains(SymbolId s) const noexcept { return s == a || s == b || s == c; }
  friend bool operator==(const Triple &, const Triple &) = default;
  friend auto operator<=>(const Triple &, const Triple &) = default;
};

/// succ_I on the domain L, indexed by position (1-based). next[p] == 0 for
/// positions outside L.
struct SuccMap {
  int span = 0;
  std::vector<int> next;

  bool in_domain(int p) const { return next[static_cast<std::size_t>(p)] != 0; }
  int operator()(int p) const { return next[static_cast<std::size_t>(p)]; }
  std::vector<int> domain() const;
  /// The inverse map, same indexing.
  std::vector<int> inverse() const;
};

/// A 3DT-instance in word representation: span n, a length-n word over
/// symbols and dots, and the triples partitioning the placed symbols.
/// psi is implicit: the position of a symbol is its index in the word + 1.
class TdtInstance {
public:
  /// Builds from word tokens ("." is a dot) and triples given by name.
  /// Validates every instance invariant; throws Error(invalid_instance).
  static TdtInstance from_names(const std::vector<std::string> &word,
                                const std::vector<std::array<std::string, 3>> &triples);

  /// Builds over an existing alphabet; word entries are ids or kDot.
  static TdtInstance from_ids(std::shared_ptr<const Alphabet> alphabet,
                              std::vector<SymbolId> word, std::vector<Triple> triples);

  /// The instance with no symbols and `span` dots.
  static TdtInstance empty(int span);

  int span() const noexcept { return static_cast<int>(word_.size()); }
  std::span<const SymbolId> word() const noexcept { return word_; }
  /// Symbol at position p in [1, span], or kDot.
  SymbolId at(int p) const { return word_[static_cast<std::size_t>(p - 1)]; }
  std::span<const Triple> triples() const noexcept { return triples_; }
  std::size_t triple_count() const noexcept { return triples_.size(); }
  bool is_empty() const noexcept { return triples_.empty(); }

  const Alphabet &alphabet() const noexcept { return *alphabet_; }
  const std::shared_ptr<const Alphabet> &alphabet_ptr() const noexcept { return alphabet_; }

  /// psi as a table indexed by SymbolId; 0 for symbols not placed.
  std::vector<int> positions() const;
  /// psi(s), or 0 when s is not placed. Linear scan.
  int position_of(SymbolId s) const;

  std::optional<Triple> find_triple(std::string_view a, std::string_view b,
                                    std::string_view c) const;
  /// The live triple containing symbol s, if any.
  std::optional<Triple> triple_of(SymbolId s) const;

  /// Word tokens joined by single spaces, dots printed as ".".
  std::string word_string() const;
  /// Word without dots.
  std::string compact_word_string() const;
  std::string triple_string(const Triple &t) const;

  /// Memoization key: each symbol replaced by (rank of its triple in
  /// first-occurrence order, role a/b/c), dots kept. Invariant under
  /// renaming of symbols.
  std::string canonical_key() const;

  /// Same symbols at the same positions, same triple set.
  friend bool operator==(const TdtInstance &lhs, const TdtInstance &rhs);

private:
  TdtInstance(std::shared_ptr<const Alphabet> alphabet, std::vector<SymbolId> word,
              std::vector<Triple> triples)
      : alphabet_(std::move(alphabet)), word_(std::move(word)), triples_(std::move(triples)) {}

  void validate() const;

  std::shared_ptr<const Alphabet> alphabet_;
  std::vector<SymbolId> word_;
  std::vector<Triple> triples_;

  friend TdtInstance apply_step(const TdtInstance &, const Triple &);
};

SuccMap succ_map(const TdtInstance &inst);

/// Positions (i, j, k) of a triple with i the smallest and j = succ(i),
/// k = succ(j). The triple is well-ordered iff i < j < k.
struct TriplePositions {
  int i;
  int j;
  int k;
  bool well_ordered() const noexcept { return i < j && j < k; }
};
TriplePositions triple_positions(const TdtInstance &inst, const Triple &t);

bool is_well_ordered(const TdtInstance &inst, const Triple &t);

/// Well-ordered triples, sorted by smallest position.
std::vector<Triple> enabled_triples(const TdtInstance &inst);

/// tau[a,b,c,psi]. Throws Error(not_well_ordered).
Transposition step_transposition(const TdtInstance &inst, const Triple &t);

/// The 3DT-step on t: its symbols are deleted and every remaining position is
/// mapped through tau^{-1}. Throws Error(not_well_ordered) if t is not a live
/// well-ordered triple.
TdtInstance apply_step(const TdtInstance &inst, const Triple &t);

/// I ~ pi. Throws Error(span_mismatch) when p.n() != inst.span().
bool is_equivalent(const TdtInstance &inst, const Permutation &p);

/// Text format:
///   span N
///   word t1 ... tN
///   triple A B C      (one line per triple, first-occurrence order)
TdtInstance parse_tdt(std::string_view text);
std::string format_tdt(const TdtInstance &inst);

} // namespace sbt
