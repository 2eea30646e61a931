#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sbt {

/// The move tau_{i,j,k}: exchanges the factors [i, j-1] and [j, k-1] of a
/// permutation's word. Always satisfies 0 < i < j < k; the upper bound k <= n
/// is checked against the permutation it is applied to.
class Transposition {
public:
  /// Throws Error(invalid_transposition) unless 0 < i < j < k.
  Transposition(int i, int j, int k);

  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }
  int k() const noexcept { return k_; }
  /// q(j) = k + i - j, the split point of the inverse move.
  int q() const noexcept { return k_ + i_ - j_; }

  /// Image of x under tau as a map on [0, n].
  int operator()(int x) const noexcept;
  /// Image of x under tau^{-1}.
  int inverse_at(int x) const noexcept;

  /// Smaller of the two exchanged factor lengths.
  int min_factor() const noexcept { return j_ - i_ < k_ - j_ ? j_ - i_ : k_ - j_; }

  friend bool operator==(const Transposition &, const Transposition &) = default;
  friend auto operator<=>(const Transposition &, const Transposition &) = default;

private:
  int i_;
  int j_;
  int k_;
};

/// tau_{i,j,k}^{-1} = tau_{i,q(j),k}.
Transposition invert_transposition(const Transposition &t);

std::ostream &operator<<(std::ostream &os, const Transposition &t);

/// Permutation of [0, n] fixing 0 and n, stored as the word of images.
/// Immutable once built.
class Permutation {
public:
  /// Throws Error(invalid_permutation) if images is not a bijection of
  /// [0, n] with both endpoints fixed (n = images.size() - 1).
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int n() const noexcept { return static_cast<int>(images_.size()) - 1; }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<const int> images() const noexcept { return images_; }
  std::vector<int> inverse_images() const;
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation &, const Permutation &) = default;

private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;

  friend Permutation apply_transposition(const Permutation &, const Transposition &);
};

/// Returns p o t: the word of p with factors [i, j-1] and [j, k-1] exchanged.
/// Throws Error(invalid_transposition) when t.k() > p.n().
Permutation apply_transposition(const Permutation &p, const Transposition &t);

struct BreakpointSet {
  std::vector<int> positions; // ascending, each in [1, n]
  std::size_t count() const noexcept { return positions.size(); }
};

BreakpointSet breakpoints(const Permutation &p);
int breakpoint_count(const Permutation &p);

/// ceil(d_b(p) / 3), the integer lower bound on the transposition distance.
int breakpoint_lower_bound(const Permutation &p);

/// Every transposition whose application removes exactly three breakpoints,
/// in increasing order of i. Linear in n.
std::vector<Transposition> three_bp_moves(const Permutation &p);

/// Whitespace-separated images of 0..n, e.g. "0 2 4 3 1 5".
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation &p);

std::ostream &operator<<(std::ostream &os, const Permutation &p);

} // namespace sbt
