#include "sbt/permutation.hpp"

#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>

#include "sbt/error.hpp"

namespace sbt {

Transposition::Transposition(int i, int j, int k) : i_(i), j_(j), k_(k) {
  if (!(0 < i && i < j && j < k)) {
    std::ostringstream os;
    os << "transposition (" << i << "," << j << "," << k
       << ") violates 0 < i < j < k";
    throw Error(Errc::invalid_transposition, os.str());
  }
}

int Transposition::operator()(int x) const noexcept {
  if (x < i_ || x >= k_) return x;
  if (x < q()) return x + j_ - i_;
  return x + j_ - k_;
}

int Transposition::inverse_at(int x) const noexcept {
  if (x < i_ || x >= k_) return x;
  if (x < j_) return x + k_ - j_;
  return x + i_ - j_;
}

Transposition invert_transposition(const Transposition &t) {
  return Transposition(t.i(), t.q(), t.k());
}

std::ostream &operator<<(std::ostream &os, const Transposition &t) {
  return os << "tau(" << t.i() << "," << t.j() << "," << t.k() << ")";
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty())
    throw Error(Errc::invalid_permutation, "permutation needs at least the image of 0");
  const int n = this->n();
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v > n || seen[static_cast<std::size_t>(v)])
      throw Error(Errc::invalid_permutation,
                  "images are not a bijection of [0, " + std::to_string(n) + "]");
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (images_.front() != 0 || images_.back() != n)
    throw Error(Errc::invalid_permutation, "0 and n must be fixed points");
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw Error(Errc::invalid_permutation, "negative span");
  std::vector<int> images(static_cast<std::size_t>(n) + 1);
  for (int x = 0; x <= n; ++x) images[static_cast<std::size_t>(x)] = x;
  return Permutation(std::move(images), Unchecked{});
}

std::vector<int> Permutation::inverse_images() const {
  std::vector<int> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    inv[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  return inv;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return false;
  return true;
}

Permutation apply_transposition(const Permutation &p, const Transposition &t) {
  if (t.k() > p.n()) {
    std::ostringstream os;
    os << t << " exceeds span " << p.n();
    throw Error(Errc::invalid_transposition, os.str());
  }
  std::vector<int> out(p.images_.size());
  for (int x = 0; x <= p.n(); ++x)
    out[static_cast<std::size_t>(x)] = p(t(x));
  return Permutation(std::move(out), Permutation::Unchecked{});
}

BreakpointSet breakpoints(const Permutation &p) {
  BreakpointSet result;
  for (int x = 1; x <= p.n(); ++x)
    if (p(x - 1) != p(x) - 1) result.positions.push_back(x);
  return result;
}

int breakpoint_count(const Permutation &p) {
  int count = 0;
  for (int x = 1; x <= p.n(); ++x)
    if (p(x - 1) != p(x) - 1) ++count;
  return count;
}

int breakpoint_lower_bound(const Permutation &p) {
  return (breakpoint_count(p) + 2) / 3;
}

std::vector<Transposition> three_bp_moves(const Permutation &p) {
  // With i as the smallest index, the three new adjacencies force
  //   pi(j) = pi(i-1)+1,  pi(i) = pi(k-1)+1,  pi(k) = pi(j-1)+1,
  // so j and k are read off the inverse. Each equation also forces its
  // position to be a breakpoint, because the three indices are distinct.
  const int n = p.n();
  const std::vector<int> inv = p.inverse_images();
  std::vector<Transposition> moves;
  for (int i = 1; i <= n; ++i) {
    if (p(i - 1) == p(i) - 1) continue;
    const int j = inv[static_cast<std::size_t>(p(i - 1) + 1)];
    const int k = inv[static_cast<std::size_t>(p(i) - 1)] + 1;
    if (!(i < j && j < k && k <= n)) continue;
    if (p(k) != p(j - 1) + 1) continue;
    moves.emplace_back(i, j, k);
  }
  return moves;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> images;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
    if (ec != std::errc{} || ptr != text.data() + end)
      throw Error(Errc::parse_error,
                  "bad permutation token '" + std::string(text.substr(pos, end - pos)) + "'");
    images.push_back(value);
    pos = end;
  }
  if (images.empty()) throw Error(Errc::parse_error, "empty permutation text");
  return Permutation(std::move(images));
}

std::string format_permutation(const Permutation &p) {
  std::string out;
  for (int x = 0; x <= p.n(); ++x) {
    if (x) out += ' ';
    out += std::to_string(p(x));
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const Permutation &p) {
  return os << format_permutation(p);
}

} // namespace sbt
