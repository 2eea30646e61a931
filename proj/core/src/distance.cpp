#include "sbt/distance.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>

#include "sbt/error.hpp"

namespace sbt {

namespace {

class IdaSearch {
public:
  bool run(const Permutation &p, int remaining) {
    if (p.is_identity()) return true;
    if (3 * remaining < breakpoint_count(p)) return false;
    const std::string key = key_of(p);
    if (const auto it = failed_.find(key); it != failed_.end() && it->second >= remaining)
      return false;

    const int n = p.n();
    std::vector<std::pair<int, Permutation>> children;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
          Permutation child = apply_transposition(p, Transposition(i, j, k));
          const int db = breakpoint_count(child);
          if (db <= 3 * (remaining - 1)) children.emplace_back(db, std::move(child));
        }
    std::stable_sort(children.begin(), children.end(),
                     [](const auto &a, const auto &b) { return a.first < b.first; });
    for (const auto &[db, child] : children)
      if (run(child, remaining - 1)) return true;

    auto &slot = failed_[key];
    slot = std::max(slot, remaining);
    return false;
  }

private:
  static std::string key_of(const Permutation &p) {
    std::string k;
    for (int v : p.images()) k.push_back(static_cast<char>(v));
    return k;
  }

  std::unordered_map<std::string, int> failed_;
};

std::uint64_t factorial(int m) {
  std::uint64_t f = 1;
  for (int x = 2; x <= m; ++x) f *= static_cast<std::uint64_t>(x);
  return f;
}

std::uint64_t rank_of(const std::vector<int> &interior) {
  // interior holds a permutation of [1, m]
  const int m = static_cast<int>(interior.size());
  std::uint64_t r = 0;
  for (int a = 0; a < m; ++a) {
    int smaller = 0;
    for (int b = a + 1; b < m; ++b)
      if (interior[static_cast<std::size_t>(b)] < interior[static_cast<std::size_t>(a)]) ++smaller;
    r = r * static_cast<std::uint64_t>(m - a) + static_cast<std::uint64_t>(smaller);
  }
  return r;
}

std::vector<int> unrank(std::uint64_t r, int m) {
  std::vector<int> digits(static_cast<std::size_t>(m));
  for (int a = m - 1; a >= 0; --a) {
    const auto base = static_cast<std::uint64_t>(m - a);
    digits[static_cast<std::size_t>(a)] = static_cast<int>(r % base);
    r /= base;
  }
  std::vector<int> pool;
  for (int v = 1; v <= m; ++v) pool.push_back(v);
  std::vector<int> out;
  for (int a = 0; a < m; ++a) {
    const auto idx = static_cast<std::size_t>(digits[static_cast<std::size_t>(a)]);
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

std::vector<std::int8_t> build_table(int n) {
  const int m = std::max(n - 1, 0);
  const std::uint64_t size = factorial(m);
  std::vector<std::int8_t> dist(size, -1);
  std::vector<std::uint64_t> frontier{0}; // rank 0 is the identity
  dist[0] = 0;
  std::int8_t level = 0;
  std::vector<int> word(static_cast<std::size_t>(n) + 1);
  std::vector<int> interior(static_cast<std::size_t>(m));
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t r : frontier) {
      const std::vector<int> base = unrank(r, m);
      word[0] = 0;
      for (int x = 1; x < n; ++x) word[static_cast<std::size_t>(x)] = base[static_cast<std::size_t>(x - 1)];
      word[static_cast<std::size_t>(n)] = n;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k) {
            // word with [i, j-1] and [j, k-1] exchanged, interior only
            std::size_t w = 0;
            for (int x = 1; x < i; ++x) interior[w++] = word[static_cast<std::size_t>(x)];
            for (int x = j; x < k; ++x) interior[w++] = word[static_cast<std::size_t>(x)];
            for (int x = i; x < j; ++x) interior[w++] = word[static_cast<std::size_t>(x)];
            for (int x = k; x < n; ++x) interior[w++] = word[static_cast<std::size_t>(x)];
            const std::uint64_t cr = rank_of(interior);
            if (dist[cr] < 0) {
              dist[cr] = static_cast<std::int8_t>(level + 1);
              next.push_back(cr);
            }
          }
    }
    frontier = std::move(next);
    ++level;
  }
  return dist;
}

} // namespace

int exact_distance(const Permutation &p, int max_depth) {
  const int lower = breakpoint_lower_bound(p);
  IdaSearch search;
  for (int bound = lower; bound <= max_depth; ++bound)
    if (search.run(p, bound)) return bound;
  throw Error(Errc::depth_exceeded, "transposition distance exceeds max depth " +
                                        std::to_string(max_depth));
}

std::uint64_t interior_rank(const Permutation &p) {
  std::vector<int> interior;
  for (int x = 1; x < p.n(); ++x) interior.push_back(p(x));
  return rank_of(interior);
}

const std::vector<std::int8_t> &bfs_distance_table(int n) {
  if (n > kOracleMaxSpan)
    throw Error(Errc::span_too_large, "oracle supports spans up to " +
                                          std::to_string(kOracleMaxSpan));
  static std::mutex mutex;
  static std::map<int, std::vector<std::int8_t>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_table(n)).first;
  return it->second;
}

int bfs_distance_oracle(const Permutation &p) {
  const auto &table = bfs_distance_table(p.n());
  return table[interior_rank(p)];
}

} // namespace sbt
