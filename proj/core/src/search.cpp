#include "sbt/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <deque>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "sbt/error.hpp"

namespace sbt {

std::string_view to_string(Outcome o) noexcept {
  switch (o) {
  case Outcome::yes: return "yes";
  case Outcome::no: return "no";
  case Outcome::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

void SearchConfig::validate() const {
  if (workers == 0) throw std::invalid_argument("worker count must be at least 1");
  if (memo_capacity == 0) throw std::invalid_argument("memo capacity must be positive");
  if (node_budget && *node_budget == 0)
    throw std::invalid_argument("node budget must be positive");
}

std::vector<Transposition> StepTrace::moves() const {
  std::vector<Transposition> out;
  out.reserve(steps.size());
  for (const auto &s : steps) out.push_back(s.move);
  return out;
}

namespace {

/// Set of states known not to reach the goal. Sharded so concurrent workers
/// rarely contend; a single worker pays one uncontended lock per probe.
class DeadStateTable {
public:
  explicit DeadStateTable(std::size_t capacity) : capacity_(capacity) {}

  bool contains(const std::string &key) const {
    const Shard &s = shard(key);
    std::lock_guard lock(s.mutex);
    return s.keys.count(key) != 0;
  }

  void insert(const std::string &key) {
    if (size_.load(std::memory_order_relaxed) >= capacity_) return;
    Shard &s = shard(key);
    std::lock_guard lock(s.mutex);
    if (s.keys.insert(key).second) size_.fetch_add(1, std::memory_order_relaxed);
  }

  std::size_t size() const { return size_.load(); }

private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_set<std::string> keys;
  };

  Shard &shard(const std::string &key) { return shards_[std::hash<std::string>{}(key) % kShards]; }
  const Shard &shard(const std::string &key) const {
    return shards_[std::hash<std::string>{}(key) % kShards];
  }

  std::array<Shard, kShards> shards_;
  std::atomic<std::size_t> size_{0};
  std::size_t capacity_;
};

enum class Visit { found, dead, aborted };

/// Memoized DFS over a problem exposing State, Move, key(), done(), moves()
/// and apply(). Shared between single- and multi-worker runs.
template <class Problem> class DfsSearch {
public:
  using State = typename Problem::State;
  using Move = typename Problem::Move;

  DfsSearch(const Problem &problem, const SearchConfig &cfg)
      : problem_(problem), cfg_(cfg), dead_(cfg.memo_capacity) {}

  struct Result {
    Outcome outcome;
    std::vector<Move> path;
    SearchStats stats;
  };

  Result run(const State &root) {
    std::vector<Move> path;
    Outcome outcome;
    if (cfg_.workers <= 1) {
      outcome = to_outcome(visit(root, path));
    } else {
      outcome = run_parallel(root, path);
    }
    return {outcome, std::move(path), {nodes_.load(), dead_.size()}};
  }

private:
  Outcome to_outcome(Visit v) const {
    if (v == Visit::found) return Outcome::yes;
    if (exhausted_.load()) return Outcome::budget_exhausted;
    return Outcome::no;
  }

  Visit visit(const State &s, std::vector<Move> &path) {
    if (problem_.done(s)) return Visit::found;
    if (stop_.load(std::memory_order_relaxed)) return Visit::aborted;
    const std::string key = problem_.key(s);
    if (dead_.contains(key)) return Visit::dead;
    const std::uint64_t expanded = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (cfg_.node_budget && expanded > *cfg_.node_budget) {
      exhausted_.store(true);
      stop_.store(true);
      return Visit::aborted;
    }
    for (const Move &m : problem_.moves(s)) {
      path.push_back(m);
      const Visit v = visit(problem_.apply(s, m), path);
      if (v == Visit::found) return v;
      path.pop_back();
      if (v == Visit::aborted) return v;
    }
    dead_.insert(key);
    return Visit::dead;
  }

  struct Task {
    State state;
    std::vector<Move> prefix;
  };

  Outcome run_parallel(const State &root, std::vector<Move> &path) {
    // Breadth-first split of the top of the tree into independent tasks.
    const std::size_t want = 8 * static_cast<std::size_t>(cfg_.workers);
    std::deque<Task> frontier;
    frontier.push_back({root, {}});
    while (!frontier.empty() && frontier.size() < want) {
      Task t = std::move(frontier.front());
      frontier.pop_front();
      if (problem_.done(t.state)) {
        path = std::move(t.prefix);
        return Outcome::yes;
      }
      nodes_.fetch_add(1, std::memory_order_relaxed);
      const auto moves = problem_.moves(t.state);
      for (const Move &m : moves) {
        Task child{problem_.apply(t.state, m), t.prefix};
        child.prefix.push_back(m);
        frontier.push_back(std::move(child));
      }
      if (moves.empty()) dead_.insert(problem_.key(t.state));
    }
    if (frontier.empty()) return Outcome::no;

    std::vector<Task> tasks(std::make_move_iterator(frontier.begin()),
                            std::make_move_iterator(frontier.end()));
    std::atomic<std::size_t> next{0};
    std::mutex found_mutex;
    std::optional<std::vector<Move>> found;

    auto worker = [&] {
      for (;;) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= tasks.size() || stop_.load()) return;
        std::vector<Move> local = tasks[idx].prefix;
        if (visit(tasks[idx].state, local) == Visit::found) {
          std::lock_guard lock(found_mutex);
          if (!found) found = std::move(local);
          stop_.store(true);
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < cfg_.workers; ++w) pool.emplace_back(worker);
    for (auto &t : pool) t.join();

    if (found) {
      path = std::move(*found);
      return Outcome::yes;
    }
    return exhausted_.load() ? Outcome::budget_exhausted : Outcome::no;
  }

  const Problem &problem_;
  const SearchConfig &cfg_;
  DeadStateTable dead_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
  std::atomic<bool> exhausted_{false};
};

struct CollapseProblem {
  using State = TdtInstance;
  using Move = TraceStep;

  OrderHeuristic order;

  std::string key(const State &s) const { return s.canonical_key(); }
  bool done(const State &s) const { return s.is_empty(); }

  std::vector<Move> moves(const State &s) const {
    std::vector<Triple> enabled = enabled_triples(s);
    if (order == OrderHeuristic::triple_index) {
      const auto all = s.triples();
      std::stable_sort(enabled.begin(), enabled.end(), [&](const Triple &a, const Triple &b) {
        return std::find(all.begin(), all.end(), a) < std::find(all.begin(), all.end(), b);
      });
    }
    std::vector<Move> out;
    out.reserve(enabled.size());
    for (const Triple &t : enabled) out.push_back({t, step_transposition(s, t)});
    return out;
  }

  State apply(const State &s, const Move &m) const { return apply_step(s, m.triple); }
};

struct SortProblem {
  using State = Permutation;
  using Move = Transposition;

  std::string key(const State &s) const {
    std::string k;
    k.reserve(2 * s.images().size());
    for (int v : s.images()) {
      k.push_back(static_cast<char>(v & 0xff));
      k.push_back(static_cast<char>((v >> 8) & 0xff));
    }
    return k;
  }
  bool done(const State &s) const { return s.is_identity(); }
  std::vector<Move> moves(const State &s) const { return three_bp_moves(s); }
  State apply(const State &s, const Move &m) const { return apply_transposition(s, m); }
};

} // namespace

CollapseResult collapse_search(const TdtInstance &inst, const SearchConfig &cfg) {
  cfg.validate();
  CollapseProblem problem{cfg.order};
  DfsSearch<CollapseProblem> search(problem, cfg);
  auto r = search.run(inst);
  CollapseResult result;
  result.outcome = r.outcome;
  result.stats = r.stats;
  if (r.outcome == Outcome::yes) result.trace = StepTrace{inst.canonical_key(), std::move(r.path)};
  return result;
}

SortResult db3_sort_decision(const Permutation &p, const SearchConfig &cfg) {
  cfg.validate();
  SortResult result;
  if (breakpoint_count(p) % 3 != 0) return result;
  SortProblem problem;
  DfsSearch<SortProblem> search(problem, cfg);
  auto r = search.run(p);
  result.outcome = r.outcome;
  result.stats = r.stats;
  if (r.outcome == Outcome::yes) result.moves = std::move(r.path);
  return result;
}

TdtInstance replay_trace(const TdtInstance &start, const StepTrace &trace) {
  TdtInstance state = start;
  for (std::size_t idx = 0; idx < trace.steps.size(); ++idx) {
    const TraceStep &step = trace.steps[idx];
    if (!is_well_ordered(state, step.triple))
      throw Error(Errc::incomplete_trace,
                  "step " + std::to_string(idx) + ": triple is not well-ordered");
    if (step_transposition(state, step.triple) != step.move)
      throw Error(Errc::incomplete_trace,
                  "step " + std::to_string(idx) + ": recorded transposition does not match");
    state = apply_step(state, step.triple);
  }
  return state;
}

Permutation replay_moves(const Permutation &start, const std::vector<Transposition> &moves) {
  Permutation p = start;
  for (const Transposition &t : moves) p = apply_transposition(p, t);
  return p;
}

} // namespace sbt
