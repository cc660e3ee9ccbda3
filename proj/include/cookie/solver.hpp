#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "cookie/bounds.hpp"
#include "cookie/jar_state.hpp"
#include "cookie/strategies.hpp"

namespace cookie {

enum class AmountMode {
  Full,        // every amount 1..max
  Restricted,  // current values and their pairwise differences only
};

inline const char* to_string(AmountMode m) { return m == AmountMode::Full ? "full" : "restricted"; }

struct SolverConfig {
  count_t max_value = 50;
  std::size_t max_jars = 7;
  AmountMode amount_mode = AmountMode::Full;
  std::optional<std::chrono::milliseconds> time_budget;
  unsigned threads = 1;
  int max_nacci_order = kDefaultMaxNacciOrder;
};

enum class SolveStatus {
  Exact,
  RestrictedUpperBound,  // restricted amounts: cm is only an upper bound
  BudgetExceeded,        // time ran out: only [lower, upper] is known
};

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Exact: return "exact";
    case SolveStatus::RestrictedUpperBound: return "restricted_upper_bound";
    case SolveStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

struct SolveStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t memo_hits = 0;
  std::size_t depth_limit_used = 0;
};

struct SolveResult {
  std::size_t cm = 0;
  MoveSequence optimal;
  SolveStats stats;
  SolveStatus status = SolveStatus::Exact;
  AmountMode amount_mode = AmountMode::Full;
  std::size_t lower = 0;  // proven lower bound
  std::size_t upper = 0;  // length of the best known witness

  bool exact() const noexcept { return status == SolveStatus::Exact; }
};

namespace detail {

// Amounts to try, descending, never above `cap`.
inline std::vector<count_t> candidate_amounts(const JarState& s, AmountMode mode, count_t cap) {
  std::vector<count_t> out;
  const count_t top = std::min(cap, s.max());
  if (mode == AmountMode::Full) {
    out.reserve(top);
    for (count_t a = top; a >= 1; --a) out.push_back(a);
    return out;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.push_back(s[i]);
    for (std::size_t j = 0; j < i; ++j) out.push_back(s[i] - s[j]);
  }
  std::erase_if(out, [top](count_t a) { return a == 0 || a > top; });
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Visits every valid move with amount <= cap in enumeration order; stops
// early when `fn` returns false.
template <typename Fn>
void for_each_move(const JarState& s, AmountMode mode, count_t cap, Fn&& fn) {
  for (count_t a : candidate_amounts(s, mode, cap)) {
    const auto first = static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), a) - s.begin());
    const std::size_t m = s.size() - first;
    // With bit j standing for the j-th smallest eligible jar, descending mask
    // order is descending lexicographic order of the largest-first value
    // lists: the highest differing bit decides both comparisons.
    for (std::uint32_t mask = (std::uint32_t{1} << m) - 1; mask != 0; --mask) {
      Move mv{a, {}};
      for (std::size_t j = 0; j < m; ++j)
        if (mask & (std::uint32_t{1} << j)) mv.targets.push_back(s[first + j]);
      if (!fn(std::move(mv))) return;
    }
  }
}

}  // namespace detail

/// Every valid move on `s` in the solver's enumeration order: amounts
/// descending, then target sets descending lexicographically.
inline std::vector<Move> enumerate_moves(const JarState& s, AmountMode mode = AmountMode::Full) {
  std::vector<Move> out;
  detail::for_each_move(s, mode, s.max(), [&](Move m) {
    out.push_back(std::move(m));
    return true;
  });
  return out;
}

/// Exact Cookie Monster number by iterative deepening.
///
/// Moves commute (each jar just receives some subset of the moves, and every
/// prefix of that subset leaves a non-negative count), so any solution can be
/// replayed with amounts in non-increasing order. The search only generates
/// such orderings, carrying the previous amount as a cap on the next (full
/// amount mode only). Three
/// exact prunes apply at a node with r moves left and cap c:
///   - more than 2^r - 1 distinct jars,
///   - a jar larger than r * c,
///   - a memoized proof that (state, c) needs more than r moves.
/// Memo entries are only written for fully refuted subtrees, so they never
/// change which witness is found first: the returned sequence is the first
/// r-move solution in enumeration order regardless of memo contents or
/// thread count.
///
/// A Solver keeps its memo across calls; reuse one instance to amortize
/// repeated solves under the same amount mode.
class Solver {
 public:
  explicit Solver(SolverConfig config = {}) : config_(config) {}

  const SolverConfig& config() const noexcept { return config_; }

  SolveResult solve(const JarState& state) {
    check_limits(state);

    SolveResult result;
    result.amount_mode = config_.amount_mode;
    const StrategyTrace fallback = best_strategy(state, config_.max_nacci_order);
    result.lower = log2_lower_bound(state.size());
    result.upper = fallback.length();

    nodes_ = 0;
    memo_hits_ = 0;
    aborted_ = false;
    deadline_.reset();
    if (config_.time_budget) deadline_ = std::chrono::steady_clock::now() + *config_.time_budget;

    for (std::size_t depth = result.lower; depth <= result.upper; ++depth) {
      result.stats.depth_limit_used = depth;
      const Outcome o = search_root(state, depth, result.optimal);
      if (o == Outcome::Found) {
        result.cm = depth;
        result.upper = depth;
        if (config_.amount_mode == AmountMode::Full) {
          result.status = SolveStatus::Exact;
          result.lower = depth;
        } else {
          result.status = SolveStatus::RestrictedUpperBound;
        }
        finish_stats(result);
        return result;
      }
      if (o == Outcome::Aborted) {
        result.status = SolveStatus::BudgetExceeded;
        result.cm = result.upper;
        result.optimal = fallback.sequence;
        finish_stats(result);
        return result;
      }
      if (config_.amount_mode == AmountMode::Full) result.lower = depth + 1;
    }

    // Only reachable when restricted amounts miss every witness up to the
    // strategy length; the strategy itself is then the best bound known.
    if (config_.amount_mode == AmountMode::Full)
      throw Error("internal: full search failed below a verified strategy length");
    result.status = SolveStatus::RestrictedUpperBound;
    result.cm = result.upper;
    result.optimal = fallback.sequence;
    finish_stats(result);
    return result;
  }

 private:
  enum class Outcome { Found, NotFound, Aborted };

  struct MemoEntry {
    std::size_t lower = 0;  // no solution with fewer moves than this
    bool exact = false;     // a solution of exactly `lower` moves was seen
  };

  struct KeyHash {
    std::size_t operator()(const std::vector<count_t>& k) const noexcept {
      std::uint64_t h = 0xcbf29ce484222325ull;
      for (count_t v : k) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }
  };

  void check_limits(const JarState& s) const {
    if (s.size() > config_.max_jars)
      throw LimitExceeded(std::to_string(s.size()) + " jars exceed the cap of " +
                          std::to_string(config_.max_jars));
    if (s.max() > config_.max_value)
      throw LimitExceeded("jar value " + std::to_string(s.max()) + " exceeds the cap of " +
                          std::to_string(config_.max_value));
    if (s.size() > 30) throw LimitExceeded("subset enumeration supports at most 30 jars");
  }

  void finish_stats(SolveResult& r) const {
    r.stats.nodes_expanded = nodes_.load();
    r.stats.memo_hits = memo_hits_.load();
  }

  static std::vector<count_t> memo_key(const JarState& s, count_t cap) {
    std::vector<count_t> key = s.vector();
    key.push_back(std::min(cap, s.max()));
    return key;
  }

  std::optional<MemoEntry> memo_get(const std::vector<count_t>& key) {
    std::lock_guard lock(memo_mu_);
    auto it = memo_.find(key);
    if (it == memo_.end()) return std::nullopt;
    return it->second;
  }

  void memo_refuted(std::vector<count_t> key, std::size_t depth) {
    std::lock_guard lock(memo_mu_);
    auto& e = memo_[std::move(key)];
    e.lower = std::max(e.lower, depth + 1);
  }

  void memo_solved(std::vector<count_t> key, std::size_t depth) {
    std::lock_guard lock(memo_mu_);
    auto& e = memo_[std::move(key)];
    if (e.lower == depth) e.exact = true;
  }

  // Polls the clock on the first node and every 1024th after it.
  bool out_of_time(std::uint64_t seen) {
    if (aborted_.load(std::memory_order_relaxed)) return true;
    if (deadline_ && (seen & 0x3ff) == 0 && std::chrono::steady_clock::now() >= *deadline_)
      aborted_ = true;
    return aborted_.load(std::memory_order_relaxed);
  }

  // The non-increasing amount order is only imposed in full mode; restricted
  // mode tests the amount restriction on its own.
  count_t child_cap(count_t amount) const {
    return config_.amount_mode == AmountMode::Full ? amount : std::numeric_limits<count_t>::max();
  }

  static bool hopeless(const JarState& s, std::size_t depth, count_t cap) {
    if (log2_lower_bound(s.size()) > depth) return true;
    // each jar is a sum of at most `depth` amounts, none above `cap`
    return depth == 0 || (s.max() - 1) / depth >= cap;
  }

  // `cancel` lets a parallel root abandon a subtree once an earlier sibling
  // has already succeeded.
  Outcome dfs(const JarState& s, std::size_t depth, count_t cap, std::vector<Move>& path,
              const std::function<bool()>& cancel) {
    if (s.empty()) return Outcome::Found;
    if (hopeless(s, depth, cap)) return Outcome::NotFound;
    auto key = memo_key(s, cap);
    if (auto e = memo_get(key); e && e->lower > depth) {
      ++memo_hits_;
      return Outcome::NotFound;
    }
    const std::uint64_t seen = nodes_.fetch_add(1, std::memory_order_relaxed);
    if (out_of_time(seen) || (cancel && cancel())) return Outcome::Aborted;

    Outcome result = Outcome::NotFound;
    detail::for_each_move(s, config_.amount_mode, cap, [&](Move mv) {
      JarState child = apply_move(s, mv);
      const count_t next_cap = child_cap(mv.amount);
      path.push_back(std::move(mv));
      const Outcome o = dfs(child, depth - 1, next_cap, path, cancel);
      if (o == Outcome::Found) {
        result = o;
        return false;
      }
      path.pop_back();
      if (o == Outcome::Aborted) {
        result = o;
        return false;
      }
      return true;
    });

    if (result == Outcome::NotFound) memo_refuted(std::move(key), depth);
    else if (result == Outcome::Found) memo_solved(std::move(key), depth);
    return result;
  }

  Outcome search_root(const JarState& s, std::size_t depth, MoveSequence& witness) {
    witness = MoveSequence{s, {}};
    const count_t cap = s.max();
    if (s.empty()) return Outcome::Found;
    if (config_.threads <= 1) {
      std::vector<Move> path;
      const Outcome o = dfs(s, depth, cap, path, {});
      if (o == Outcome::Found) witness.moves = std::move(path);
      return o;
    }
    if (hopeless(s, depth, cap)) return Outcome::NotFound;

    std::vector<Move> roots = enumerate_moves(s, config_.amount_mode);
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{kNone};
    std::vector<Outcome> outcomes(roots.size(), Outcome::NotFound);
    std::vector<std::vector<Move>> paths(roots.size());

    auto worker = [&] {
      for (std::size_t i = next++; i < roots.size(); i = next++) {
        if (i > best.load()) continue;
        auto cancel = [&best, i] { return best.load(std::memory_order_relaxed) < i; };
        const JarState child = apply_move(s, roots[i]);
        outcomes[i] = dfs(child, depth - 1, child_cap(roots[i].amount), paths[i], cancel);
        if (outcomes[i] == Outcome::Found) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < config_.threads; ++t) pool.emplace_back(worker);
    pool.clear();

    const std::size_t winner = best.load();
    // every root before the winner ran to completion, so the winner is the
    // first solution in enumeration order
    for (std::size_t i = 0; i < roots.size() && i < winner; ++i)
      if (outcomes[i] == Outcome::Aborted) return Outcome::Aborted;
    if (winner == kNone) {
      memo_refuted(memo_key(s, cap), depth);
      return Outcome::NotFound;
    }
    witness.moves.push_back(roots[winner]);
    for (auto& m : paths[winner]) witness.moves.push_back(std::move(m));
    return Outcome::Found;
  }

  SolverConfig config_;
  std::unordered_map<std::vector<count_t>, MemoEntry, KeyHash> memo_;
  std::mutex memo_mu_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> memo_hits_{0};
  std::atomic<bool> aborted_{false};
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

inline SolveResult solve(const JarState& state, const SolverConfig& config = {}) {
  return Solver(config).solve(state);
}

/// Solves under both amount modes and reports whether the CM values agree.
inline bool restricted_equals_full(const JarState& state, SolverConfig config = {}) {
  config.amount_mode = AmountMode::Full;
  const auto full = solve(state, config);
  config.amount_mode = AmountMode::Restricted;
  const auto restricted = solve(state, config);
  if (full.status == SolveStatus::BudgetExceeded || restricted.status == SolveStatus::BudgetExceeded)
    throw Error("time budget exceeded while comparing amount modes");
  return full.cm == restricted.cm;
}

}  // namespace cookie
