#pragma once

#include <bit>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cookie/bounds.hpp"
#include "cookie/jar_state.hpp"
#include "cookie/sequences.hpp"

namespace cookie {

struct StrategyTrace {
  std::string name;
  MoveSequence sequence;
  std::optional<std::size_t> predicted_length;

  std::size_t length() const noexcept { return sequence.size(); }
};

namespace detail {

inline void push_move(JarState& state, std::vector<Move>& out, Move m) {
  state = apply_move(state, m);
  out.push_back(std::move(m));
}

inline void empty_one_by_one(JarState& state, std::vector<Move>& out) {
  while (!state.empty()) {
    const count_t top = state.max();
    push_move(state, out, Move{top, {top}});
  }
}

}  // namespace detail

/// Empties jars one at a time, largest first.
inline StrategyTrace one_by_one(const JarState& state) {
  StrategyTrace t{"one_by_one", {state, {}}, state.size()};
  JarState cur = state;
  detail::empty_one_by_one(cur, t.sequence.moves);
  return t;
}

/// One move per bit position set in any value, highest first: take 2^b from
/// every jar whose current count has bit b set.
inline StrategyTrace binary_decomposition(const JarState& state) {
  count_t bits = 0;
  for (count_t v : state) bits |= v;
  StrategyTrace t{"binary", {state, {}}, static_cast<std::size_t>(std::popcount(bits))};
  JarState cur = state;
  for (int b = 63; b >= 0; --b) {
    const count_t amount = count_t{1} << b;
    if (!(bits & amount)) continue;
    Move m{amount, {}};
    for (count_t v : cur)
      if (v & amount) m.targets.push_back(v);
    detail::push_move(cur, t.sequence.moves, std::move(m));
  }
  return t;
}

/// Pairing strategy on {n_n, ..., n_{n+k-1}}. Each round takes the top jar
/// and the n-1 jars directly below it: for each companion (largest first) the
/// companion's whole count is removed from it and from the top jar. The top
/// jar ends the round at n_{m-n}, which is the next jar below the companions
/// whenever more than n jars were present, so n jars vanish in n-1 moves and
/// the remainder is again a nacci jar set. With exactly n jars the top jar is
/// left holding a lone 1; with fewer, the jars are powers of two and go one
/// at a time.
inline StrategyTrace nacci_strategy(int n, std::size_t k) {
  const JarState source = nacci_jar_set(n, k);
  StrategyTrace t{"nacci", {source, {}}, nacci_cm_formula(n, k)};
  const auto order = static_cast<std::size_t>(n);
  JarState cur = source;
  while (cur.size() >= order) {
    const auto size = cur.size();
    std::vector<count_t> companions;
    for (std::size_t i = 1; i < order; ++i) companions.push_back(cur[size - 1 - i]);
    for (count_t c : companions) {
      const count_t top = cur.max();
      detail::push_move(cur, t.sequence.moves, Move{c, {c, top}});
    }
  }
  detail::empty_one_by_one(cur, t.sequence.moves);
  return t;
}

inline constexpr int kDefaultMaxNacciOrder = 16;

/// The order n for which `state` is exactly nacci_jar_set(n, |state|), trying
/// n = 2 .. max_order and returning the smallest match.
inline std::optional<int> recognize_nacci(const JarState& state, int max_order = kDefaultMaxNacciOrder) {
  if (state.empty()) return std::nullopt;
  for (int n = 2; n <= max_order; ++n) {
    try {
      if (nacci_jar_set(n, state.size()) == state) return n;
    } catch (const OverflowError&) {
    }
  }
  return std::nullopt;
}

/// Shortest of the applicable strategies. Ties go to nacci, then binary, then
/// one_by_one.
inline StrategyTrace best_strategy(const JarState& state, int max_nacci_order = kDefaultMaxNacciOrder) {
  std::vector<StrategyTrace> candidates;
  if (auto n = recognize_nacci(state, max_nacci_order)) candidates.push_back(nacci_strategy(*n, state.size()));
  candidates.push_back(binary_decomposition(state));
  candidates.push_back(one_by_one(state));
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (candidates[i].length() < candidates[best].length()) best = i;
  return candidates[best];
}

}  // namespace cookie
