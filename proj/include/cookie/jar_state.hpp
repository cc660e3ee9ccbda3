#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cookie/errors.hpp"

namespace cookie {

/// Canonical jar configuration: the distinct positive cookie counts, sorted
/// ascending. Jars holding equal counts are interchangeable and empty jars
/// play no further part, so only this set matters to any strategy. The empty
/// set is the unique terminal state.
class JarState {
 public:
  JarState() = default;

  /// Canonicalizes arbitrary counts: drops zeros, merges duplicates, sorts.
  static JarState from_counts(std::span<const count_t> raw) {
    JarState s;
    s.values_.reserve(raw.size());
    for (count_t v : raw)
      if (v != 0) s.values_.push_back(v);
    std::sort(s.values_.begin(), s.values_.end());
    s.values_.erase(std::unique(s.values_.begin(), s.values_.end()), s.values_.end());
    return s;
  }

  static JarState from_counts(std::initializer_list<count_t> raw) {
    return from_counts(std::span<const count_t>(raw.begin(), raw.size()));
  }

  std::span<const count_t> values() const noexcept { return values_; }
  const std::vector<count_t>& vector() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  count_t max() const noexcept { return values_.empty() ? 0 : values_.back(); }
  count_t operator[](std::size_t i) const { return values_[i]; }

  bool contains(count_t v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
  }

  count_t sum() const {
    count_t total = 0;
    for (count_t v : values_) total = checked::add(total, v);
    return total;
  }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const JarState&, const JarState&) = default;
  friend auto operator<=>(const JarState&, const JarState&) = default;

 private:
  std::vector<count_t> values_;
};

inline JarState canonicalize(std::span<const count_t> raw) { return JarState::from_counts(raw); }

inline std::string to_string(const JarState& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

/// Take `amount` cookies from every jar whose current count is in `targets`.
struct Move {
  count_t amount = 0;
  std::vector<count_t> targets;

  friend bool operator==(const Move&, const Move&) = default;
};

struct MoveSequence {
  JarState source;
  std::vector<Move> moves;

  std::size_t size() const noexcept { return moves.size(); }
  friend bool operator==(const MoveSequence&, const MoveSequence&) = default;
};

/// Applies one move. Targets are jar values of `state`; duplicate target
/// entries are treated as one.
inline JarState apply_move(const JarState& state, const Move& move) {
  if (move.amount == 0) throw MoveError(MoveErrorKind::ZeroAmount, "amount must be positive");
  if (move.targets.empty()) throw MoveError(MoveErrorKind::EmptyTargets, "no jars chosen");

  std::vector<count_t> next = state.vector();
  for (count_t t : move.targets) {
    const auto it = std::lower_bound(state.begin(), state.end(), t);
    const auto idx = static_cast<std::size_t>(it - state.begin());
    if (it == state.end() || *it != t)
      throw MoveError(MoveErrorKind::AbsentTarget, "no jar holds " + std::to_string(t));
    if (t < move.amount)
      throw MoveError(MoveErrorKind::Overdraw, "cannot take " + std::to_string(move.amount) +
                                                   " from " + std::to_string(t));
    next[idx] = t - move.amount;
  }
  return JarState::from_counts(next);
}

/// Distinct values removed from the state by one move: jars emptied, or
/// reduced to a count some other jar already holds.
inline std::size_t count_discarded(const JarState& state, const Move& move) {
  return state.size() - apply_move(state, move).size();
}

struct Verdict {
  bool empties = false;
  JarState final_state;
  count_t cookies_eaten = 0;
};

/// Replays `seq` from `state`. Move errors are rethrown carrying the index of
/// the failing move.
inline Verdict verify_sequence(const JarState& state, const MoveSequence& seq) {
  Verdict v;
  v.final_state = state;
  for (std::size_t i = 0; i < seq.moves.size(); ++i) {
    const Move& m = seq.moves[i];
    try {
      v.final_state = apply_move(v.final_state, m);
    } catch (const MoveError& e) {
      throw e.at(i);
    }
    std::vector<count_t> distinct = m.targets;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    v.cookies_eaten = checked::add(v.cookies_eaten, checked::mul(m.amount, distinct.size()));
  }
  v.empties = v.final_state.empty();
  return v;
}

inline Verdict verify_sequence(const MoveSequence& seq) { return verify_sequence(seq.source, seq); }

/// For each move of a valid sequence, the source jars it takes from. Jars are
/// numbered by their position in `seq.source`; a target value hits every jar
/// currently holding that value.
inline std::vector<std::vector<std::size_t>> jar_assignment(const MoveSequence& seq) {
  std::vector<count_t> jars = seq.source.vector();
  std::vector<std::vector<std::size_t>> hits(seq.moves.size());
  JarState cur = seq.source;
  for (std::size_t i = 0; i < seq.moves.size(); ++i) {
    const Move& m = seq.moves[i];
    try {
      cur = apply_move(cur, m);
    } catch (const MoveError& e) {
      throw e.at(i);
    }
    std::vector<count_t> targets = m.targets;
    std::sort(targets.begin(), targets.end());
    for (std::size_t j = 0; j < jars.size(); ++j)
      if (jars[j] != 0 && std::binary_search(targets.begin(), targets.end(), jars[j])) hits[i].push_back(j);
    for (std::size_t j : hits[i]) jars[j] -= m.amount;
  }
  return hits;
}

/// Replays the moves of `seq` in the order given by `order` (a permutation of
/// move indices), each move taking from the same physical jars it took from
/// originally. True iff no jar ever goes negative and every jar ends empty.
/// Targets name values, and values shift when moves are reordered, so the
/// reordering is checked per jar rather than on the canonical state.
inline bool replay_reordered(const MoveSequence& seq, std::span<const std::size_t> order) {
  if (order.size() != seq.moves.size()) return false;
  std::vector<bool> used(order.size(), false);
  for (std::size_t i : order) {
    if (i >= used.size() || used[i]) return false;
    used[i] = true;
  }
  const auto hits = jar_assignment(seq);
  std::vector<count_t> jars = seq.source.vector();
  for (std::size_t i : order)
    for (std::size_t j : hits[i]) {
      if (jars[j] < seq.moves[i].amount) return false;
      jars[j] -= seq.moves[i].amount;
    }
  return std::all_of(jars.begin(), jars.end(), [](count_t v) { return v == 0; });
}

}  // namespace cookie
