#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cookie/errors.hpp"
#include "cookie/jar_state.hpp"

namespace cookie {

/// Order-n recurrence seeded with n-1 zeros followed by a one, so n = 2 gives
/// Fibonacci (0, 1, 1, 2, ...) and n = 3 gives Tribonacci (0, 0, 1, 1, 2, ...).
class NacciFamily {
 public:
  explicit NacciFamily(int order) : order_(order) {
    if (order < 2) throw Error("nacci order must be at least 2, got " + std::to_string(order));
  }

  int order() const noexcept { return order_; }

  /// Terms 0 .. count-1. Throws OverflowError once a term leaves 64 bits.
  std::vector<count_t> terms(std::size_t count) const {
    std::vector<count_t> out;
    out.reserve(count);
    const auto n = static_cast<std::size_t>(order_);
    count_t window = 0;  // sum of the last n terms
    for (std::size_t i = 0; i < count; ++i) {
      count_t t;
      if (i + 1 < n) t = 0;
      else if (i + 1 == n) t = 1;
      else t = window;
      out.push_back(t);
      if (i + 1 == count) break;
      if (i >= n) window -= out[i - n];
      window = checked::add(window, t);
    }
    return out;
  }

  count_t term(std::size_t i) const { return terms(i + 1).back(); }

  /// The k jars {n_n, ..., n_{n+k-1}}: the first index past the seeds with
  /// no duplicate ones.
  JarState jar_set(std::size_t k) const {
    if (k == 0) return {};
    const auto n = static_cast<std::size_t>(order_);
    auto t = terms(n + k);
    return JarState::from_counts(std::span<const count_t>(t).subspan(n));
  }

 private:
  int order_;
};

inline count_t nacci_term(int n, std::size_t i) { return NacciFamily(n).term(i); }

inline JarState nacci_jar_set(int n, std::size_t k) { return NacciFamily(n).jar_set(k); }

/// True iff each value strictly exceeds the sum of all smaller values.
inline bool is_superincreasing(const JarState& state) {
  count_t below = 0;
  for (count_t v : state) {
    if (v <= below) return false;
    below = checked::add(below, v);
  }
  return true;
}

/// F_{k+1} - 1 == F_1 + ... + F_{k-1}, evaluated exactly.
inline bool fibonacci_identity_holds(std::size_t k) {
  if (k < 1) throw Error("fibonacci identity is stated for k >= 1");
  const auto f = NacciFamily(2).terms(k + 2);
  count_t sum = 0;
  for (std::size_t i = 1; i + 1 <= k; ++i) sum = checked::add(sum, f[i]);
  return f[k + 1] - 1 == sum;
}

/// (T_{k+1} > T_1 + ... + T_{k-1},  T_{k+2} - T_{k+1} > T_1 + ... + T_{k-1})
inline std::pair<bool, bool> tribonacci_inequalities_hold(std::size_t k) {
  if (k < 1) throw Error("tribonacci inequalities are stated for k >= 1");
  const auto t = NacciFamily(3).terms(k + 3);
  count_t sum = 0;
  for (std::size_t i = 1; i + 1 <= k; ++i) sum = checked::add(sum, t[i]);
  return {t[k + 1] > sum, t[k + 2] - t[k + 1] > sum};
}

/// Smallest index at which the stated base case is claimed to start.
inline constexpr std::size_t kTribonacciClaimedBase = 1;
/// Smallest index from which both inequalities actually hold: at k = 1 the
/// second one reads 0 > 0.
inline constexpr std::size_t kTribonacciTrueBase = 2;

/// Checks both inequalities on every k in [first, last]; returns the first
/// failing index, or 0 when all hold.
inline std::size_t tribonacci_first_failure(std::size_t first, std::size_t last) {
  for (std::size_t k = first; k <= last; ++k) {
    auto [a, b] = tribonacci_inequalities_hold(k);
    if (!a || !b) return k;
  }
  return 0;
}

}  // namespace cookie
