#pragma once

#include <bit>
#include <cstddef>
#include <optional>

#include "cookie/jar_state.hpp"
#include "cookie/sequences.hpp"

namespace cookie {

/// ceil(log2(k + 1)): each move can at most halve (jar count + 1).
constexpr std::size_t log2_lower_bound(std::size_t k) noexcept {
  return static_cast<std::size_t>(std::bit_width(k));
}

/// Exact CM of a superincreasing set, which is its size; absent otherwise.
inline std::optional<std::size_t> superincreasing_cm(const JarState& state) {
  if (!is_superincreasing(state)) return std::nullopt;
  return state.size();
}

/// ceil((k + 1) / 2) for {F_2, ..., F_{k+1}}.
constexpr std::size_t fibonacci_cm_formula(std::size_t k) noexcept {
  return k == 0 ? 0 : (k + 2) / 2;
}

/// floor(2k / 3) + 1 for {T_3, ..., T_{k+2}}.
constexpr std::size_t tribonacci_cm_formula(std::size_t k) noexcept {
  return k == 0 ? 0 : 2 * k / 3 + 1;
}

/// ceil((n - 1)(k - 1) / n) + 1 for {n_n, ..., n_{n+k-1}}. Proven only for
/// n = 2 and n = 3; for larger n it is checked, never assumed.
constexpr std::size_t nacci_cm_formula(int n, std::size_t k) noexcept {
  if (k == 0) return 0;
  const auto order = static_cast<std::size_t>(n);
  return ((order - 1) * (k - 1) + order - 1) / order + 1;
}

}  // namespace cookie
