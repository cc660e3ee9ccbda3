#pragma once

#include <algorithm>
#include <cstddef>
#include <string>

#include "cookie/bounds.hpp"
#include "cookie/strategies.hpp"

namespace cookie {

/// Certified bracket on CM: lower from the halving and superincreasing
/// arguments, upper from an explicit strategy trace.
struct BoundReport {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::string lower_source;
  std::string upper_source;
};

inline BoundReport bound_report(const JarState& state, int max_nacci_order = kDefaultMaxNacciOrder) {
  BoundReport r;
  r.lower = log2_lower_bound(state.size());
  r.lower_source = "log2";
  if (auto exact = superincreasing_cm(state); exact && *exact > r.lower) {
    r.lower = *exact;
    r.lower_source = "superincreasing";
  }
  const StrategyTrace best = best_strategy(state, max_nacci_order);
  r.upper = best.length();
  r.upper_source = best.name;
  return r;
}

}  // namespace cookie
