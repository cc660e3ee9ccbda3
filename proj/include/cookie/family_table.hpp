#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cookie/bounds.hpp"
#include "cookie/sequences.hpp"
#include "cookie/solver.hpp"
#include "cookie/strategies.hpp"

namespace cookie {

/// One k of a nacci family: the closed form, the strategy's actual length
/// and, when the oracle ran, the exact CM. A row whose solve failed keeps
/// `error` and has no exact value.
struct FamilyRow {
  std::size_t k = 0;
  std::size_t formula = 0;
  std::size_t strategy_len = 0;
  std::optional<std::size_t> exact_cm;
  bool agree = false;
  std::string error;

  bool complete() const noexcept { return error.empty(); }
};

/// Rows k = 1..k_max for {n_n, ..., n_{n+k-1}}. With `oracle` off only the
/// formula and the strategy are compared.
inline std::vector<FamilyRow> solve_family_table(int n, std::size_t k_max, const SolverConfig& config,
                                                 bool oracle = true) {
  std::vector<FamilyRow> rows;
  Solver solver(config);
  for (std::size_t k = 1; k <= k_max; ++k) {
    FamilyRow row;
    row.k = k;
    row.formula = nacci_cm_formula(n, k);
    const StrategyTrace trace = nacci_strategy(n, k);
    const Verdict v = verify_sequence(trace.sequence);
    row.strategy_len = v.empties ? trace.length() : 0;
    if (!v.empties) row.error = "strategy trace does not empty its source";
    row.agree = row.complete() && row.formula == row.strategy_len;
    if (oracle && row.complete()) {
      try {
        const SolveResult r = solver.solve(trace.sequence.source);
        if (r.exact()) row.exact_cm = r.cm;
        else row.error = std::string("solve ended with status ") + to_string(r.status);
      } catch (const Error& e) {
        row.error = e.what();
      }
      row.agree = row.agree && row.exact_cm && *row.exact_cm == row.formula;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// LF-terminated CSV, no quoting. Incomplete rows leave exact_cm empty.
inline void write_family_csv(std::ostream& out, const std::vector<FamilyRow>& rows, bool oracle = true) {
  out << (oracle ? "k,formula,strategy_len,exact_cm,agree\n" : "k,formula,strategy_len,agree\n");
  for (const auto& r : rows) {
    out << r.k << ',' << r.formula << ',' << r.strategy_len << ',';
    if (oracle) {
      if (r.exact_cm) out << *r.exact_cm;
      out << ',';
    }
    out << (r.agree ? "true" : "false") << '\n';
  }
}

}  // namespace cookie
