#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cookie/cookie.hpp"

namespace cookie::cli {

/// Process exit codes. Stable; documented in the README.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,        // any other runtime error (overflow, I/O)
  kUsage = 2,          // bad arguments or unparsable input
  kLimitExceeded = 3,  // input outside the solver caps
  kBudgetExceeded = 4, // --time-budget ran out before the search finished
  kNotEmptied = 5,     // verify: replay failed or left jars behind
};

namespace detail {

inline JarState state_from_tokens(const std::vector<std::string>& tokens) {
  std::string joined;
  for (const auto& t : tokens) joined += t + ' ';
  return JarState::from_counts(parse_counts(joined));
}

inline std::vector<JarState> states_from_input(const std::vector<std::string>& tokens,
                                               const std::string& file) {
  if (file.empty()) return {state_from_tokens(tokens)};
  if (!tokens.empty()) throw CLI::ValidationError("give jars inline or with --file, not both");
  std::ifstream in(file);
  if (!in) throw Error("cannot open " + file);
  return read_states(in);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string targets_text(const Move& m) {
  std::string s;
  for (std::size_t i = 0; i < m.targets.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(m.targets[i]);
  }
  return s;
}

inline void print_moves(std::ostream& out, const MoveSequence& seq) {
  for (std::size_t i = 0; i < seq.moves.size(); ++i)
    out << "move " << i + 1 << ": take " << seq.moves[i].amount << " from "
        << targets_text(seq.moves[i]) << '\n';
}

// Caps come from the defaults, then the environment, then explicit flags.
inline void apply_env_caps(SolverConfig& config) {
  auto read = [](const char* name) -> std::optional<count_t> {
    const char* v = std::getenv(name);
    if (!v || !*v) return std::nullopt;
    auto parsed = parse_counts(v);
    if (parsed.size() != 1) throw CLI::ValidationError(std::string(name) + " must be one integer");
    return parsed.front();
  };
  if (auto v = read("COOKIE_SOLVER_MAX_VALUE")) config.max_value = *v;
  if (auto v = read("COOKIE_SOLVER_MAX_JARS")) config.max_jars = static_cast<std::size_t>(*v);
}

struct SolverFlags {
  std::string mode = "full";
  unsigned threads = 1;
  std::optional<long long> budget_ms;
  std::optional<count_t> max_value;
  std::optional<std::size_t> max_jars;

  void attach(CLI::App* cmd) {
    cmd->add_option("--mode", mode, "amount enumeration: full (exact) or restricted (heuristic)")
        ->check(CLI::IsMember({"full", "restricted"}));
    cmd->add_option("--threads", threads, "solver worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--time-budget", budget_ms, "wall-clock budget per solve, in milliseconds")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-value", max_value, "largest jar value accepted");
    cmd->add_option("--max-jars", max_jars, "largest jar count accepted");
  }

  SolverConfig config() const {
    SolverConfig c;
    apply_env_caps(c);
    if (max_value) c.max_value = *max_value;
    if (max_jars) c.max_jars = *max_jars;
    c.amount_mode = mode == "restricted" ? AmountMode::Restricted : AmountMode::Full;
    c.threads = threads;
    if (budget_ms) c.time_budget = std::chrono::milliseconds(*budget_ms);
    return c;
  }
};

}  // namespace detail

/// Runs one command line. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver, strategies and bounds for the Cookie Monster problem", "cookie_monster"};
  app.require_subcommand(1);
  int code = kOk;

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "exact Cookie Monster number with a witness");
  std::vector<std::string> solve_jars;
  std::string solve_file;
  bool solve_json = false;
  detail::SolverFlags solve_flags;
  solve_cmd->add_option("jars", solve_jars, "jar counts (space or comma separated)");
  solve_cmd->add_option("--file", solve_file, "read one jar state per line");
  solve_cmd->add_flag("--json", solve_json, "print JSON");
  solve_flags.attach(solve_cmd);
  solve_cmd->callback([&] {
    const SolverConfig config = solve_flags.config();
    const auto states = detail::states_from_input(solve_jars, solve_file);
    json docs = json::array();
    for (const auto& s : states) {
      const SolveResult r = Solver(config).solve(s);
      if (r.status == SolveStatus::BudgetExceeded) {
        err << "time budget exceeded on " << to_string(s) << ": cm in [" << r.lower << ", "
            << r.upper << "]\n";
        code = std::max<int>(code, kBudgetExceeded);
      }
      if (solve_json) {
        docs.push_back(to_json(r));
        continue;
      }
      out << "state " << to_string(s) << '\n';
      out << "cm=" << r.cm << " status=" << to_string(r.status) << " lower=" << r.lower
          << " upper=" << r.upper << '\n';
      detail::print_moves(out, r.optimal);
      out << "nodes_expanded=" << r.stats.nodes_expanded << " memo_hits=" << r.stats.memo_hits
          << " depth_limit_used=" << r.stats.depth_limit_used << '\n';
    }
    if (solve_json) out << (solve_file.empty() ? docs.at(0) : docs).dump(2) << '\n';
  });

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "certified lower and upper bounds");
  std::vector<std::string> bound_jars;
  bool bound_json = false;
  bound_cmd->add_option("jars", bound_jars, "jar counts");
  bound_cmd->add_flag("--json", bound_json, "print JSON");
  bound_cmd->callback([&] {
    const JarState s = detail::state_from_tokens(bound_jars);
    const BoundReport b = bound_report(s);
    if (bound_json) {
      json j = to_json(b);
      j["source"] = to_json(s);
      out << j.dump(2) << '\n';
      return;
    }
    out << "state " << to_string(s) << '\n'
        << "lower=" << b.lower << " (" << b.lower_source << ")\n"
        << "upper=" << b.upper << " (" << b.upper_source << ")\n";
  });

  // strategy
  auto* strat_cmd = app.add_subcommand("strategy", "constructive move sequence");
  std::vector<std::string> strat_jars;
  std::optional<int> strat_n;
  std::optional<std::size_t> strat_k;
  std::string strat_name = "best";
  bool strat_json = false;
  strat_cmd->add_option("jars", strat_jars, "jar counts");
  auto* n_opt = strat_cmd->add_option("--n", strat_n, "nacci order (with --k)")->check(CLI::Range(2, 64));
  auto* k_opt = strat_cmd->add_option("--k", strat_k, "nacci jar count (with --n)");
  n_opt->needs(k_opt);
  k_opt->needs(n_opt);
  strat_cmd->add_option("--name", strat_name, "best, binary or one_by_one")
      ->check(CLI::IsMember({"best", "binary", "one_by_one"}));
  strat_cmd->add_flag("--json", strat_json, "print JSON");
  strat_cmd->callback([&] {
    StrategyTrace t;
    if (strat_n) {
      if (!strat_jars.empty()) throw CLI::ValidationError("give jars or --n/--k, not both");
      t = nacci_strategy(*strat_n, *strat_k);
    } else {
      const JarState s = detail::state_from_tokens(strat_jars);
      if (strat_name == "binary") t = binary_decomposition(s);
      else if (strat_name == "one_by_one") t = one_by_one(s);
      else t = best_strategy(s);
    }
    if (!verify_sequence(t.sequence).empties) throw Error("internal: strategy trace does not empty its source");
    if (strat_json) {
      out << to_json(t).dump(2) << '\n';
      return;
    }
    out << "state " << to_string(t.sequence.source) << '\n' << "strategy=" << t.name;
    if (t.predicted_length) out << " predicted=" << *t.predicted_length;
    out << " actual=" << t.length() << '\n';
    detail::print_moves(out, t.sequence);
  });

  // sequence
  auto* seq_cmd = app.add_subcommand("sequence", "n-nacci terms, one per line as index<TAB>value");
  int seq_n = 2;
  std::size_t seq_count = 10;
  std::size_t seq_from = 0;
  seq_cmd->add_option("--n", seq_n, "recurrence order")->required()->check(CLI::Range(2, 1 << 20));
  seq_cmd->add_option("--count", seq_count, "number of terms");
  seq_cmd->add_option("--from", seq_from, "first index");
  seq_cmd->callback([&] {
    const auto terms = NacciFamily(seq_n).terms(seq_from + seq_count);
    for (std::size_t i = seq_from; i < terms.size(); ++i) out << i << '\t' << terms[i] << '\n';
  });

  // table
  auto* table_cmd = app.add_subcommand("table", "formula vs strategy (vs exact) for one nacci family");
  int table_n = 2;
  std::size_t table_kmax = 5;
  bool table_oracle = false;
  detail::SolverFlags table_flags;
  table_cmd->add_option("--n", table_n, "nacci order")->required()->check(CLI::Range(2, 64));
  table_cmd->add_option("--k-max", table_kmax, "largest jar count")->required();
  table_cmd->add_flag("--oracle", table_oracle, "add the exact_cm column from the solver");
  table_flags.attach(table_cmd);
  table_cmd->callback([&] {
    const auto rows = solve_family_table(table_n, table_kmax, table_flags.config(), table_oracle);
    write_family_csv(out, rows, table_oracle);
    for (const auto& r : rows)
      if (!r.complete()) {
        err << "k=" << r.k << ": " << r.error << '\n';
        code = std::max<int>(code, kFailure);
      }
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "replay a move sequence against a jar state");
  std::string verify_state, verify_moves;
  bool verify_json = false;
  verify_cmd->add_option("state_file", verify_state, "jar state, one line")->required();
  verify_cmd->add_option("moves_file", verify_moves, "moves as JSON")->required();
  verify_cmd->add_flag("--json", verify_json, "print JSON");
  verify_cmd->callback([&] {
    std::ifstream in(verify_state);
    if (!in) throw Error("cannot open " + verify_state);
    const auto states = read_states(in);
    if (states.size() > 1) throw CLI::ValidationError(verify_state + " must hold exactly one state");
    const JarState s = states.empty() ? JarState{} : states.front();
    json doc;
    try {
      doc = json::parse(detail::read_file(verify_moves));
    } catch (const json::parse_error& e) {
      throw ParseError(e.what(), 1, e.byte);
    }
    if (auto recorded = source_from_json(doc); recorded && *recorded != s)
      throw CLI::ValidationError("moves were recorded for " + to_string(*recorded) + ", not " + to_string(s));
    const MoveSequence seq = sequence_from_json(doc);
    Verdict v;
    try {
      v = verify_sequence(s, seq);
    } catch (const MoveError& e) {
      err << "replay failed: " << e.what() << '\n';
      code = kNotEmptied;
      return;
    }
    if (verify_json) {
      out << json{{"empties", v.empties}, {"final_state", to_json(v.final_state)},
                  {"cookies_eaten", v.cookies_eaten}}
                 .dump(2)
          << '\n';
    } else {
      out << "empties=" << (v.empties ? "true" : "false") << '\n'
          << "final_state=" << format_state(v.final_state) << '\n'
          << "cookies_eaten=" << v.cookies_eaten << '\n';
    }
    if (!v.empties) code = kNotEmptied;
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::Error& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kLimitExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return code;
}

}  // namespace cookie::cli
