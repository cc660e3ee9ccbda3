#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cookie/bound_report.hpp"
#include "cookie/jar_state.hpp"
#include "cookie/solver.hpp"
#include "cookie/strategies.hpp"

namespace cookie {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Jar lists: space- and/or comma-separated non-negative integers on one line.

inline std::vector<count_t> parse_counts(std::string_view line, std::size_t line_no = 1) {
  std::vector<count_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t' || c == ',' || c == '\r') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(std::string("unexpected character '") + c + "'", line_no, i + 1);
    std::size_t j = i;
    while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
    count_t v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, v);
    if (ec != std::errc{}) throw ParseError("integer out of range", line_no, i + 1);
    if (ptr != line.data() + j) throw ParseError("malformed integer", line_no, i + 1);
    out.push_back(v);
    i = j;
  }
  return out;
}

/// One jar state per non-blank line; lines starting with '#' are skipped.
inline std::vector<JarState> read_states(std::istream& in) {
  std::vector<JarState> out;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(JarState::from_counts(parse_counts(line, line_no)));
  }
  return out;
}

inline std::string format_state(const JarState& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline json to_json(const JarState& s) { return json(s.vector()); }

inline json to_json(const Move& m) { return json{{"amount", m.amount}, {"targets", m.targets}}; }

inline json to_json(const MoveSequence& seq) {
  json moves = json::array();
  for (const auto& m : seq.moves) moves.push_back(to_json(m));
  return json{{"source", to_json(seq.source)}, {"moves", std::move(moves)}};
}

inline json to_json(const StrategyTrace& t) {
  json j{{"strategy", t.name}};
  j["predicted"] = t.predicted_length ? json(*t.predicted_length) : json(nullptr);
  j["actual"] = t.length();
  j["source"] = to_json(t.sequence.source);
  j["moves"] = to_json(t.sequence)["moves"];
  return j;
}

inline json to_json(const SolveResult& r) {
  return json{{"source", to_json(r.optimal.source)},
              {"cm", r.cm},
              {"status", to_string(r.status)},
              {"exact", r.exact()},
              {"lower", r.lower},
              {"upper", r.upper},
              {"amount_mode", to_string(r.amount_mode)},
              {"optimal", to_json(r.optimal)},
              {"stats",
               {{"nodes_expanded", r.stats.nodes_expanded},
                {"memo_hits", r.stats.memo_hits},
                {"depth_limit_used", r.stats.depth_limit_used}}}};
}

inline json to_json(const BoundReport& b) {
  return json{{"lower", b.lower},
              {"upper", b.upper},
              {"lower_source", b.lower_source},
              {"upper_source", b.upper_source}};
}

namespace detail {

inline count_t json_count(const json& j, const char* what) {
  if (!j.is_number_unsigned()) throw Error(std::string(what) + " must be a non-negative integer");
  return j.get<count_t>();
}

inline std::vector<count_t> json_counts(const json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string(what) + " must be an array");
  std::vector<count_t> out;
  for (const auto& v : j) out.push_back(json_count(v, what));
  return out;
}

}  // namespace detail

inline Move move_from_json(const json& j) {
  if (!j.is_object() || !j.contains("amount") || !j.contains("targets"))
    throw Error("a move needs \"amount\" and \"targets\"");
  Move m{detail::json_count(j.at("amount"), "amount"), detail::json_counts(j.at("targets"), "targets")};
  std::sort(m.targets.begin(), m.targets.end());
  m.targets.erase(std::unique(m.targets.begin(), m.targets.end()), m.targets.end());
  return m;
}

namespace detail {

inline const json& sequence_body(const json& j) {
  if (j.is_object() && j.contains("optimal")) return j.at("optimal");
  return j;
}

}  // namespace detail

/// The source state recorded in a document, if it records one.
inline std::optional<JarState> source_from_json(const json& j) {
  const json& body = detail::sequence_body(j);
  if (!body.is_object() || !body.contains("source")) return std::nullopt;
  return JarState::from_counts(detail::json_counts(body.at("source"), "source"));
}

/// Reads a move list from any document this library writes: a bare array of
/// moves, a MoveSequence, a strategy trace, or a solve result.
inline MoveSequence sequence_from_json(const json& j) {
  MoveSequence seq;
  if (auto src = source_from_json(j)) seq.source = std::move(*src);
  const json& body = detail::sequence_body(j);
  const json* moves = &body;
  if (body.is_object()) {
    if (!body.contains("moves")) throw Error("document has no \"moves\"");
    moves = &body.at("moves");
  }
  if (!moves->is_array()) throw Error("\"moves\" must be an array");
  for (const auto& m : *moves) seq.moves.push_back(move_from_json(m));
  return seq;
}

}  // namespace cookie
