#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace cookie {

using count_t = std::uint64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

enum class MoveErrorKind { AbsentTarget, Overdraw, ZeroAmount, EmptyTargets };

inline const char* to_string(MoveErrorKind kind) {
  switch (kind) {
    case MoveErrorKind::AbsentTarget: return "AbsentTarget";
    case MoveErrorKind::Overdraw: return "Overdraw";
    case MoveErrorKind::ZeroAmount: return "ZeroAmount";
    case MoveErrorKind::EmptyTargets: return "EmptyTargets";
  }
  return "Unknown";
}

/// A move that cannot be applied to the state it was given. When raised while
/// replaying a sequence, `move_index()` names the offending move.
class MoveError : public Error {
 public:
  MoveError(MoveErrorKind kind, const std::string& detail,
            std::optional<std::size_t> index = std::nullopt)
      : Error(format(kind, detail, index)), kind_(kind), detail_(detail), index_(index) {}

  MoveErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> move_index() const noexcept { return index_; }

  MoveError at(std::size_t index) const { return MoveError(kind_, detail_, index); }

 private:
  static std::string format(MoveErrorKind kind, const std::string& detail,
                            std::optional<std::size_t> index) {
    std::string msg = to_string(kind);
    if (index) msg += " at move " + std::to_string(*index);
    if (!detail.empty()) msg += ": " + detail;
    return msg;
  }

  MoveErrorKind kind_;
  std::string detail_;
  std::optional<std::size_t> index_;
};

/// Input outside the solver's configured caps.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace checked {

inline count_t add(count_t a, count_t b) {
  count_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow in addition");
  return r;
}

inline count_t mul(count_t a, count_t b) {
  count_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in multiplication");
  return r;
}

}  // namespace checked

}  // namespace cookie
