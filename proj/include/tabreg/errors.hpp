#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tabreg {

/// Raised when a computation would exceed one of the configured size limits.
/// Carries the guard name and the count reached so callers can report it.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(std::string guard, std::size_t reached, std::size_t limit)
      : std::runtime_error("guard '" + guard + "' exceeded: reached " + std::to_string(reached) +
                           " (limit " + std::to_string(limit) + ")"),
        guard_(std::move(guard)),
        reached_(reached),
        limit_(limit) {}

  GuardExceeded(std::string guard, std::size_t reached, std::size_t limit, const std::string& message)
      : std::runtime_error(message), guard_(std::move(guard)), reached_(reached), limit_(limit) {}

  const std::string& guard() const noexcept { return guard_; }
  std::size_t reached() const noexcept { return reached_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string guard_;
  std::size_t reached_;
  std::size_t limit_;
};

/// Malformed tableau or partition text. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

inline void check_guard(const char* guard, std::size_t reached, std::size_t limit) {
  if (reached > limit) throw GuardExceeded(guard, reached, limit);
}

}  // namespace tabreg
