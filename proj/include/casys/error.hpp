#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace casys {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class unknown_state : public error {
public:
  explicit unknown_state(const std::string &state)
    : error("unknown state '" + state + "'"), state_(state) {}
  const std::string &state() const noexcept { return state_; }

private:
  std::string state_;
};

class unknown_action : public error {
public:
  explicit unknown_action(const std::string &action)
    : error("action '" + action + "' is not in the alphabet"), action_(action) {}
  const std::string &action() const noexcept { return action_; }

private:
  std::string action_;
};

class unknown_terminal : public error {
public:
  explicit unknown_terminal(const std::string &terminal)
    : error("unknown terminal '" + terminal + "'"), terminal_(terminal) {}
  const std::string &terminal() const noexcept { return terminal_; }

private:
  std::string terminal_;
};

/// Raised when an operation needs composable operands; carries each
/// violated disjointness clause.
class not_composable : public error {
public:
  explicit not_composable(std::vector<std::string> clauses)
    : error(join("automata are not composable", clauses)),
      clauses_(std::move(clauses)) {}
  const std::vector<std::string> &clauses() const noexcept { return clauses_; }

  static std::string join(std::string head, const std::vector<std::string> &items) {
    for (const auto &item : items)
      head += "; " + item;
    return head;
  }

private:
  std::vector<std::string> clauses_;
};

class validation_failed : public error {
public:
  explicit validation_failed(std::vector<std::string> violations)
    : error(not_composable::join("validation failed", violations)),
      violations_(std::move(violations)) {}
  const std::vector<std::string> &violations() const noexcept { return violations_; }

private:
  std::vector<std::string> violations_;
};

class bound_exceeded : public error {
public:
  bound_exceeded(std::size_t requested, std::size_t cap)
    : error("enumeration bound " + std::to_string(requested) +
            " exceeds the cap of " + std::to_string(cap)),
      requested_(requested), cap_(cap) {}
  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t requested_;
  std::size_t cap_;
};

class provenance_mismatch : public error {
public:
  using error::error;
};

/// Malformed document. Syntax errors carry a 1-based line and column;
/// structural errors carry a JSON pointer to the offending value and
/// line = column = 0.
class parse_error : public error {
public:
  parse_error(const std::string &message, std::size_t line, std::size_t column)
    : error(line == 0 ? message
                      : "line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ": " + message),
      line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace casys
