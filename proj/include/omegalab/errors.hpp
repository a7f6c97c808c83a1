#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omegalab {

/// Invalid input parameters (even k, p/q < 2, out-of-range vertex, ...).
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured budget (vertices, simplices, search nodes) was exceeded.
/// Never used to signal a negative answer.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A caller-side precondition or a checked mathematical invariant failed.
class ContractError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Malformed text input; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace omegalab
