#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adjecc {

/// A caller passed values that violate an operation's precondition
/// (length mismatch, out-of-range position, malformed bit string).
class argument_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed matrix or code file. `line()` is 1-based; 0 means "end of input".
class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace adjecc
