#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prpd {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed caller-supplied data: out-of-range ids, self-loops, mismatched
// field lengths, bad files.
class InputError : public Error {
 public:
  using Error::Error;
};

// A text source could not be parsed. `line()` is 1-based; 0 means the error
// is not tied to a specific line (e.g. truncated input).
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Input is well-formed but outside the domain of an operation (empty graph,
// invalid configuration, oracle size guard).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace prpd
