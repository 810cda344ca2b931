#pragma once

// Error taxonomy shared across the library. The CLI maps these onto its
// stable exit codes: ParseError and I/O failures -> 1, ResourceLimitError
// -> 2, ConfigError -> 3.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fcar {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// A configurable cap was exceeded (concept count, oracle input size,
// brute-force extent size).
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An enumerated option (index, activation, method, format) got a value
// outside its vocabulary.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fcar
