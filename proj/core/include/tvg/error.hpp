#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tvg {

// Base for every error thrown by the library.
class TvgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A model invariant was violated: out-of-range component, duplicate edge or
// label, an edge outside a model class, mismatched matrix dimensions.
class ModelError : public TvgError {
 public:
  using TvgError::TvgError;
};

// Malformed text input. Carries the 1-based line number when known (0 otherwise).
class ParseError : public TvgError {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : TvgError(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tvg
