#pragma once

#include <stdexcept>
#include <string>

namespace eplasing {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid model parameters, mismatched dimensions, out-of-range indices.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Iteration caps, unreachable tolerances, overflow.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Analysis routines fed data they cannot characterise (constant series,
/// spans too short, events that never happen).
class AnalysisError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  ConfigError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  /// 1-based line of the offending entry, 0 when not tied to a line.
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace eplasing
