#pragma once

#include <stdexcept>
#include <string>

namespace ribscope {

// Base of every error the toolkit raises on its own behalf. The CLI maps the
// three top-level categories to exit codes: config 1, data 2, numeric 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

class IoError : public DataError {
 public:
  using DataError::DataError;
};

class FormatError : public DataError {
 public:
  using DataError::DataError;
};

class EmptySnapshotError : public DataError {
 public:
  using DataError::DataError;
};

// Raised when a country filter leaves no route entries; distinguishable from
// parse failures so callers can tell "bad file" from "no such country here".
class EmptyPeerSetError : public DataError {
 public:
  using DataError::DataError;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

// Model estimation failure; carries the best state seen before giving up.
class FitError : public NumericError {
 public:
  FitError(const std::string& message, int iterations, double sse)
      : NumericError(message + " (iterations=" + std::to_string(iterations) +
                     ", sse=" + std::to_string(sse) + ")"),
        iterations(iterations),
        sse(sse) {}

  int iterations = 0;
  double sse = 0.0;
};

}  // namespace ribscope
