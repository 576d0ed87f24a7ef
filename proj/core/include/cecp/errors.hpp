#pragma once

#include <stdexcept>
#include <string>

namespace cecp {

// Every failure raised by the library derives from Error. The subclasses map
// one-to-one onto the CLI exit codes (see exit_code()).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value outside the mathematical domain of an operation (NaN, infinity,
// probability vectors that do not sum to one).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Mismatched lengths or alphabet sizes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Input too short or a parameter outside its admissible range.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Bad run configuration: unknown reference series, malformed config file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Unreadable or malformed input data.
class DataError : public Error {
 public:
  using Error::Error;
};

// A computed result violated an invariant that should hold by construction.
class InvariantError : public Error {
 public:
  using Error::Error;
};

enum class ExitCode : int {
  kSuccess = 0,
  kUnexpected = 1,
  kConfig = 2,
  kData = 3,
  kInvariant = 4,
};

// Parameter and precondition failures are configuration errors; domain and
// shape errors only arise from the data itself.
inline ExitCode exit_code(const Error& e) {
  if (dynamic_cast<const InvariantError*>(&e)) return ExitCode::kInvariant;
  if (dynamic_cast<const ConfigError*>(&e)) return ExitCode::kConfig;
  if (dynamic_cast<const PreconditionError*>(&e)) return ExitCode::kConfig;
  if (dynamic_cast<const DataError*>(&e)) return ExitCode::kData;
  if (dynamic_cast<const DomainError*>(&e)) return ExitCode::kData;
  if (dynamic_cast<const ShapeError*>(&e)) return ExitCode::kData;
  return ExitCode::kUnexpected;
}

}  // namespace cecp
