#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace decaylab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed damping expression. Carries the byte offset of the first
/// offending position in the input string.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Damping evaluation produced a non-finite or non-positive value, or hit a
/// domain violation (log of a non-positive number, fractional power of a
/// negative base, division by zero).
class EvalError : public Error {
  using Error::Error;
};

class SpecError : public Error {
  using Error::Error;
};

class StructError : public Error {
  using Error::Error;
};

/// A power tail was combined with expression damping; tail limits are only
/// available in closed form for constant and power damping.
class RejectedTailError : public Error {
  using Error::Error;
};

class ResonantInputError : public Error {
  using Error::Error;
};

class RegionMismatchError : public Error {
  using Error::Error;
};

class BracketError : public Error {
  using Error::Error;
};

class DomainError : public Error {
  using Error::Error;
};

class ConfigError : public Error {
  using Error::Error;
};

class IoError : public Error {
  using Error::Error;
};

}  // namespace decaylab
