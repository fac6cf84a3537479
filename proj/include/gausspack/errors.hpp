#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gausspack {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A physical parameter lies outside its admissible domain (e.g. mass <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested outside the numerically representable range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed call arguments (empty windows, too few samples, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for the requested system.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Unknown preset or named entity.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature did not reach its tolerance. Carries the best estimate.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double estimate, double error)
      : Error(what), estimate_(estimate), error_(error) {}

  double estimate() const noexcept { return estimate_; }
  double error() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

/// Grid too coarse or too narrow for a faithful spectral representation.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// A propagated packet came too close to the edge of the simulation box.
class BoundaryError : public Error {
 public:
  using Error::Error;
};

/// Scenario document failed to parse or validate.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string field, int line = 0)
      : Error(what), field_(std::move(field)), line_(line) {}

  /// Dotted path of the offending field, empty when not attributable.
  const std::string& field() const noexcept { return field_; }
  /// 1-based line number of a syntax error, 0 when not applicable.
  int line() const noexcept { return line_; }

 private:
  std::string field_;
  int line_;
};

}  // namespace gausspack
