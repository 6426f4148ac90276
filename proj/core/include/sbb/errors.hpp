#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sbb {

/// Base class for all errors raised by the solver library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainTooSmallError : public Error {
 public:
  using Error::Error;
};

class GridMismatchError : public Error {
 public:
  using Error::Error;
};

class NonMonotoneMapError : public Error {
 public:
  using Error::Error;
};

class NonConvexInputError : public Error {
 public:
  using Error::Error;
};

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// The stretching map y + (1/beta) d/dy log h failed strict monotonicity.
/// Carries the offending node indices; this signals that the current
/// iterate violates the beta-convexity constraint (sigma would be <= 0).
class MonotonicityViolationError : public Error {
 public:
  MonotonicityViolationError(const std::string& what, std::vector<int> nodes)
      : Error(what), nodes_(std::move(nodes)) {}
  const std::vector<int>& nodes() const { return nodes_; }

 private:
  std::vector<int> nodes_;
};

class NonPositiveSigmaError : public Error {
 public:
  using Error::Error;
};

class TimeNotStoredError : public Error {
 public:
  using Error::Error;
};

class ConvexOrderError : public Error {
 public:
  using Error::Error;
};

class InsufficientTimesError : public Error {
 public:
  using Error::Error;
};

class SchemeMismatchError : public Error {
 public:
  using Error::Error;
};

class PathEscapeError : public Error {
 public:
  PathEscapeError(const std::string& what, long count)
      : Error(what), count_(count) {}
  long count() const { return count_; }

 private:
  long count_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class LayoutMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace sbb
