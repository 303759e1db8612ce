#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slicefock {

enum class ErrorKind {
  InvalidArgument,
  ZeroDivisor,
  SingularPoint,
  ZeroValue,
  NotOrthogonal,
  UnitMismatch,
  BadRadius,
  GridTooCoarse,
  ViolationDetected,
  PointOffSlice,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library surfaces as this exception; `kind()` tells the
// caller (and the CLI exit-code mapping) what went wrong.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

// Raised when auto-refinement of a quadrature grid hits its cap without the
// successive values agreeing. `trace` holds one line per refinement step.
class GridTooCoarseError : public Error {
public:
  GridTooCoarseError(const std::string& message, std::vector<std::string> trace)
      : Error(ErrorKind::GridTooCoarse, message), trace_(std::move(trace)) {}

  const std::vector<std::string>& trace() const noexcept { return trace_; }

private:
  std::vector<std::string> trace_;
};

}  // namespace slicefock
