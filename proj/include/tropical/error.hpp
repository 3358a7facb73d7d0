#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropical {

enum class ErrorKind {
  ZeroVector,
  DimensionMismatch,
  UnsupportedDimension,
  EmptyPolyhedron,
  Unbounded,
  NotInSupport,
  MonomialInput,
  NotATerm,
  NotACommonCell,
  NotProper,
  NotIsolated,
  IncompatibleFans,
  InvalidArgument,
};

std::string_view error_name(ErrorKind kind);

// Mathematical precondition failure. The CLI maps these to exit code 3.
class TropicalError : public std::runtime_error {
 public:
  TropicalError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tropical
