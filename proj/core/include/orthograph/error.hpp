#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orthograph {

/// Failure categories raised by the library. Each value has a stable
/// name (see errc_name) that the CLI prints verbatim.
enum class Errc {
  // algebra
  InvalidField,
  FieldMismatch,
  DimensionMismatch,
  ZeroInverse,
  TrivialKernel,
  NotInvertible,
  ParseError,
  // classify
  NotTriangular,
  DimensionTooSmall,
  Unclassifiable,
  // ortho
  WrongClass,
  BadIndex,
  TooLarge,
  InfiniteField,
  // pathfinder
  NotAVertex,
  Disconnected,
  ConstructionFailed,
  // graph
  UnsupportedFormat,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace orthograph
