#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fqpts {

enum class ErrorCode {
  NotPrime,
  NotIrreducible,
  BudgetExceeded,
  FieldMismatch,
  DivisionByZero,
  SyntaxError,
  ExponentArityMismatch,
  CoefficientOutOfRange,
  ArityMismatch,
  IndexOutOfRange,
  ParseError,
  NotHomogeneous,
  ZeroGenerator,
  DimensionMismatch,
  BadSingularDim,
  UnsupportedExtension,
  PointNotOnVariety,
  ArithmeticOverflow,
  MissingBetti,
  InvalidInput,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for every failure the engine reports. `position`
/// carries the byte offset of a syntax error, the line of a file parse error,
/// or the generator index of a validation error; it is npos otherwise.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(ErrorCode code, const std::string& message, std::size_t position = npos)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::size_t position_;
};

}  // namespace fqpts
