#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace gridmagic {

enum class ErrorCode {
  DimensionTooSmall,
  Overflow,
  CoordOutOfRange,
  DimensionOrderViolation,
  SpecMismatch,
  BudgetExceeded,
  ParseError,
  VersionMismatch,
  UnsupportedDimension,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Search space larger than the caller's budget. required() is empty when the
// size itself does not fit in 64 bits.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::optional<std::int64_t> required, std::int64_t budget);

  std::optional<std::int64_t> required() const noexcept { return required_; }
  std::int64_t budget() const noexcept { return budget_; }

 private:
  std::optional<std::int64_t> required_;
  std::int64_t budget_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t offset = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

}  // namespace gridmagic
