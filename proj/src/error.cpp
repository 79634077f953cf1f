#include "gridmagic/error.hpp"

namespace gridmagic {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::CoordOutOfRange: return "CoordOutOfRange";
    case ErrorCode::DimensionOrderViolation: return "DimensionOrderViolation";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
  }
  return "Unknown";
}

namespace {

std::string budget_message(std::optional<std::int64_t> required, std::int64_t budget) {
  std::string msg = "search space of ";
  msg += required ? std::to_string(*required) : std::string("more than 2^63");
  msg += " assignments exceeds budget " + std::to_string(budget);
  return msg;
}

std::string parse_message(const std::string& what, std::size_t line, std::size_t offset) {
  if (line == 0 && offset == 0) return what;
  return what + " (line " + std::to_string(line) + ", offset " + std::to_string(offset) + ")";
}

}  // namespace

BudgetExceeded::BudgetExceeded(std::optional<std::int64_t> required, std::int64_t budget)
    : Error(ErrorCode::BudgetExceeded, budget_message(required, budget)),
      required_(required),
      budget_(budget) {}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t offset)
    : Error(ErrorCode::ParseError, parse_message(what, line, offset)), line_(line), offset_(offset) {}

}  // namespace gridmagic
