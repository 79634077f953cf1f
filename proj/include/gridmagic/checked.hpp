#pragma once

#include <cstdint>
#include <string_view>

#include "gridmagic/error.hpp"

namespace gridmagic {

// Signed 64-bit arithmetic that throws Error(Overflow) instead of wrapping.
// Magic-sum identities are checked with exact equality, so a silent wrap
// could turn a wrong answer into a matching one.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b, std::string_view what = "addition") {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, std::string(what));
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b, std::string_view what = "subtraction") {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, std::string(what));
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b, std::string_view what = "multiplication") {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, std::string(what));
  return r;
}

// 2^k for 0 <= k <= 62.
inline std::int64_t checked_pow2(std::int64_t k) {
  if (k < 0 || k > 62) throw Error(ErrorCode::Overflow, "power of two exponent " + std::to_string(k));
  return std::int64_t{1} << k;
}

}  // namespace gridmagic
