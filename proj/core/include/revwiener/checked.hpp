#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "revwiener/error.hpp"

namespace revwiener {

// All index arithmetic is carried out in signed 128-bit integers. Overflow is
// never silent: every helper below throws Error(Overflow) instead of wrapping.
__extension__ typedef __int128 Int;

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorCode::Overflow, "addition");
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) fail(ErrorCode::Overflow, "subtraction");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorCode::Overflow, "multiplication");
  return out;
}

template <typename... Rest>
Int checked_mul(Int a, Int b, Rest... rest) {
  return checked_mul(checked_mul(a, b), Int(rest)...);
}

// Division that must leave no remainder; a remainder means a formula was
// transcribed wrongly, so it is reported as a logic error rather than rounded.
Int exact_div(Int numerator, Int denominator);

std::string to_string(Int value);
std::optional<Int> parse_int(std::string_view text);

// Narrowing for serialisation; empty when the value does not fit.
std::optional<std::int64_t> to_int64(Int value) noexcept;

}  // namespace revwiener
