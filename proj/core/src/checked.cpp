#include "revwiener/checked.hpp"

#include <algorithm>
#include <limits>

namespace revwiener {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::WrongEdgeCount: return "WrongEdgeCount";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::SpecParseError: return "SpecParseError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DomainTooSmall: return "DomainTooSmall";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::EmptyClass: return "EmptyClass";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
  }
  return "Unknown";
}

Int exact_div(Int numerator, Int denominator) {
  if (denominator == 0) throw std::logic_error("exact_div: division by zero");
  if (numerator % denominator != 0) {
    throw std::logic_error("exact_div: " + to_string(numerator) + " is not divisible by " +
                           to_string(denominator));
  }
  return numerator / denominator;
}

std::string to_string(Int value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  std::string digits;
  // Work with negative remainders so the minimum value needs no special case.
  while (value != 0) {
    const int digit = static_cast<int>(value % 10);
    digits.push_back(static_cast<char>('0' + (negative ? -digit : digit)));
    value /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::optional<Int> parse_int(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
    if (text.size() == 1) return std::nullopt;
  }
  Int value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') return std::nullopt;
    if (__builtin_mul_overflow(value, Int(10), &value)) return std::nullopt;
    const Int digit = c - '0';
    if (negative ? __builtin_sub_overflow(value, digit, &value)
                 : __builtin_add_overflow(value, digit, &value)) {
      return std::nullopt;
    }
  }
  return value;
}

std::optional<std::int64_t> to_int64(Int value) noexcept {
  if (value < std::numeric_limits<std::int64_t>::min() ||
      value > std::numeric_limits<std::int64_t>::max()) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace revwiener
