#include <gtest/gtest.h>

#include <limits>

#include "revwiener/checked.hpp"

namespace {

using namespace revwiener;

constexpr Int kMax = ~(Int(1) << 127);
constexpr Int kMin = Int(1) << 127;

TEST(Checked, ArithmeticWithinRange) {
  EXPECT_EQ(checked_add(2, 3), 5);
  EXPECT_EQ(checked_sub(2, 3), -1);
  EXPECT_EQ(checked_mul(Int(6), Int(7), Int(2)), 84);
}

TEST(Checked, OverflowThrows) {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::EmptyClass;
  };
  EXPECT_EQ(code_of([] { checked_add(kMax, 1); }), ErrorCode::Overflow);
  EXPECT_EQ(code_of([] { checked_sub(kMin, 1); }), ErrorCode::Overflow);
  EXPECT_EQ(code_of([] { checked_mul(kMax / 2 + 1, 2); }), ErrorCode::Overflow);
}

TEST(Checked, ExactDivisionRejectsRemainder) {
  EXPECT_EQ(exact_div(12, 4), 3);
  EXPECT_THROW(exact_div(13, 4), std::logic_error);
  EXPECT_THROW(exact_div(1, 0), std::logic_error);
}

TEST(Checked, DecimalRoundTrip) {
  for (Int v : {Int(0), Int(1), Int(-1), Int(1234567890123456789LL) * 1000, kMax, kMin}) {
    const auto parsed = parse_int(to_string(v));
    ASSERT_TRUE(parsed.has_value());
    EXPECT_EQ(*parsed, v);
  }
  EXPECT_EQ(to_string(kMax), "170141183460469231731687303715884105727");
  EXPECT_EQ(to_string(kMin), "-170141183460469231731687303715884105728");
}

TEST(Checked, ParseRejectsGarbage) {
  EXPECT_FALSE(parse_int(""));
  EXPECT_FALSE(parse_int("-"));
  EXPECT_FALSE(parse_int("12a"));
  EXPECT_FALSE(parse_int("170141183460469231731687303715884105728"));
}

TEST(Checked, NarrowingToInt64) {
  EXPECT_EQ(to_int64(Int(42)), 42);
  EXPECT_EQ(to_int64(Int(std::numeric_limits<std::int64_t>::min())), std::numeric_limits<std::int64_t>::min());
  EXPECT_FALSE(to_int64(Int(std::numeric_limits<std::int64_t>::max()) + 1));
}

}  // namespace
