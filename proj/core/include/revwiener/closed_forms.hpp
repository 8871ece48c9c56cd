#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "revwiener/checked.hpp"
#include "revwiener/families.hpp"

namespace revwiener {

/// n = q^2 + r with 1 <= r <= 2q + 1 (equivalently q^2 < n <= (q+1)^2).
struct QR {
  std::int64_t n = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
};

QR qr_decompose(std::int64_t n);

enum class Rank {
  OverallFirst,
  OverallSecond,
  OverallThird,
  ClassMin,        // f(n, d)
  ClassSecondMin,  // g(n, d)
};

std::string_view to_string(Rank rank) noexcept;

/// A minimum (or runner-up) reverse Wiener value together with every tree
/// attaining it. `diameter` is meaningful for the class ranks only.
struct ExtremalResult {
  Rank rank = Rank::ClassMin;
  std::uint32_t diameter = 0;
  Int value = 0;
  std::vector<TreeDescriptor> attaining;
  std::vector<std::string> notes;  // formula specs that failed validation etc.
};

Int f_n2(std::int64_t n);
/// n^2/2 + 3n/2 - 2 - floor(n/2) ceil(n/2).
Int f_n3(std::int64_t n);
/// The same minimum written in q and r; must agree with f_n3 everywhere.
Int f_n3_qr(std::int64_t n);
/// n^2/2 + 3n/2 - 2 - (floor(n/2) - 1)(ceil(n/2) + 1).
Int g_n3(std::int64_t n);

Int f_n4_value(std::int64_t n);
Int g_n4_value(std::int64_t n);

ExtremalResult f_n3_result(std::int64_t n);
ExtremalResult g_n3_result(std::int64_t n);
ExtremalResult f_n4(std::int64_t n);
ExtremalResult g_n4(std::int64_t n);

/// The overall second and third smallest values with their trees, read off
/// the characterisation theorems (n >= 4 and n >= 5 respectively).
ExtremalResult second_smallest(std::int64_t n);
ExtremalResult third_smallest(std::int64_t n);

}  // namespace revwiener
