#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "revwiener/checked.hpp"
#include "revwiener/tree.hpp"

namespace revwiener {

struct StarSpec {
  std::size_t n = 1;
  friend bool operator==(const StarSpec&, const StarSpec&) = default;
};

struct PathSpec {
  std::size_t n = 1;
  friend bool operator==(const PathSpec&, const PathSpec&) = default;
};

/// D_{n,a}: the centres of S_a and S_{n-a} joined by an edge, 2 <= a <= n/2.
struct DoubleStarSpec {
  std::size_t n = 4;
  std::size_t a = 2;
  friend bool operator==(const DoubleStarSpec&, const DoubleStarSpec&) = default;
};

/// `multiplicity` spokes each carrying `value` leaves.
struct Part {
  std::uint32_t value = 1;
  std::uint32_t multiplicity = 1;
  friend bool operator==(const Part&, const Part&) = default;
};

/// T_{n,k}(n0; n1^[b1], ..., ns^[bs]): a hub with n0 pendant vertices and
/// k = sum(b_i) spokes, b_i of which carry n_i leaves each. Every tree of
/// diameter 4 has exactly one such description once parts are sorted, so a
/// valid spec doubles as a canonical form for the class.
struct Diam4Spec {
  std::uint32_t n0 = 0;
  std::vector<Part> parts;  // strictly increasing values

  std::size_t k() const noexcept;
  std::size_t s() const noexcept { return parts.size(); }
  std::size_t n() const noexcept;

  friend bool operator==(const Diam4Spec&, const Diam4Spec&) = default;
};

/// A part as it falls out of a formula: values may be 0 and multiplicities
/// 0 or negative.
struct RawPart {
  std::int64_t value = 0;
  std::int64_t multiplicity = 0;
};

/// Throws InvalidSpec unless k >= 2, all values and multiplicities are >= 1
/// and values strictly increase.
void validate(const Diam4Spec& spec);
void validate(const DoubleStarSpec& spec);

/// Turns formula output into a valid spec: zero-multiplicity parts vanish, a
/// spoke with zero leaves is a hub pendant (n0 += b), equal values merge and
/// parts are sorted. Throws InvalidSpec on negative entries or k < 2.
Diam4Spec normalize(std::int64_t n0, std::span<const RawPart> parts);

Tree star(std::size_t n);
Tree path(std::size_t n);
Tree double_star(const DoubleStarSpec& spec);
Tree diam4(const Diam4Spec& spec);

/// n^2/2 + 3n/2 - 2 - a(n-a).
Int lambda_double_star_closed(const DoubleStarSpec& spec);
/// (n-1)(2n-3) - (n-2)k - (n-2)n0 - sum b_i n_i^2.
Int wiener_diam4_closed(const Diam4Spec& spec);
/// 2n(n-1) - W, since the diameter is 4.
Int lambda_diam4_closed(const Diam4Spec& spec);

/// Anything that names one tree up to isomorphism.
using TreeDescriptor = std::variant<StarSpec, PathSpec, DoubleStarSpec, Diam4Spec, CanonicalCode>;

Tree build(const TreeDescriptor& d);
std::size_t vertex_count(const TreeDescriptor& d);

/// Text syntax: "S(5)", "P(5)", "D(6,3)", "T(n0=1; 1^2)", "T(2^3)" and
/// "C(<canonical code>)".
std::string to_string(const TreeDescriptor& d);
TreeDescriptor parse_descriptor(std::string_view text);

/// Names a tree by family where one applies (star, double star, diameter 4,
/// path); falls back to its canonical code.
TreeDescriptor identify(const Tree& t);

}  // namespace revwiener
