#include "revwiener/families.hpp"

#include <algorithm>
#include <map>

#include "revwiener/error.hpp"

namespace revwiener {

std::size_t Diam4Spec::k() const noexcept {
  std::size_t k = 0;
  for (const Part& p : parts) k += p.multiplicity;
  return k;
}

std::size_t Diam4Spec::n() const noexcept {
  std::size_t n = n0 + 1;
  for (const Part& p : parts) n += std::size_t(p.multiplicity) * (std::size_t(p.value) + 1);
  return n;
}

void validate(const Diam4Spec& spec) {
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    const Part& p = spec.parts[i];
    if (p.value < 1) fail(ErrorCode::InvalidSpec, "part values must be >= 1");
    if (p.multiplicity < 1) fail(ErrorCode::InvalidSpec, "part multiplicities must be >= 1");
    if (i > 0 && spec.parts[i - 1].value >= p.value) {
      fail(ErrorCode::InvalidSpec, "part values must be strictly increasing");
    }
  }
  if (spec.k() < 2) fail(ErrorCode::InvalidSpec, "a diameter-4 spec needs k >= 2 spokes");
}

void validate(const DoubleStarSpec& spec) {
  if (spec.a < 2 || spec.a > spec.n / 2) {
    fail(ErrorCode::InvalidSpec, "D(" + std::to_string(spec.n) + "," + std::to_string(spec.a) +
                                     ") needs 2 <= a <= n/2");
  }
}

Diam4Spec normalize(std::int64_t n0, std::span<const RawPart> parts) {
  if (n0 < 0) fail(ErrorCode::InvalidSpec, "negative hub pendant count");
  std::map<std::int64_t, std::int64_t> merged;
  for (const RawPart& p : parts) {
    if (p.value < 0) fail(ErrorCode::InvalidSpec, "negative part value " + std::to_string(p.value));
    if (p.multiplicity < 0) {
      fail(ErrorCode::InvalidSpec, "negative multiplicity for part " + std::to_string(p.value));
    }
    if (p.multiplicity == 0) continue;
    if (p.value == 0) {
      n0 += p.multiplicity;
    } else {
      merged[p.value] += p.multiplicity;
    }
  }
  Diam4Spec spec;
  spec.n0 = static_cast<std::uint32_t>(n0);
  for (const auto& [value, mult] : merged) {
    spec.parts.push_back({static_cast<std::uint32_t>(value), static_cast<std::uint32_t>(mult)});
  }
  validate(spec);
  return spec;
}

Tree star(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return Tree::from_edge_list(n, edges);
}

Tree path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Tree::from_edge_list(n, edges);
}

Tree double_star(const DoubleStarSpec& spec) {
  validate(spec);
  // 0 is the centre of S_a, 1 the centre of S_{n-a}.
  std::vector<Edge> edges{{0, 1}};
  Vertex next = 2;
  for (std::size_t i = 1; i < spec.a; ++i) edges.push_back({0, next++});
  for (std::size_t i = 1; i < spec.n - spec.a; ++i) edges.push_back({1, next++});
  return Tree::from_edge_list(spec.n, edges);
}

Tree diam4(const Diam4Spec& spec) {
  validate(spec);
  const std::size_t k = spec.k();
  std::vector<Edge> edges;
  edges.reserve(spec.n() - 1);
  for (Vertex spoke = 1; spoke <= k; ++spoke) edges.push_back({0, spoke});
  auto next = static_cast<Vertex>(k + 1);
  for (std::uint32_t i = 0; i < spec.n0; ++i) edges.push_back({0, next++});
  Vertex spoke = 1;
  for (const Part& p : spec.parts) {
    for (std::uint32_t b = 0; b < p.multiplicity; ++b, ++spoke) {
      for (std::uint32_t leaf = 0; leaf < p.value; ++leaf) edges.push_back({spoke, next++});
    }
  }
  return Tree::from_edge_list(spec.n(), edges);
}

Int lambda_double_star_closed(const DoubleStarSpec& spec) {
  validate(spec);
  const Int n = Int(spec.n);
  const Int a = Int(spec.a);
  const Int half = exact_div(checked_add(checked_mul(n, n), checked_mul(Int(3), n)), 2);
  return checked_sub(checked_sub(half, 2), checked_mul(a, n - a));
}

Int wiener_diam4_closed(const Diam4Spec& spec) {
  validate(spec);
  const Int n = Int(spec.n());
  const Int k = Int(spec.k());
  Int w = checked_mul(n - 1, checked_sub(checked_mul(Int(2), n), 3));
  w = checked_sub(w, checked_mul(n - 2, k));
  w = checked_sub(w, checked_mul(n - 2, Int(spec.n0)));
  for (const Part& p : spec.parts) {
    w = checked_sub(w, checked_mul(Int(p.multiplicity), Int(p.value), Int(p.value)));
  }
  return w;
}

Int lambda_diam4_closed(const Diam4Spec& spec) {
  const Int n = Int(spec.n());
  return checked_sub(checked_mul(Int(2), n, n - 1), wiener_diam4_closed(spec));
}

Tree build(const TreeDescriptor& d) {
  return std::visit(
      [](const auto& spec) -> Tree {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, StarSpec>) {
          return star(spec.n);
        } else if constexpr (std::is_same_v<T, PathSpec>) {
          return path(spec.n);
        } else if constexpr (std::is_same_v<T, DoubleStarSpec>) {
          return double_star(spec);
        } else if constexpr (std::is_same_v<T, Diam4Spec>) {
          return diam4(spec);
        } else {
          return tree_from_code(spec);
        }
      },
      d);
}

std::size_t vertex_count(const TreeDescriptor& d) {
  return std::visit(
      [](const auto& spec) -> std::size_t {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, Diam4Spec>) {
          return spec.n();
        } else if constexpr (std::is_same_v<T, CanonicalCode>) {
          return spec.vertex_count();
        } else {
          return spec.n;
        }
      },
      d);
}

TreeDescriptor identify(const Tree& t) {
  const DiameterInfo info = diameter_and_centers(t);
  const std::size_t n = t.size();
  if (info.diameter <= 2) return StarSpec{n};
  if (info.diameter == 3) {
    const std::size_t du = t.degree(info.centers[0]);
    const std::size_t dv = t.degree(info.centers[1]);
    return DoubleStarSpec{n, std::min(du, dv)};
  }
  if (info.diameter == 4) {
    const Vertex hub = info.centers.front();
    std::map<std::uint32_t, std::uint32_t> counts;
    std::uint32_t n0 = 0;
    for (Vertex w : t.neighbors(hub)) {
      if (t.is_leaf(w)) {
        ++n0;
      } else {
        ++counts[static_cast<std::uint32_t>(t.degree(w) - 1)];
      }
    }
    Diam4Spec spec;
    spec.n0 = n0;
    for (const auto& [value, mult] : counts) spec.parts.push_back({value, mult});
    return spec;
  }
  if (info.diameter + 1 == n) return PathSpec{n};
  return canonical_code(t);
}

}  // namespace revwiener
