#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "revwiener/checked.hpp"
#include "revwiener/tree.hpp"

namespace revwiener {

struct TreeMetrics {
  std::size_t n = 0;
  Int wiener = 0;
  std::uint32_t diameter = 0;
  Int reverse_wiener = 0;
  std::vector<Vertex> centers;
};

/// W(T) as the sum over edges of the product of the two side sizes. O(n).
Int wiener_edge_cut(const Tree& t);

/// W(T) from n breadth-first searches; the independent check for
/// wiener_edge_cut. O(n^2).
Int wiener_bfs(const Tree& t);

/// n(n-1)d/2 - W for the given ingredients; n(n-1) is even so the halving is
/// exact.
Int reverse_wiener_from(std::size_t n, std::uint32_t diameter, Int wiener);

Int reverse_wiener(const Tree& t);

TreeMetrics metrics(const Tree& t);

}  // namespace revwiener
