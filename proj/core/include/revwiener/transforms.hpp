#pragma once

#include <cstddef>
#include <vector>

#include "revwiener/checked.hpp"
#include "revwiener/families.hpp"
#include "revwiener/tree.hpp"

namespace revwiener {

// Each rewrite returns the new tree together with delta = Λ(out) - Λ(in)
// evaluated from the rewrite's own formula, never by recomputing Λ, so that
// callers can check the two against each other. Where several vertices
// qualify, the smallest label is taken.

/// True when some center of t has a pendant neighbour.
bool has_center_pendant(const Tree& t);

struct PendantShift {
  Tree tree;
  Int delta;
  Vertex center;
  Vertex pendant;
  Vertex target;               // neighbour of `center` that receives the pendant
  std::size_t target_side;     // vertices in target's branch before the move
};

/// Moves a pendant neighbour w of a center v onto the neighbour v1 of v whose
/// branch has at most n/2 - 1 vertices. Diameter is unchanged and
/// delta = n1(n - n1) - (n1 + 1)(n - n1 - 1). Branches not rooted at the other
/// center are preferred.
/// Requires diameter >= 4 and a center with a pendant neighbour.
PendantShift lemma1_pendant_shift(const Tree& t);

struct Collapse {
  Tree tree;
  Int delta;
  Vertex center;
  std::vector<std::size_t> branch_sizes;  // n_i for each neighbour of center
};

/// Re-hangs every grandchild of a center directly on it, which lowers the
/// diameter by 2; delta = -n(n-1) + sum n_i(n - n_i) - p(n-1). The smallest
/// center for which the diameter does drop by 2 is used. For odd diameter
/// there may be none (both far sides branch at full depth); the rewrite is
/// then done at the smallest center, the diameter drops by only 1 and delta
/// no longer equals the true change.
/// Requires diameter >= 4 and no center with a pendant neighbour.
Collapse lemma2_collapse(const Tree& t);

struct Rebalance {
  Diam4Spec spec;
  Int delta;
};

/// Moves one leaf from a spoke carrying parts[i].value leaves to one carrying
/// parts[j].value leaves; delta = -2(n_i - n_j - 1). Requires a gap >= 2.
Rebalance lemma3_rebalance(const Diam4Spec& spec, std::size_t i, std::size_t j);

struct Contraction {
  Tree tree;
  Int delta;
  std::size_t side_u;  // the two sides of the central edge
  std::size_t side_v;
};

/// Contracts the central edge of a diameter-5 tree and hangs a new pendant on
/// the merged vertex: diameter 4 with a center pendant,
/// delta = -(n(n-1)/2 - n1 n2 + (n-1)).
/// Requires diameter exactly 5 and no center with a pendant neighbour.
Contraction lemma5_contract(const Tree& t);

}  // namespace revwiener
