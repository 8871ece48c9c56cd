#include "revwiener/transforms.hpp"

#include <algorithm>
#include <optional>

#include "revwiener/error.hpp"

namespace revwiener {
namespace {

std::optional<Vertex> pendant_neighbor(const Tree& t, Vertex v) {
  for (Vertex w : t.neighbors(v)) {
    if (t.is_leaf(w)) return w;
  }
  return std::nullopt;
}

}  // namespace

bool has_center_pendant(const Tree& t) {
  if (t.size() < 2) return false;
  for (Vertex c : diameter_and_centers(t).centers) {
    if (pendant_neighbor(t, c)) return true;
  }
  return false;
}

PendantShift lemma1_pendant_shift(const Tree& t) {
  const DiameterInfo info = diameter_and_centers(t);
  if (info.diameter < 4) {
    fail(ErrorCode::PreconditionFailed, "pendant shift needs diameter >= 4, got " +
                                            std::to_string(info.diameter));
  }
  std::optional<Vertex> center;
  std::optional<Vertex> pendant;
  for (Vertex c : info.centers) {
    if (auto w = pendant_neighbor(t, c)) {
      center = c;
      pendant = w;
      break;
    }
  }
  if (!center) fail(ErrorCode::PreconditionFailed, "no center has a pendant neighbour");

  const std::size_t n = t.size();
  const RootedTree rooted = root_at(t, *center);
  std::optional<Vertex> target;
  for (bool allow_center : {false, true}) {
    for (Vertex x : t.neighbors(*center)) {
      if (x == *pendant || 2 * rooted.subtree_size[x] + 2 > n) continue;
      const bool is_center = std::find(info.centers.begin(), info.centers.end(), x) !=
                             info.centers.end();
      if (is_center && !allow_center) continue;
      target = x;
      break;
    }
    if (target) break;
  }
  // A branch of at most n/2 - 1 vertices always exists besides the pendant,
  // since two other branches share n - 2 vertices.
  if (!target) throw std::logic_error("pendant shift: no branch of size <= n/2 - 1");

  std::vector<Edge> edges = t.edges();
  for (Edge& e : edges) {
    if ((e.u == *center && e.v == *pendant) || (e.v == *center && e.u == *pendant)) {
      e = {*target, *pendant};
    }
  }
  const Int n1 = rooted.subtree_size[*target];
  const Int big_n = Int(n);
  const Int delta = checked_sub(checked_mul(n1, big_n - n1), checked_mul(n1 + 1, big_n - n1 - 1));
  return {Tree::from_edge_list(n, edges), delta, *center, *pendant, *target,
          rooted.subtree_size[*target]};
}

namespace {

Collapse collapse_at(const Tree& t, Vertex center) {
  const RootedTree rooted = root_at(t, center);
  std::vector<Edge> edges = t.edges();
  for (Edge& e : edges) {
    // Edges from a neighbour of the center down to its child.
    const Vertex child = rooted.parent[e.u] == e.v ? e.u : e.v;
    const Vertex up = rooted.parent[child];
    if (child != center && up != center) {
      if (rooted.parent[up] == center) e = {center, child};
    }
  }

  const std::size_t n = t.size();
  const Int big_n = Int(n);
  Collapse out{Tree::from_edge_list(n, edges), 0, center, {}};
  Int sum = 0;
  for (Vertex x : t.neighbors(center)) {
    const Int ni = rooted.subtree_size[x];
    out.branch_sizes.push_back(rooted.subtree_size[x]);
    sum = checked_add(sum, checked_mul(ni, big_n - ni));
  }
  const Int p = Int(out.branch_sizes.size());
  out.delta = checked_sub(checked_sub(sum, checked_mul(big_n, big_n - 1)), checked_mul(p, big_n - 1));
  return out;
}

}  // namespace

Collapse lemma2_collapse(const Tree& t) {
  const DiameterInfo info = diameter_and_centers(t);
  if (info.diameter < 4) {
    fail(ErrorCode::PreconditionFailed, "collapse needs diameter >= 4, got " +
                                            std::to_string(info.diameter));
  }
  if (has_center_pendant(t)) fail(ErrorCode::PreconditionFailed, "a center has a pendant neighbour");

  // With odd diameter, collapsing at one center can leave the far side two
  // levels deep in two branches, so the diameter only drops by 1. Take the
  // first center that reaches d - 2; if neither does, the construction is
  // still applied at the smallest one and the caller sees the shortfall.
  std::optional<Collapse> first;
  for (Vertex c : info.centers) {
    Collapse out = collapse_at(t, c);
    if (diameter_and_centers(out.tree).diameter + 2 == info.diameter) return out;
    if (!first) first = std::move(out);
  }
  return std::move(*first);
}

Rebalance lemma3_rebalance(const Diam4Spec& spec, std::size_t i, std::size_t j) {
  validate(spec);
  if (i >= spec.parts.size() || j >= spec.parts.size()) {
    fail(ErrorCode::PreconditionFailed, "part index out of range");
  }
  const std::int64_t from = spec.parts[i].value;
  const std::int64_t to = spec.parts[j].value;
  if (from - to < 2) {
    fail(ErrorCode::PreconditionFailed, "rebalance needs n_i - n_j >= 2, got " +
                                            std::to_string(from) + " and " + std::to_string(to));
  }
  std::vector<RawPart> raw;
  for (std::size_t p = 0; p < spec.parts.size(); ++p) {
    std::int64_t mult = spec.parts[p].multiplicity;
    if (p == i || p == j) --mult;
    raw.push_back({spec.parts[p].value, mult});
  }
  raw.push_back({from - 1, 1});
  raw.push_back({to + 1, 1});
  return {normalize(spec.n0, raw), Int(-2) * Int(from - to - 1)};
}

Contraction lemma5_contract(const Tree& t) {
  const DiameterInfo info = diameter_and_centers(t);
  if (info.diameter != 5) {
    fail(ErrorCode::PreconditionFailed, "contraction needs diameter 5, got " +
                                            std::to_string(info.diameter));
  }
  if (has_center_pendant(t)) fail(ErrorCode::PreconditionFailed, "a center has a pendant neighbour");

  // Merge v into u and reuse v's label for the new pendant on the merged vertex.
  const Vertex u = info.centers[0];
  const Vertex v = info.centers[1];
  const RootedTree rooted = root_at(t, u);
  std::vector<Edge> edges = t.edges();
  for (Edge& e : edges) {
    if (e.u == v && e.v != u) e.u = u;
    if (e.v == v && e.u != u) e.v = u;
  }
  const std::size_t n = t.size();
  const std::size_t side_v = rooted.subtree_size[v];
  const std::size_t side_u = n - side_v;
  const Int big_n = Int(n);
  const Int half_pairs = exact_div(checked_mul(big_n, big_n - 1), 2);
  const Int gain = checked_add(checked_sub(half_pairs, checked_mul(Int(side_u), Int(side_v))), big_n - 1);
  return {Tree::from_edge_list(n, edges), -gain, side_u, side_v};
}

}  // namespace revwiener
