#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace revwiener {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// An n-vertex tree on the dense label set [0, n).
///
/// Instances are validated at construction and immutable afterwards, so a
/// Tree may be shared freely between threads. Adjacency is stored in CSR form
/// with every neighbour list sorted ascending, which makes all traversals
/// deterministic.
class Tree {
 public:
  /// Validates and builds a tree. Throws Error with one of WrongEdgeCount,
  /// LabelOutOfRange, SelfLoop, DuplicateEdge or Disconnected. n = 0 is
  /// reported as WrongEdgeCount since no edge set can describe it.
  static Tree from_edge_list(std::size_t n, std::span<const Edge> edges);

  /// Builds a tree from a parent array (parent[root] == root).
  static Tree from_parents(std::span<const Vertex> parent);

  std::size_t size() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool is_leaf(Vertex v) const noexcept { return degree(v) == 1; }

  /// Returns the same tree with vertex v renamed to permutation[v].
  Tree relabeled(std::span<const Vertex> permutation) const;

 private:
  Tree() = default;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Vertex> adjacency_;
};

/// Distances from `source` to every vertex. Throws LabelOutOfRange.
std::vector<std::uint32_t> bfs_distances(const Tree& t, Vertex source);

struct DiameterInfo {
  std::uint32_t diameter = 0;
  std::vector<Vertex> centers;  // one or two labels, ascending
};

/// Diameter by double sweep; centers are the middle vertex (or the middle
/// edge's endpoints) of a longest path.
DiameterInfo diameter_and_centers(const Tree& t);

/// BFS ordering of a tree hung from `root`, with subtree sizes.
struct RootedTree {
  Vertex root = 0;
  std::vector<Vertex> parent;            // parent[root] == root
  std::vector<Vertex> order;             // BFS order, root first
  std::vector<std::uint32_t> subtree_size;
};

RootedTree root_at(const Tree& t, Vertex root);

struct EdgeCut {
  Edge edge;
  std::size_t side_u = 0;  // vertices on u's side once the edge is removed
  std::size_t side_v = 0;
};

using EdgeCutProfile = std::vector<EdgeCut>;

/// One entry per edge, in edge order. Requires n >= 2.
EdgeCutProfile edge_cut_profile(const Tree& t);

/// Canonical encoding of a free tree: the parenthesised AHU code of the tree
/// rooted at its center (the smaller of the two codes when bicentral).
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string code) : code_(std::move(code)) {}

  const std::string& str() const noexcept { return code_; }
  std::size_t vertex_count() const noexcept { return code_.size() / 2; }

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string code_;
};

CanonicalCode canonical_code(const Tree& t);

/// AHU code of `t` hung from `root`.
std::string rooted_code(const Tree& t, Vertex root);

/// Rebuilds a representative tree from a canonical (or any rooted
/// parenthesised) code. Throws ParseError on malformed input.
Tree tree_from_code(const CanonicalCode& code);

/// Edge-list text format: a line with n, then n-1 lines "u v".
Tree read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Tree& t);

}  // namespace revwiener

template <>
struct std::hash<revwiener::CanonicalCode> {
  std::size_t operator()(const revwiener::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.str());
  }
};
