#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "revwiener/error.hpp"
#include "revwiener/families.hpp"
#include "revwiener/tree.hpp"

namespace {

using namespace revwiener;

ErrorCode error_of(std::size_t n, std::vector<Edge> edges) {
  try {
    Tree::from_edge_list(n, edges);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::EmptyClass;
}

TEST(TreeValidation, RejectsMalformedEdgeSets) {
  EXPECT_EQ(error_of(3, {{0, 1}}), ErrorCode::WrongEdgeCount);
  EXPECT_EQ(error_of(0, {}), ErrorCode::WrongEdgeCount);
  EXPECT_EQ(error_of(3, {{0, 0}, {1, 2}}), ErrorCode::SelfLoop);
  EXPECT_EQ(error_of(3, {{0, 1}, {1, 0}}), ErrorCode::DuplicateEdge);
  EXPECT_EQ(error_of(4, {{0, 1}, {1, 2}, {2, 0}}), ErrorCode::Disconnected);
  EXPECT_EQ(error_of(3, {{0, 1}, {1, 3}}), ErrorCode::LabelOutOfRange);
}

TEST(TreeValidation, SingleVertexAndEdge) {
  EXPECT_EQ(Tree::from_edge_list(1, {}).size(), 1u);
  const Tree t = Tree::from_edge_list(2, std::vector<Edge>{{1, 0}});
  EXPECT_EQ(t.degree(0), 1u);
  EXPECT_TRUE(t.is_leaf(1));
}

TEST(Tree, NeighboursSorted) {
  const Tree t = Tree::from_edge_list(5, std::vector<Edge>{{0, 4}, {0, 2}, {0, 3}, {0, 1}});
  const auto nb = t.neighbors(0);
  EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
  EXPECT_EQ(nb.size(), 4u);
}

TEST(Tree, DiameterAndCentersAgreeWithFloydWarshall) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + int(rng() % 40);
    const auto edges = oracle::random_tree(rng, n);
    const Tree t = oracle::to_tree(n, edges);
    const auto d = oracle::floyd_warshall(n, edges);
    int diameter = 0;
    std::vector<int> ecc(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        ecc[i] = std::max(ecc[i], d[i][j]);
        diameter = std::max(diameter, d[i][j]);
      }
    const int radius = *std::min_element(ecc.begin(), ecc.end());
    std::vector<Vertex> centers;
    for (int v = 0; v < n; ++v)
      if (ecc[v] == radius) centers.push_back(Vertex(v));
    const DiameterInfo info = diameter_and_centers(t);
    EXPECT_EQ(int(info.diameter), diameter);
    EXPECT_EQ(info.centers, centers);
  }
}

TEST(Tree, EdgeCutSidesSumToN) {
  const Tree t = diam4(Diam4Spec{1, {{1, 1}, {2, 1}}});
  for (const EdgeCut& c : edge_cut_profile(t)) EXPECT_EQ(c.side_u + c.side_v, t.size());
}

TEST(CanonicalCode, InvariantUnderRelabeling) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + int(rng() % 30);
    const Tree t = oracle::to_tree(n, oracle::random_tree(rng, n));
    std::vector<Vertex> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = Vertex(v);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_code(t), canonical_code(t.relabeled(perm)));
  }
}

TEST(CanonicalCode, RoundTripsThroughTree) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + int(rng() % 30);
    const Tree t = oracle::to_tree(n, oracle::random_tree(rng, n));
    const CanonicalCode code = canonical_code(t);
    EXPECT_EQ(code.vertex_count(), std::size_t(n));
    EXPECT_EQ(canonical_code(tree_from_code(code)), code);
  }
}

TEST(CanonicalCode, SeparatesAllLabeledClassesOnSevenVertices) {
  // 7^5 labeled trees fall into exactly 11 isomorphism classes.
  std::set<CanonicalCode> codes;
  oracle::for_each_labeled_tree(7, [&](const oracle::Edges& e) { codes.insert(canonical_code(oracle::to_tree(7, e))); });
  EXPECT_EQ(codes.size(), 11u);
}

TEST(CanonicalCode, MalformedCodeIsParseError) {
  for (const char* bad : {"", "(", "(()", "())(", "x"}) {
    try {
      tree_from_code(CanonicalCode{bad});
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(EdgeListFormat, RoundTrip) {
  const Tree t = double_star(DoubleStarSpec{7, 3});
  std::stringstream s;
  write_edge_list(s, t);
  const Tree back = read_edge_list(s);
  EXPECT_EQ(back.edges().size(), t.edges().size());
  EXPECT_EQ(canonical_code(back), canonical_code(t));
}

TEST(EdgeListFormat, MalformedInputIsParseError) {
  for (const char* bad : {"", "x\n", "3\n0 1\n", "3\n0 1\n1\n", "2\n0 1 2\n", "2\n0 -1\n"}) {
    std::istringstream in(bad);
    try {
      read_edge_list(in);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(EdgeListFormat, StructuralErrorsKeepTheirCodes) {
  std::istringstream in("4\n0 1\n1 2\n2 0\n");
  try {
    read_edge_list(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Disconnected);
  }
}

}  // namespace
