#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "revwiener/closed_forms.hpp"
#include "revwiener/enumeration.hpp"
#include "revwiener/error.hpp"
#include "revwiener/invariants.hpp"

namespace {

using namespace revwiener;

std::set<CanonicalCode> codes(std::initializer_list<const char*> specs) {
  std::set<CanonicalCode> out;
  for (const char* s : specs) out.insert(canonical_code(build(parse_descriptor(s))));
  return out;
}

std::set<CanonicalCode> codes(const std::vector<TreeDescriptor>& ds) {
  std::set<CanonicalCode> out;
  for (const TreeDescriptor& d : ds) out.insert(canonical_code(build(d)));
  return out;
}

std::set<CanonicalCode> codes(const RankEntry& e) { return {e.trees.begin(), e.trees.end()}; }

TEST(FreeTrees, SmallCounts) {
  EXPECT_EQ(count_free_trees(4), 2u);
  EXPECT_EQ(count_free_trees(7), 11u);
  EXPECT_EQ(count_free_trees(10), 106u);
}

TEST(FreeTrees, GeneratorMatchesLabeledDedup) {
  for (std::size_t n = 1; n <= 9; ++n) {
    std::set<CanonicalCode> fast;
    for_each_free_tree(n, [&](const Tree& t) { fast.insert(canonical_code(t)); });
    const auto slow = free_trees_by_labeled_dedup(n);
    EXPECT_EQ(fast.size(), count_free_trees(n));
    EXPECT_EQ(fast, std::set<CanonicalCode>(slow.begin(), slow.end())) << n;
  }
}

TEST(FreeTrees, GeneratorMatchesAugmentationDedup) {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::set<CanonicalCode> fast;
    std::size_t streamed = 0;
    for_each_free_tree(n, [&](const Tree& t) {
      fast.insert(canonical_code(t));
      ++streamed;
    });
    const auto slow = free_trees_by_augmentation(n);
    EXPECT_EQ(streamed, fast.size()) << "duplicate at n=" << n;
    EXPECT_EQ(fast, std::set<CanonicalCode>(slow.begin(), slow.end())) << n;
  }
}

TEST(FreeTrees, OracleLabeledDedupAgrees) {
  // The test-side Prüfer decoder, independent of the library's.
  for (int n = 1; n <= 8; ++n) {
    std::set<CanonicalCode> seen;
    oracle::for_each_labeled_tree(n, [&](const oracle::Edges& e) { seen.insert(canonical_code(oracle::to_tree(n, e))); });
    EXPECT_EQ(seen.size(), count_free_trees(std::size_t(n))) << n;
  }
}

TEST(FreeTrees, BoundEnforced) {
  try {
    count_free_trees(21);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundExceeded);
  }
  EXPECT_EQ(count_free_trees(21, 21), 2144505u);
}

TEST(Diam4Specs, SmallCounts) {
  EXPECT_EQ(count_diam4_specs(4), 0u);
  EXPECT_EQ(count_diam4_specs(5), 1u);
  EXPECT_EQ(count_diam4_specs(6), 2u);
  EXPECT_EQ(count_diam4_specs(7), 5u);
  std::vector<Diam4Spec> five;
  for_each_diam4_spec(5, [&](const Diam4Spec& s) { five.push_back(s); });
  ASSERT_EQ(five.size(), 1u);
  EXPECT_EQ(canonical_code(diam4(five[0])), canonical_code(path(5)));
}

TEST(Diam4Specs, BijectiveOntoDiameterFourClasses) {
  for (std::size_t n = 5; n <= 16; ++n) {
    std::set<CanonicalCode> from_specs;
    for_each_diam4_spec(n, [&](const Diam4Spec& s) {
      const Tree t = diam4(s);
      ASSERT_EQ(diameter_and_centers(t).diameter, 4u);
      ASSERT_EQ(lambda_diam4_by_cuts(s), oracle::metrics(t).reverse_wiener);
      from_specs.insert(canonical_code(t));
    });
    EXPECT_EQ(from_specs.size(), count_diam4_specs(n)) << "duplicate class at n=" << n;
    std::set<CanonicalCode> from_trees;
    for_each_free_tree(n, [&](const Tree& t) {
      if (diameter_and_centers(t).diameter == 4) from_trees.insert(canonical_code(t));
    });
    EXPECT_EQ(from_specs, from_trees) << n;
  }
}

TEST(Ranking, Examples) {
  const auto r4 = rank_trees(4, 2);
  ASSERT_EQ(r4.size(), 2u);
  EXPECT_EQ(r4[0].value, 3);
  EXPECT_EQ(codes(r4[0]), codes({"S(4)"}));
  EXPECT_EQ(r4[1].value, 8);
  EXPECT_EQ(codes(r4[1]), codes({"P(4)"}));

  const auto r7 = rank_trees(7, 3);
  ASSERT_EQ(r7.size(), 3u);
  EXPECT_EQ(r7[0].value, 6);
  EXPECT_EQ(codes(r7[0]), codes({"S(7)"}));
  EXPECT_EQ(r7[1].value, 21);
  EXPECT_EQ(codes(r7[1]), codes({"D(7,3)"}));
  EXPECT_EQ(r7[2].value, 23);
  EXPECT_EQ(codes(r7[2]), codes({"D(7,2)"}));

  const auto r2 = rank_trees(2, 1);
  ASSERT_EQ(r2.size(), 1u);
  EXPECT_EQ(r2[0].value, 0);
  EXPECT_EQ(codes(r2[0]), codes({"P(2)"}));
}

TEST(Ranking, MatchesBruteForceSort) {
  for (std::size_t n = 3; n <= 12; ++n) {
    std::map<long long, std::set<CanonicalCode>> all;
    for_each_free_tree(n, [&](const Tree& t) { all[oracle::metrics(t).reverse_wiener].insert(canonical_code(t)); });
    const auto ranking = rank_trees(n, 6);
    auto it = all.begin();
    for (std::size_t i = 0; i < ranking.size(); ++i, ++it) {
      ASSERT_NE(it, all.end());
      EXPECT_EQ(ranking[i].value, it->first);
      EXPECT_EQ(codes(ranking[i]), it->second);
      EXPECT_EQ(ranking[i].count, it->second.size());
      if (i > 0) EXPECT_LT(ranking[i - 1].value, ranking[i].value);
    }
    EXPECT_EQ(ranking.size(), std::min<std::size_t>(6, all.size()));
  }
}

TEST(Ranking, IndependentOfWorkerCount) {
  for (std::size_t n : {9u, 13u, 15u}) {
    EnumerationLimits one;
    const auto base = rank_trees(n, 8, one);
    for (unsigned jobs : {2u, 3u, 7u}) {
      EnumerationLimits many;
      many.jobs = jobs;
      const auto other = rank_trees(n, 8, many);
      ASSERT_EQ(other.size(), base.size());
      for (std::size_t i = 0; i < base.size(); ++i) {
        EXPECT_EQ(other[i].value, base[i].value);
        EXPECT_EQ(other[i].trees, base[i].trees);
        EXPECT_EQ(other[i].count, base[i].count);
      }
    }
  }
}

TEST(Ranking, BucketCapFlagsTruncation) {
  EnumerationLimits limits;
  limits.bucket_cap = 1;
  const auto capped = rank_trees(12, 20, limits);
  const auto full = rank_trees(12, 20);
  bool any_truncated = false;
  for (std::size_t i = 0; i < full.size(); ++i) {
    EXPECT_EQ(capped[i].value, full[i].value);
    EXPECT_EQ(capped[i].count, full[i].count);
    ASSERT_EQ(capped[i].trees.size(), 1u);
    EXPECT_EQ(capped[i].trees[0], full[i].trees[0]);
    any_truncated |= capped[i].truncated();
  }
  EXPECT_TRUE(any_truncated);
}

TEST(Ranking, MergeIsOrderIndependent) {
  auto make = [](std::initializer_list<std::pair<int, const char*>> items) {
    Ranking r(2, 2);
    for (auto [v, code] : items) r.offer(v, [&] { return CanonicalCode{code}; });
    return r;
  };
  const Ranking a = make({{5, "(()())"}, {3, "(())"}, {5, "((()))"}});
  const Ranking b = make({{5, "(()(()))"}, {4, "()"}});
  Ranking ab = a;
  ab.merge(b);
  Ranking ba = b;
  ba.merge(a);
  ASSERT_EQ(ab.entries().size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(ab.entries()[i].value, ba.entries()[i].value);
    EXPECT_EQ(ab.entries()[i].trees, ba.entries()[i].trees);
    EXPECT_EQ(ab.entries()[i].count, ba.entries()[i].count);
  }
  EXPECT_EQ(ab.entries()[0].value, 3);
  EXPECT_EQ(ab.entries()[1].value, 4);
}

TEST(ClassExtremes, Examples) {
  const ExtremalResult m57 = min_lambda_diam(57, 4);
  EXPECT_EQ(m57.value, 896);
  EXPECT_EQ(codes(m57.attaining), codes({"T(7^7)", "T(6^8)"}));
  const ExtremalResult s6 = second_min_lambda_diam(6, 4);
  EXPECT_EQ(s6.value, 29);
  EXPECT_EQ(codes(s6.attaining), codes({"T(1; 1^2)"}));
  try {
    min_lambda_diam(5, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyClass);
  }
  try {
    second_min_lambda_diam(5, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyClass);
  }
  try {
    min_lambda_diam(81, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundExceeded);
  }
}

TEST(ClassExtremes, DiameterThreeAndFourMatchClosedForms) {
  for (std::int64_t n = 4; n <= 20; ++n) {
    const ExtremalResult m3 = min_lambda_diam(std::size_t(n), 3);
    EXPECT_EQ(m3.value, f_n3(n));
    EXPECT_EQ(codes(m3.attaining), codes(f_n3_result(n).attaining));
  }
  for (std::int64_t n = 5; n <= 70; ++n) {
    const ClassExtremes e = diameter_class_extremes(std::size_t(n), 4);
    EXPECT_EQ(e.min.value, f_n4_value(n));
    EXPECT_EQ(codes(e.min.attaining), codes(f_n4(n).attaining)) << n;
    if (n >= 6) EXPECT_EQ(e.second->value, g_n4_value(n)) << n;
  }
}

TEST(ClassExtremes, AgreeWithFullEnumeration) {
  for (std::size_t n = 5; n <= 13; ++n) {
    std::map<std::uint32_t, std::map<long long, std::set<CanonicalCode>>> by_d;
    for_each_free_tree(n, [&](const Tree& t) {
      const oracle::Metrics m = oracle::metrics(t);
      by_d[std::uint32_t(m.diameter)][m.reverse_wiener].insert(canonical_code(t));
    });
    for (const auto& [d, values] : by_d) {
      if (d < 2) continue;
      const ClassExtremes e = diameter_class_extremes(n, d);
      EXPECT_EQ(e.min.value, values.begin()->first);
      EXPECT_EQ(codes(e.min.attaining), values.begin()->second) << n << " d=" << d;
      if (values.size() > 1) {
        ASSERT_TRUE(e.second.has_value());
        EXPECT_EQ(e.second->value, std::next(values.begin())->first);
        EXPECT_EQ(codes(e.second->attaining), std::next(values.begin())->second);
      } else {
        EXPECT_FALSE(e.second.has_value());
      }
    }
  }
}

}  // namespace
