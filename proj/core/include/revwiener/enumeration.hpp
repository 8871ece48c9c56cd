#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "revwiener/checked.hpp"
#include "revwiener/closed_forms.hpp"
#include "revwiener/families.hpp"
#include "revwiener/tree.hpp"

namespace revwiener {

struct EnumerationLimits {
  std::size_t max_n_free = 20;
  std::size_t max_n_diam4 = 80;
  std::size_t bucket_cap = 64;  // trees kept per tie set
  unsigned jobs = 1;
};

/// Non-isomorphic free trees on n vertices in constant amortised time
/// (Wright, Richmond, Odlyzko and McKay): every tree is produced once as the
/// level sequence of its center-rooted canonical form.
///
///   FreeTreeGenerator gen(n);
///   while (gen.next()) use(gen.tree());
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(std::size_t n);

  bool next();
  std::span<const std::uint32_t> level_sequence() const noexcept { return levels_; }
  Tree tree() const;

 private:
  bool successor(std::size_t p);
  void make_valid();

  std::size_t n_;
  std::vector<std::uint32_t> levels_;
  bool started_ = false;
  bool done_ = false;
};

/// Streams every free tree on n vertices. Throws BoundExceeded above max_n.
void for_each_free_tree(std::size_t n, const std::function<void(const Tree&)>& visit,
                        std::size_t max_n = 20);
std::size_t count_free_trees(std::size_t n, std::size_t max_n = 20);

/// Slow references for cross-checking the generator. Augmentation grows every
/// tree on n-1 vertices by one leaf in all positions and dedups by canonical
/// code (n <= 14); the labeled variant decodes all n^(n-2) Prüfer sequences
/// (n <= 9).
std::vector<CanonicalCode> free_trees_by_augmentation(std::size_t n);
std::vector<CanonicalCode> free_trees_by_labeled_dedup(std::size_t n);

/// Every diameter-4 class on n vertices exactly once: n0 hub pendants times a
/// partition of the remaining n - 1 - n0 vertices into k >= 2 spokes of size
/// >= 2. Empty for n < 5.
void for_each_diam4_spec(std::size_t n, const std::function<void(const Diam4Spec&)>& visit);
std::size_t count_diam4_specs(std::size_t n);

/// Λ of the diameter-4 tree described by spec, summed edge by edge from its
/// structure (hub pendants, spoke edges, spoke leaves) rather than through
/// the simplified polynomial.
Int lambda_diam4_by_cuts(const Diam4Spec& spec);

/// D_{n,a} for a = 2 .. n/2.
void for_each_double_star(std::size_t n, const std::function<void(const DoubleStarSpec&)>& visit);

struct RankEntry {
  Int value = 0;
  std::vector<CanonicalCode> trees;  // sorted; the smallest bucket_cap codes
  std::size_t count = 0;             // trees attaining value, kept or not

  bool truncated() const noexcept { return count > trees.size(); }
};

/// The k smallest distinct values seen, each with its tie set. Merging is
/// associative and order independent, so partial rankings from workers can
/// be combined in any order.
class Ranking {
 public:
  Ranking(std::size_t k, std::size_t bucket_cap);

  /// `make_code` is invoked only if value lands among the k smallest.
  template <typename MakeCode>
  void offer(Int value, MakeCode&& make_code) {
    if (entries_.size() == k_ && value > entries_.back().value) return;
    insert(value, make_code());
  }

  void merge(const Ranking& other);
  const std::vector<RankEntry>& entries() const noexcept { return entries_; }

 private:
  void insert(Int value, CanonicalCode code);
  void add_code(RankEntry& entry, CanonicalCode code, std::size_t count);

  std::size_t k_;
  std::size_t cap_;
  std::vector<RankEntry> entries_;
};

/// The k smallest distinct Λ values over all free trees on n vertices.
std::vector<RankEntry> rank_trees(std::size_t n, std::size_t k, const EnumerationLimits& limits = {});

/// Class minimum and runner-up over the n-vertex trees of diameter d,
/// found by enumeration: double stars for d = 3, diameter-4 specs for d = 4,
/// the full free-tree stream otherwise. Throws EmptyClass or BoundExceeded.
struct ClassExtremes {
  ExtremalResult min;
  std::optional<ExtremalResult> second;
};

ClassExtremes diameter_class_extremes(std::size_t n, std::uint32_t d,
                                      const EnumerationLimits& limits = {});
ExtremalResult min_lambda_diam(std::size_t n, std::uint32_t d, const EnumerationLimits& limits = {});
ExtremalResult second_min_lambda_diam(std::size_t n, std::uint32_t d,
                                      const EnumerationLimits& limits = {});

}  // namespace revwiener
