#include <algorithm>
#include <thread>

#include "revwiener/enumeration.hpp"
#include "revwiener/error.hpp"
#include "revwiener/invariants.hpp"

namespace revwiener {
namespace {

// Partitions of `total` into at least two nondecreasing spoke sizes >= 2,
// carrying the running edge-cut sum of the spokes chosen so far. A spoke of
// size s contributes s(n-s) for its hub edge and (s-1)(n-1) for its leaves.
template <typename Visit>
void spoke_partitions(std::int64_t n, std::int64_t remaining, std::int64_t min_size,
                      std::vector<std::int64_t>& sizes, std::int64_t cut_sum, Visit& visit) {
  for (std::int64_t s = min_size; s <= remaining; ++s) {
    const std::int64_t rest = remaining - s;
    if (rest != 0 && rest < s) continue;
    if (rest == 0 && sizes.empty()) continue;  // k >= 2
    sizes.push_back(s);
    const std::int64_t sum = cut_sum + s * (n - s) + (s - 1) * (n - 1);
    if (rest == 0) {
      visit(std::span<const std::int64_t>(sizes), sum);
    } else {
      spoke_partitions(n, rest, s, sizes, sum, visit);
    }
    sizes.pop_back();
  }
}

// Calls visit(n0, sizes, wiener) for every diameter-4 class on n vertices.
template <typename Visit>
void diam4_classes(std::size_t n, Visit&& visit) {
  if (n < 5) return;
  if (n > (std::size_t(1) << 20)) fail(ErrorCode::BoundExceeded, "diameter-4 enumeration too large");
  const auto big_n = static_cast<std::int64_t>(n);
  std::vector<std::int64_t> sizes;
  for (std::int64_t n0 = 0; n0 <= big_n - 5; ++n0) {
    auto with_n0 = [&](std::span<const std::int64_t> spokes, std::int64_t spoke_sum) {
      visit(n0, spokes, n0 * (big_n - 1) + spoke_sum);
    };
    spoke_partitions(big_n, big_n - 1 - n0, 2, sizes, 0, with_n0);
  }
}

Diam4Spec spec_from_sizes(std::int64_t n0, std::span<const std::int64_t> sizes) {
  Diam4Spec spec;
  spec.n0 = static_cast<std::uint32_t>(n0);
  for (std::int64_t s : sizes) {
    const auto value = static_cast<std::uint32_t>(s - 1);
    if (!spec.parts.empty() && spec.parts.back().value == value) {
      ++spec.parts.back().multiplicity;
    } else {
      spec.parts.push_back({value, 1});
    }
  }
  return spec;
}

// The two smallest values seen and their attaining descriptors, kept in
// enumeration order up to the cap.
class TwoLowest {
 public:
  explicit TwoLowest(std::size_t cap) : cap_(cap) {}

  template <typename MakeDescriptor>
  void offer(Int value, MakeDescriptor&& make) {
    if (buckets_.size() == 2 && value > buckets_[1].value) return;
    auto it = std::lower_bound(buckets_.begin(), buckets_.end(), value,
                               [](const Bucket& b, Int v) { return b.value < v; });
    if (it != buckets_.end() && it->value == value) {
      ++it->count;
      if (it->items.size() < cap_) it->items.push_back(make());
      return;
    }
    buckets_.insert(it, Bucket{value, {make()}, 1});
    if (buckets_.size() > 2) buckets_.pop_back();
  }

  bool empty() const { return buckets_.empty(); }

  std::optional<ExtremalResult> result(std::size_t index, Rank rank, std::uint32_t d) const {
    if (index >= buckets_.size()) return std::nullopt;
    const Bucket& b = buckets_[index];
    ExtremalResult r;
    r.rank = rank;
    r.diameter = d;
    r.value = b.value;
    r.attaining = b.items;
    std::sort(r.attaining.begin(), r.attaining.end(),
              [](const TreeDescriptor& x, const TreeDescriptor& y) { return to_string(x) < to_string(y); });
    if (b.count > b.items.size()) {
      r.notes.push_back("tie set truncated: kept " + std::to_string(b.items.size()) + " of " +
                        std::to_string(b.count) + " trees");
    }
    return r;
  }

 private:
  struct Bucket {
    Int value;
    std::vector<TreeDescriptor> items;
    std::size_t count;
  };
  std::size_t cap_;
  std::vector<Bucket> buckets_;
};

}  // namespace

void for_each_diam4_spec(std::size_t n, const std::function<void(const Diam4Spec&)>& visit) {
  diam4_classes(n, [&](std::int64_t n0, std::span<const std::int64_t> sizes, std::int64_t) {
    visit(spec_from_sizes(n0, sizes));
  });
}

std::size_t count_diam4_specs(std::size_t n) {
  std::size_t count = 0;
  diam4_classes(n, [&](std::int64_t, std::span<const std::int64_t>, std::int64_t) { ++count; });
  return count;
}

Int lambda_diam4_by_cuts(const Diam4Spec& spec) {
  validate(spec);
  const Int n = Int(spec.n());
  Int wiener = checked_mul(Int(spec.n0), n - 1);  // hub pendants
  for (const Part& p : spec.parts) {
    const Int leaves = p.value;
    const Int spoke_cut = checked_mul(leaves + 1, n - leaves - 1);
    const Int leaf_cuts = checked_mul(leaves, n - 1);
    wiener = checked_add(wiener, checked_mul(Int(p.multiplicity), checked_add(spoke_cut, leaf_cuts)));
  }
  return checked_sub(checked_mul(Int(2), n, n - 1), wiener);
}

void for_each_double_star(std::size_t n, const std::function<void(const DoubleStarSpec&)>& visit) {
  for (std::size_t a = 2; a <= n / 2; ++a) visit(DoubleStarSpec{n, a});
}

Ranking::Ranking(std::size_t k, std::size_t bucket_cap) : k_(k), cap_(std::max<std::size_t>(1, bucket_cap)) {}

void Ranking::add_code(RankEntry& entry, CanonicalCode code, std::size_t count) {
  entry.count += count;
  auto pos = std::lower_bound(entry.trees.begin(), entry.trees.end(), code);
  if (pos != entry.trees.end() && *pos == code) return;
  entry.trees.insert(pos, std::move(code));
  if (entry.trees.size() > cap_) entry.trees.pop_back();
}

void Ranking::insert(Int value, CanonicalCode code) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), value,
                             [](const RankEntry& e, Int v) { return e.value < v; });
  if (it != entries_.end() && it->value == value) {
    add_code(*it, std::move(code), 1);
    return;
  }
  RankEntry entry;
  entry.value = value;
  entry.trees.push_back(std::move(code));
  entry.count = 1;
  entries_.insert(it, std::move(entry));
  if (entries_.size() > k_) entries_.pop_back();
}

void Ranking::merge(const Ranking& other) {
  for (const RankEntry& theirs : other.entries_) {
    if (entries_.size() == k_ && theirs.value > entries_.back().value) continue;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), theirs.value,
                               [](const RankEntry& e, Int v) { return e.value < v; });
    if (it != entries_.end() && it->value == theirs.value) {
      it->count += theirs.count;
      for (const CanonicalCode& code : theirs.trees) add_code(*it, code, 0);
    } else {
      entries_.insert(it, theirs);
      if (entries_.size() > k_) entries_.pop_back();
    }
  }
}

std::vector<RankEntry> rank_trees(std::size_t n, std::size_t k, const EnumerationLimits& limits) {
  if (n > limits.max_n_free) {
    fail(ErrorCode::BoundExceeded, "ranking needs full enumeration; n=" + std::to_string(n) +
                                       " exceeds the free-tree bound " +
                                       std::to_string(limits.max_n_free));
  }
  if (n == 0 || k == 0) return {};
  const unsigned jobs = std::max(1u, limits.jobs);
  std::vector<Ranking> partial(jobs, Ranking(k, limits.bucket_cap));

  auto work = [&](unsigned worker) {
    FreeTreeGenerator gen(n);
    std::size_t index = 0;
    Ranking& ranking = partial[worker];
    while (gen.next()) {
      if (index++ % jobs != worker) continue;
      const Tree t = gen.tree();
      ranking.offer(reverse_wiener(t), [&t] { return canonical_code(t); });
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }
  for (unsigned w = 1; w < jobs; ++w) partial[0].merge(partial[w]);
  return partial[0].entries();
}

ClassExtremes diameter_class_extremes(std::size_t n, std::uint32_t d, const EnumerationLimits& limits) {
  if (d < 2 || std::size_t(d) + 1 > n) {
    fail(ErrorCode::EmptyClass, "no tree on " + std::to_string(n) + " vertices has diameter " +
                                    std::to_string(d));
  }
  TwoLowest lowest(limits.bucket_cap);
  if (d == 2) {
    lowest.offer(reverse_wiener(star(n)), [n] { return TreeDescriptor{StarSpec{n}}; });
  } else if (d == 3) {
    for_each_double_star(n, [&](const DoubleStarSpec& spec) {
      lowest.offer(reverse_wiener(double_star(spec)), [&spec] { return TreeDescriptor{spec}; });
    });
  } else if (d == 4) {
    if (n > limits.max_n_diam4) {
      fail(ErrorCode::BoundExceeded, "diameter-4 enumeration limited to n <= " +
                                         std::to_string(limits.max_n_diam4));
    }
    const Int pairs2 = Int(2) * Int(n) * Int(n - 1);
    diam4_classes(n, [&](std::int64_t n0, std::span<const std::int64_t> sizes, std::int64_t wiener) {
      lowest.offer(pairs2 - Int(wiener), [&] { return TreeDescriptor{spec_from_sizes(n0, sizes)}; });
    });
  } else {
    if (n > limits.max_n_free) {
      fail(ErrorCode::BoundExceeded, "diameter " + std::to_string(d) +
                                         " classes need full enumeration; n <= " +
                                         std::to_string(limits.max_n_free));
    }
    for_each_free_tree(
        n,
        [&](const Tree& t) {
          const TreeMetrics m = metrics(t);
          if (m.diameter == d) lowest.offer(m.reverse_wiener, [&t] { return identify(t); });
        },
        limits.max_n_free);
  }
  if (lowest.empty()) {
    fail(ErrorCode::EmptyClass, "no tree on " + std::to_string(n) + " vertices has diameter " +
                                    std::to_string(d));
  }
  return {*lowest.result(0, Rank::ClassMin, d), lowest.result(1, Rank::ClassSecondMin, d)};
}

ExtremalResult min_lambda_diam(std::size_t n, std::uint32_t d, const EnumerationLimits& limits) {
  return diameter_class_extremes(n, d, limits).min;
}

ExtremalResult second_min_lambda_diam(std::size_t n, std::uint32_t d, const EnumerationLimits& limits) {
  auto extremes = diameter_class_extremes(n, d, limits);
  if (!extremes.second) {
    fail(ErrorCode::EmptyClass, "diameter-" + std::to_string(d) + " trees on " + std::to_string(n) +
                                    " vertices share a single value");
  }
  return *extremes.second;
}

}  // namespace revwiener
