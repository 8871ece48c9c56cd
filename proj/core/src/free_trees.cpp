#include <algorithm>
#include <unordered_set>

#include "revwiener/enumeration.hpp"
#include "revwiener/error.hpp"

namespace revwiener {

FreeTreeGenerator::FreeTreeGenerator(std::size_t n) : n_(n) {
  // Start from the path rooted at its center: 0 1 .. n/2 1 2 .. (n-1)/2.
  for (std::size_t i = 0; i <= n / 2; ++i) levels_.push_back(static_cast<std::uint32_t>(i));
  for (std::size_t i = 1; i < (n + 1) / 2; ++i) levels_.push_back(static_cast<std::uint32_t>(i));
  levels_.resize(n);
  done_ = n == 0;
}

bool FreeTreeGenerator::successor(std::size_t p) {
  // Rooted-tree successor (Beyer and Hedetniemi) from position p.
  if (p == 0) return false;
  std::size_t q = p - 1;
  while (levels_[q] + 1 != levels_[p]) --q;
  for (std::size_t i = p; i < n_; ++i) levels_[i] = levels_[i - p + q];
  return true;
}

void FreeTreeGenerator::make_valid() {
  // Split into the root's first subtree ("left", levels shifted down by one)
  // and the remainder with that subtree removed ("rest").
  auto split_point = [this] {
    std::size_t m = 2;
    while (m < n_ && levels_[m] != 1) ++m;
    return m;
  };
  const std::size_t m = split_point();
  const std::uint32_t left_height = *std::max_element(levels_.begin() + 1, levels_.begin() + m) - 1;
  const std::uint32_t rest_height =
      m < n_ ? *std::max_element(levels_.begin() + m, levels_.end()) : 0;
  const std::size_t left_size = m - 1;
  const std::size_t rest_size = n_ - m + 1;

  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left_size > rest_size) {
      valid = false;
    } else if (left_size == rest_size) {
      // left (levels - 1) against rest (0 followed by levels[m..]).
      for (std::size_t i = 0; i < left_size; ++i) {
        const std::uint32_t a = levels_[1 + i] - 1;
        const std::uint32_t b = i == 0 ? 0 : levels_[m + i - 1];
        if (a != b) {
          valid = a < b;
          break;
        }
      }
    }
  }
  if (valid) return;

  const std::size_t p = left_size;
  const std::uint32_t old = levels_[p];
  successor(p);
  if (old > 2) {
    const std::size_t new_m = split_point();
    const std::uint32_t h = *std::max_element(levels_.begin() + 1, levels_.begin() + new_m) - 1;
    for (std::uint32_t i = 0; i <= h; ++i) levels_[n_ - 1 - h + i] = i + 1;
  }
}

bool FreeTreeGenerator::next() {
  if (done_) return false;
  if (n_ <= 2) {
    // A single vertex or a single edge; nothing to iterate.
    done_ = started_;
    started_ = true;
    return !done_;
  }
  if (started_) {
    std::size_t p = n_ - 1;
    while (levels_[p] == 1) --p;
    if (!successor(p)) {
      done_ = true;
      return false;
    }
  }
  started_ = true;
  make_valid();
  return true;
}

Tree FreeTreeGenerator::tree() const {
  std::vector<Vertex> parent(n_, 0);
  std::vector<Vertex> last_at_level(n_ + 1, 0);
  for (std::size_t i = 1; i < n_; ++i) {
    parent[i] = last_at_level[levels_[i] - 1];
    last_at_level[levels_[i]] = static_cast<Vertex>(i);
  }
  return Tree::from_parents(parent);
}

void for_each_free_tree(std::size_t n, const std::function<void(const Tree&)>& visit,
                        std::size_t max_n) {
  if (n > max_n) {
    fail(ErrorCode::BoundExceeded, "free-tree enumeration limited to n <= " + std::to_string(max_n));
  }
  FreeTreeGenerator gen(n);
  while (gen.next()) visit(gen.tree());
}

std::size_t count_free_trees(std::size_t n, std::size_t max_n) {
  if (n > max_n) {
    fail(ErrorCode::BoundExceeded, "free-tree enumeration limited to n <= " + std::to_string(max_n));
  }
  std::size_t count = 0;
  FreeTreeGenerator gen(n);
  while (gen.next()) ++count;
  return count;
}

std::vector<CanonicalCode> free_trees_by_augmentation(std::size_t n) {
  if (n > 14) fail(ErrorCode::BoundExceeded, "augmentation fallback limited to n <= 14");
  if (n == 0) return {};
  std::vector<CanonicalCode> layer{canonical_code(star(1))};
  for (std::size_t size = 1; size < n; ++size) {
    std::unordered_set<CanonicalCode> next;
    for (const CanonicalCode& code : layer) {
      const Tree t = tree_from_code(code);
      std::vector<Edge> edges = t.edges();
      edges.emplace_back();
      for (Vertex v = 0; v < size; ++v) {
        edges.back() = {v, static_cast<Vertex>(size)};
        next.insert(canonical_code(Tree::from_edge_list(size + 1, edges)));
      }
    }
    layer.assign(next.begin(), next.end());
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::vector<CanonicalCode> free_trees_by_labeled_dedup(std::size_t n) {
  if (n > 9) fail(ErrorCode::BoundExceeded, "labeled fallback limited to n <= 9");
  if (n == 0) return {};
  if (n <= 2) return {canonical_code(path(n))};
  std::unordered_set<CanonicalCode> seen;
  std::vector<std::size_t> pruefer(n - 2, 0);
  std::vector<std::size_t> degree(n);
  std::vector<Edge> edges(n - 1);
  while (true) {
    // Decode the Prüfer sequence.
    std::fill(degree.begin(), degree.end(), 1);
    for (std::size_t x : pruefer) ++degree[x];
    for (std::size_t i = 0; i < n - 2; ++i) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges[i] = {static_cast<Vertex>(leaf), static_cast<Vertex>(pruefer[i])};
      --degree[leaf];
      --degree[pruefer[i]];
    }
    std::size_t a = 0;
    while (degree[a] != 1) ++a;
    std::size_t b = a + 1;
    while (degree[b] != 1) ++b;
    edges[n - 2] = {static_cast<Vertex>(a), static_cast<Vertex>(b)};
    seen.insert(canonical_code(Tree::from_edge_list(n, edges)));

    std::size_t pos = 0;
    while (pos < pruefer.size() && ++pruefer[pos] == n) pruefer[pos++] = 0;
    if (pos == pruefer.size()) break;
  }
  std::vector<CanonicalCode> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace revwiener
