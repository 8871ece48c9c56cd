#pragma once

// Reference implementations used only by the tests. They work on plain edge
// lists and share no code with the library, so agreement between the two is
// evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <random>
#include <utility>
#include <vector>

#include "revwiener/tree.hpp"

namespace oracle {

using Edges = std::vector<std::pair<int, int>>;

inline std::vector<std::vector<int>> floyd_warshall(int n, const Edges& edges) {
  const int inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : edges) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

struct Metrics {
  long long wiener = 0;
  int diameter = 0;
  long long reverse_wiener = 0;
};

inline Metrics metrics(int n, const Edges& edges) {
  const auto d = floyd_warshall(n, edges);
  Metrics m;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m.wiener += d[i][j];
      m.diameter = std::max(m.diameter, d[i][j]);
    }
  m.reverse_wiener = static_cast<long long>(n) * (n - 1) * m.diameter / 2 - m.wiener;
  return m;
}

// Pairwise distances summed by BFS from every vertex; faster than
// Floyd-Warshall for the large random trees.
inline Metrics metrics_bfs(int n, const Edges& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Metrics m;
  long long total = 0;
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    q.push(s);
    dist[s] = 0;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      total += dist[v];
      m.diameter = std::max(m.diameter, dist[v]);
      for (int w : adj[v])
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
    }
  }
  m.wiener = total / 2;
  m.reverse_wiener = static_cast<long long>(n) * (n - 1) * m.diameter / 2 - m.wiener;
  return m;
}

// Heap-based Prüfer decoding.
inline Edges prufer_decode(int n, const std::vector<int>& seq) {
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  Edges edges;
  for (int x : seq) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  const int a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return edges;
}

inline Edges random_tree(std::mt19937_64& rng, int n) {
  if (n == 1) return {};
  if (n == 2) return {{0, 1}};
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (int& x : seq) x = pick(rng);
  return prufer_decode(n, seq);
}

inline Edges edges_of(const revwiener::Tree& t) {
  Edges out;
  for (const auto& e : t.edges()) out.emplace_back(int(e.u), int(e.v));
  return out;
}

inline revwiener::Tree to_tree(int n, const Edges& edges) {
  std::vector<revwiener::Edge> es;
  for (auto [u, v] : edges) es.push_back({revwiener::Vertex(u), revwiener::Vertex(v)});
  return revwiener::Tree::from_edge_list(std::size_t(n), es);
}

inline Metrics metrics(const revwiener::Tree& t) { return metrics(int(t.size()), edges_of(t)); }

// Builders that follow the family definitions directly.
inline Edges double_star_edges(int n, int a) {
  Edges e{{0, 1}};
  int next = 2;
  for (int i = 0; i < a - 1; ++i) e.emplace_back(0, next++);
  for (int i = 0; i < n - a - 1; ++i) e.emplace_back(1, next++);
  return e;
}

// Hub 0 with n0 pendants and one spoke per entry of `leaves`.
inline std::pair<int, Edges> diam4_edges(int n0, const std::vector<int>& leaves) {
  Edges e;
  int next = 1;
  for (int i = 0; i < n0; ++i) e.emplace_back(0, next++);
  for (int l : leaves) {
    const int spoke = next++;
    e.emplace_back(0, spoke);
    for (int i = 0; i < l; ++i) e.emplace_back(spoke, next++);
  }
  return {next, e};
}

// Every labeled tree on n vertices, one per Prüfer sequence.
template <typename Visit>
void for_each_labeled_tree(int n, Visit visit) {
  if (n <= 2) {
    visit(n == 2 ? Edges{{0, 1}} : Edges{});
    return;
  }
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    visit(prufer_decode(n, seq));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) return;
    ++seq[i];
  }
}

}  // namespace oracle
