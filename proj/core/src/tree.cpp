#include "revwiener/tree.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "revwiener/error.hpp"

namespace revwiener {
namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

Tree Tree::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) fail(ErrorCode::WrongEdgeCount, "a tree needs at least one vertex");
  if (n > std::numeric_limits<Vertex>::max() / 2) {
    fail(ErrorCode::LabelOutOfRange, "vertex count too large");
  }
  if (edges.size() != n - 1) {
    fail(ErrorCode::WrongEdgeCount, "expected " + std::to_string(n - 1) + " edges, got " +
                                        std::to_string(edges.size()));
  }

  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) fail(ErrorCode::LabelOutOfRange, edge_text(e));
    if (e.u == e.v) fail(ErrorCode::SelfLoop, edge_text(e));
    normalized.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(normalized.begin(), normalized.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  if (auto dup = std::adjacent_find(normalized.begin(), normalized.end());
      dup != normalized.end()) {
    fail(ErrorCode::DuplicateEdge, edge_text(*dup));
  }

  Tree t;
  t.n_ = n;
  t.edges_.assign(edges.begin(), edges.end());
  t.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++t.offsets_[e.u + 1];
    ++t.offsets_[e.v + 1];
  }
  std::partial_sum(t.offsets_.begin(), t.offsets_.end(), t.offsets_.begin());
  t.adjacency_.resize(2 * edges.size());
  std::vector<std::uint32_t> fill(t.offsets_.begin(), t.offsets_.end() - 1);
  for (const Edge& e : edges) {
    t.adjacency_[fill[e.u]++] = e.v;
    t.adjacency_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(t.adjacency_.begin() + t.offsets_[v], t.adjacency_.begin() + t.offsets_[v + 1]);
  }

  // n-1 distinct edges without a cycle are connected, and vice versa; one
  // traversal settles both.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : t.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) {
    fail(ErrorCode::Disconnected,
         std::to_string(reached) + " of " + std::to_string(n) + " vertices reachable from 0");
  }
  return t;
}

Tree Tree::from_parents(std::span<const Vertex> parent) {
  std::vector<Edge> edges;
  edges.reserve(parent.empty() ? 0 : parent.size() - 1);
  for (Vertex v = 0; v < parent.size(); ++v) {
    if (parent[v] != v) edges.push_back({parent[v], v});
  }
  return from_edge_list(parent.size(), edges);
}

Tree Tree::relabeled(std::span<const Vertex> permutation) const {
  if (permutation.size() != n_) fail(ErrorCode::LabelOutOfRange, "permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) edges.push_back({permutation[e.u], permutation[e.v]});
  return from_edge_list(n_, edges);
}

std::vector<std::uint32_t> bfs_distances(const Tree& t, Vertex source) {
  if (source >= t.size()) {
    fail(ErrorCode::LabelOutOfRange, "source " + std::to_string(source));
  }
  std::vector<std::uint32_t> dist(t.size(), kUnreached);
  std::vector<Vertex> queue;
  queue.reserve(t.size());
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : t.neighbors(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

RootedTree root_at(const Tree& t, Vertex root) {
  if (root >= t.size()) fail(ErrorCode::LabelOutOfRange, "root " + std::to_string(root));
  RootedTree r;
  r.root = root;
  r.parent.assign(t.size(), root);
  r.order.reserve(t.size());
  r.order.push_back(root);
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    const Vertex v = r.order[head];
    for (Vertex w : t.neighbors(v)) {
      // parent[root] == root never appears among root's neighbours.
      if (w != r.parent[v]) {
        r.parent[w] = v;
        r.order.push_back(w);
      }
    }
  }
  r.subtree_size.assign(t.size(), 1);
  for (std::size_t i = r.order.size(); i-- > 1;) {
    const Vertex v = r.order[i];
    r.subtree_size[r.parent[v]] += r.subtree_size[v];
  }
  return r;
}

DiameterInfo diameter_and_centers(const Tree& t) {
  if (t.size() == 1) return {0, {0}};
  auto farthest = [](const std::vector<std::uint32_t>& dist) {
    return static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
  };
  const Vertex a = farthest(bfs_distances(t, 0));
  const RootedTree from_a = root_at(t, a);
  const Vertex b = from_a.order.back();  // last vertex in BFS order is a farthest one

  std::vector<Vertex> path{b};
  while (path.back() != a) path.push_back(from_a.parent[path.back()]);
  const auto diameter = static_cast<std::uint32_t>(path.size() - 1);

  DiameterInfo info;
  info.diameter = diameter;
  if (diameter % 2 == 0) {
    info.centers = {path[diameter / 2]};
  } else {
    info.centers = {path[diameter / 2], path[diameter / 2 + 1]};
    std::sort(info.centers.begin(), info.centers.end());
  }
  return info;
}

EdgeCutProfile edge_cut_profile(const Tree& t) {
  EdgeCutProfile profile;
  if (t.size() < 2) return profile;
  const RootedTree r = root_at(t, 0);
  profile.reserve(t.edges().size());
  for (const Edge& e : t.edges()) {
    // Exactly one endpoint is the other's parent.
    const bool u_is_child = r.parent[e.u] == e.v && e.u != r.root;
    const std::size_t child_side = u_is_child ? r.subtree_size[e.u] : r.subtree_size[e.v];
    const std::size_t other = t.size() - child_side;
    profile.push_back({e, u_is_child ? child_side : other, u_is_child ? other : child_side});
  }
  return profile;
}

std::string rooted_code(const Tree& t, Vertex root) {
  const RootedTree r = root_at(t, root);
  std::vector<std::vector<std::string>> child_codes(t.size());
  std::string code;
  for (std::size_t i = r.order.size(); i-- > 0;) {
    const Vertex v = r.order[i];
    auto& children = child_codes[v];
    std::sort(children.begin(), children.end());
    std::size_t length = 2;
    for (const auto& c : children) length += c.size();
    code.clear();
    code.reserve(length);
    code.push_back('(');
    for (const auto& c : children) code += c;
    code.push_back(')');
    children.clear();
    children.shrink_to_fit();
    if (v != root) child_codes[r.parent[v]].push_back(code);
  }
  return code;
}

CanonicalCode canonical_code(const Tree& t) {
  const DiameterInfo info = diameter_and_centers(t);
  std::string best = rooted_code(t, info.centers.front());
  if (info.centers.size() == 2) {
    std::string other = rooted_code(t, info.centers.back());
    if (other < best) best = std::move(other);
  }
  return CanonicalCode(std::move(best));
}

Tree tree_from_code(const CanonicalCode& code) {
  const std::string& s = code.str();
  std::vector<Vertex> parent;
  std::vector<Vertex> open;
  bool closed_root = false;
  for (char c : s) {
    if (closed_root) fail(ErrorCode::ParseError, "trailing symbols after root in code");
    if (c == '(') {
      const auto v = static_cast<Vertex>(parent.size());
      parent.push_back(open.empty() ? v : open.back());
      open.push_back(v);
    } else if (c == ')') {
      if (open.empty()) fail(ErrorCode::ParseError, "unbalanced code");
      open.pop_back();
      closed_root = open.empty();
    } else {
      fail(ErrorCode::ParseError, std::string("unexpected symbol '") + c + "' in code");
    }
  }
  if (!closed_root) fail(ErrorCode::ParseError, "unbalanced or empty code");
  return Tree::from_parents(parent);
}

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) return true;
  }
  return false;
}

std::vector<std::uint64_t> parse_numbers(const std::string& line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ' || line[pos] == '\t') {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    std::uint64_t value = 0;
    while (end < line.size() && line[end] >= '0' && line[end] <= '9') {
      if (value > (std::numeric_limits<std::uint32_t>::max() - 9) / 10) {
        fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": number too large");
      }
      value = value * 10 + static_cast<std::uint64_t>(line[end] - '0');
      ++end;
    }
    if (end == pos || (end < line.size() && line[end] != ' ' && line[end] != '\t')) {
      fail(ErrorCode::ParseError,
           "line " + std::to_string(line_no) + ": expected non-negative integers");
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

}  // namespace

Tree read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) fail(ErrorCode::ParseError, "empty input");
  const auto header = parse_numbers(line, line_no);
  if (header.size() != 1 || header[0] == 0) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                    ": expected a single positive vertex count");
  }
  const std::size_t n = header[0];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!next_content_line(in, line, line_no)) {
      fail(ErrorCode::ParseError, "expected " + std::to_string(n - 1) + " edge lines, found " +
                                      std::to_string(i));
    }
    const auto pair = parse_numbers(line, line_no);
    if (pair.size() != 2) {
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    edges.push_back({static_cast<Vertex>(pair[0]), static_cast<Vertex>(pair[1])});
  }
  if (next_content_line(in, line, line_no)) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unexpected extra content");
  }
  return Tree::from_edge_list(n, edges);
}

void write_edge_list(std::ostream& out, const Tree& t) {
  out << t.size() << '\n';
  for (const Edge& e : t.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace revwiener
