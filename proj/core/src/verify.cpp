#include "revwiener/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <random>
#include <thread>

#include "revwiener/closed_forms.hpp"
#include "revwiener/error.hpp"
#include "revwiener/invariants.hpp"
#include "revwiener/transforms.hpp"

namespace revwiener {
namespace {

constexpr std::pair<TheoremId, std::string_view> kTheoremNames[] = {
    {TheoremId::Smallest, "smallest"},       {TheoremId::SecondSmallest, "second-smallest"},
    {TheoremId::ThirdSmallest, "third-smallest"}, {TheoremId::PropD3, "prop-d3"},
    {TheoremId::PropF4, "prop-f4"},          {TheoremId::PropG4, "prop-g4"},
    {TheoremId::Lemmas, "lemmas"},
};

std::size_t domain_start(TheoremId id) {
  switch (id) {
    case TheoremId::Smallest: return 2;
    case TheoremId::SecondSmallest: return 4;
    case TheoremId::ThirdSmallest: return 5;
    case TheoremId::PropD3: return 4;
    case TheoremId::PropF4: return 5;
    case TheoremId::PropG4: return 6;
    case TheoremId::Lemmas: return 5;
  }
  return 0;
}

// code -> display string, ordered by code.
using CodeSet = std::map<CanonicalCode, std::string>;

CodeSet codes_of(const std::vector<TreeDescriptor>& descriptors) {
  CodeSet out;
  for (const TreeDescriptor& d : descriptors) out.emplace(canonical_code(build(d)), to_string(d));
  return out;
}

CodeSet codes_of(const RankEntry& entry) {
  CodeSet out;
  for (const CanonicalCode& code : entry.trees) {
    out.emplace(code, to_string(identify(tree_from_code(code))));
  }
  return out;
}

std::vector<std::string> names(const CodeSet& set) {
  std::vector<std::string> out;
  for (const auto& [code, name] : set) out.push_back(name);
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

void append_note(std::string& note, const std::string& text) {
  if (text.empty()) return;
  if (!note.empty()) note += "; ";
  note += text;
}

VerificationRecord compare(std::size_t n, std::string quantity, const ExtremalResult& claimed,
                           std::optional<Int> oracle_value, const CodeSet& oracle_set,
                           bool oracle_truncated) {
  VerificationRecord rec;
  rec.n = n;
  rec.quantity = std::move(quantity);
  rec.claimed_value = claimed.value;
  rec.oracle_value = oracle_value;
  const CodeSet claimed_set = codes_of(claimed.attaining);
  rec.claimed_set = names(claimed_set);
  rec.oracle_set = names(oracle_set);
  rec.value_match = oracle_value && *oracle_value == claimed.value;
  rec.set_match = !oracle_truncated && claimed_set.size() == oracle_set.size() &&
                  std::equal(claimed_set.begin(), claimed_set.end(), oracle_set.begin(),
                             [](const auto& a, const auto& b) { return a.first == b.first; });
  rec.match = rec.value_match && rec.set_match;
  for (const std::string& note : claimed.notes) append_note(rec.note, note);
  if (!oracle_value) append_note(rec.note, "oracle found no tree at this rank");
  if (oracle_truncated) append_note(rec.note, "oracle tie set truncated; raise the bucket cap");
  return rec;
}

// Names of the trees in `a` whose code is absent from `b`.
std::vector<std::string> difference(const CodeSet& a, const CodeSet& b) {
  std::vector<std::string> out;
  for (const auto& [code, name] : a) {
    if (!b.contains(code)) out.push_back(name);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VerificationRecord> rank_records(TheoremId id, std::size_t n, const EnumerationLimits& limits) {
  const std::size_t depth = id == TheoremId::Smallest ? 1 : id == TheoremId::SecondSmallest ? 2 : 3;
  const std::vector<RankEntry> ranking = rank_trees(n, depth, limits);
  const RankEntry* entry = ranking.size() >= depth ? &ranking[depth - 1] : nullptr;
  const std::optional<Int> value = entry ? std::optional<Int>(entry->value) : std::nullopt;
  const CodeSet oracle = entry ? codes_of(*entry) : CodeSet{};
  const bool truncated = entry && entry->truncated();

  switch (id) {
    case TheoremId::Smallest: {
      ExtremalResult claimed;
      claimed.rank = Rank::OverallFirst;
      claimed.value = Int(n) - 1;
      claimed.attaining.push_back(StarSpec{n});
      return {compare(n, "smallest", claimed, value, oracle, truncated)};
    }
    case TheoremId::SecondSmallest:
      return {compare(n, "second smallest", second_smallest(std::int64_t(n)), value, oracle, truncated)};
    default:
      return {compare(n, "third smallest", third_smallest(std::int64_t(n)), value, oracle, truncated)};
  }
}

CodeSet codes_of_optional(const std::optional<ExtremalResult>& r) {
  return r ? codes_of(r->attaining) : CodeSet{};
}

bool result_truncated(const std::optional<ExtremalResult>& r) {
  if (!r) return false;
  return std::any_of(r->notes.begin(), r->notes.end(),
                     [](const std::string& s) { return s.starts_with("tie set truncated"); });
}

std::optional<Int> value_of(const std::optional<ExtremalResult>& r) {
  return r ? std::optional<Int>(r->value) : std::nullopt;
}

std::vector<VerificationRecord> class_records(TheoremId id, std::size_t n, const EnumerationLimits& limits) {
  const auto big_n = static_cast<std::int64_t>(n);
  std::vector<VerificationRecord> out;
  if (id == TheoremId::PropD3) {
    const ClassExtremes oracle = diameter_class_extremes(n, 3, limits);
    const std::optional<ExtremalResult> min = oracle.min;
    out.push_back(compare(n, "f(n,3)", f_n3_result(big_n), value_of(min), codes_of_optional(min),
                          result_truncated(min)));
    if (n >= 6) {
      out.push_back(compare(n, "g(n,3)", g_n3_result(big_n), value_of(oracle.second),
                            codes_of_optional(oracle.second), result_truncated(oracle.second)));
    }
    return out;
  }
  const ClassExtremes oracle = diameter_class_extremes(n, 4, limits);
  if (id == TheoremId::PropF4) {
    const std::optional<ExtremalResult> min = oracle.min;
    out.push_back(compare(n, "f(n,4)", f_n4(big_n), value_of(min), codes_of_optional(min),
                          result_truncated(min)));
    return out;
  }
  const ExtremalResult claimed = g_n4(big_n);
  const CodeSet oracle_set = codes_of_optional(oracle.second);
  VerificationRecord rec = compare(n, "g(n,4)", claimed, value_of(oracle.second), oracle_set,
                                   result_truncated(oracle.second));
  if (rec.value_match && !rec.set_match) {
    const CodeSet claimed_set = codes_of(claimed.attaining);
    std::string note = "suspected erratum in the runner-up tree table: value agrees";
    if (auto missing = difference(oracle_set, claimed_set); !missing.empty()) {
      note += ", table omits " + join(missing, ", ");
    }
    if (auto extra = difference(claimed_set, oracle_set); !extra.empty()) {
      note += ", table lists non-attaining " + join(extra, ", ");
    }
    append_note(rec.note, note);
  }
  out.push_back(std::move(rec));
  return out;
}

// ---------------------------------------------------------------------------
// Random inputs for the transform battery.

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Tree random_tree(Rng& rng, std::size_t n) {
  if (n <= 2) return n == 1 ? Tree::from_edge_list(1, {}) : Tree::from_edge_list(2, std::vector<Edge>{{0, 1}});
  std::vector<Vertex> seq(n - 2);
  for (Vertex& x : seq) x = static_cast<Vertex>(uniform(rng, 0, n - 1));
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : seq) ++degree[x];
  std::vector<Edge> edges;
  for (Vertex x : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({leaf, x});
    --degree[leaf];
    --degree[x];
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) rest.push_back(v);
  }
  edges.push_back({rest[0], rest[1]});
  return Tree::from_edge_list(n, edges);
}

Tree shuffle_labels(Rng& rng, const Tree& t) {
  std::vector<Vertex> perm(t.size());
  for (Vertex v = 0; v < perm.size(); ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  return t.relabeled(perm);
}

std::uint32_t diameter_of(const Tree& t) { return diameter_and_centers(t).diameter; }

// Diameter >= 4 with a pendant on a center: a random tree plus one extra
// pendant hung on its smallest center.
Tree lemma1_input(Rng& rng, std::size_t n) {
  for (;;) {
    const Tree base = random_tree(rng, n - 1);
    const DiameterInfo info = diameter_and_centers(base);
    if (info.diameter < 4) continue;
    std::vector<Edge> edges = base.edges();
    edges.push_back({info.centers.front(), static_cast<Vertex>(n - 1)});
    return shuffle_labels(rng, Tree::from_edge_list(n, edges));
  }
}

// Diameter >= 4 with no center pendant: rejection sampling, falling back to
// pushing center pendants outward until none remain.
Tree lemma2_input(Rng& rng, std::size_t n) {
  for (int attempt = 0;; ++attempt) {
    Tree t = random_tree(rng, n);
    if (diameter_of(t) < 4) continue;
    if (!has_center_pendant(t)) return t;
    if (attempt < 20) continue;
    while (has_center_pendant(t)) t = lemma1_pendant_shift(t).tree;
    return shuffle_labels(rng, t);
  }
}

// Splits `count` vertices into groups of at least 2 (a spoke and its leaves).
std::vector<std::size_t> random_groups(Rng& rng, std::size_t count) {
  std::vector<std::size_t> groups;
  while (count > 0) {
    if (count <= 3) {
      groups.push_back(count);
      break;
    }
    const std::size_t g = uniform(rng, 2, count - 2);
    groups.push_back(g);
    count -= g;
  }
  return groups;
}

// Diameter exactly 5 with no center pendant. Every such tree is two adjacent
// centers whose other neighbours each carry at least one leaf.
Tree lemma5_input(Rng& rng, std::size_t n) {
  const std::size_t side_u = uniform(rng, 2, n - 4);
  std::vector<Edge> edges{{0, 1}};
  Vertex next = 2;
  for (Vertex center : {Vertex(0), Vertex(1)}) {
    const std::size_t count = center == 0 ? side_u : n - 2 - side_u;
    for (std::size_t group : random_groups(rng, count)) {
      const Vertex spoke = next++;
      edges.push_back({center, spoke});
      for (std::size_t i = 1; i < group; ++i) edges.push_back({spoke, next++});
    }
  }
  return shuffle_labels(rng, Tree::from_edge_list(n, edges));
}

struct Lemma3Input {
  Diam4Spec spec;
  std::size_t i;
  std::size_t j;
};

Lemma3Input lemma3_input(Rng& rng, std::size_t n) {
  for (;;) {
    const std::size_t n0 = uniform(rng, 0, n - 7);
    const std::size_t m = n - 1 - n0;  // spoke vertices
    const std::size_t k = uniform(rng, 2, m / 2);
    if (m < 2 * k + 2) continue;  // leaves to spare for a gap of 2
    std::vector<std::int64_t> leaves(k, 1);
    for (std::size_t extra = m - 2 * k; extra > 0; --extra) ++leaves[uniform(rng, 0, k - 1)];
    std::vector<RawPart> raw;
    for (std::int64_t l : leaves) raw.push_back({l, 1});
    Diam4Spec spec = normalize(std::int64_t(n0), raw);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < spec.parts.size(); ++a) {
      for (std::size_t b = 0; b < spec.parts.size(); ++b) {
        if (spec.parts[a].value >= spec.parts[b].value + 2) pairs.emplace_back(a, b);
      }
    }
    if (pairs.empty()) continue;
    const auto [i, j] = pairs[uniform(rng, 0, pairs.size() - 1)];
    return {std::move(spec), i, j};
  }
}

std::string describe(const Tree& t) {
  std::string s = "tree with edges";
  for (const Edge& e : t.edges()) s += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
  return s;
}

class StatsBuilder {
 public:
  explicit StatsBuilder(std::string lemma) { stats_.lemma = std::move(lemma); }

  void record(std::size_t n, bool delta_ok, bool negative, bool formula_ok, bool post_ok,
              const std::string& what) {
    ++stats_.trials;
    stats_.max_n = std::max(stats_.max_n, n);
    stats_.delta_matches += delta_ok;
    stats_.strictly_negative += negative;
    stats_.lemma_formula += formula_ok;
    stats_.postconditions += post_ok;
    if (stats_.first_failure.empty() && !(delta_ok && negative && formula_ok && post_ok)) {
      stats_.first_failure = what;
    }
  }

  LemmaStats take() { return std::move(stats_); }

 private:
  LemmaStats stats_;
};

}  // namespace

std::string_view to_string(TheoremId id) noexcept {
  for (const auto& [value, name] : kTheoremNames) {
    if (value == id) return name;
  }
  return "?";
}

TheoremId parse_theorem(std::string_view text) {
  for (const auto& [value, name] : kTheoremNames) {
    if (name == text) return value;
  }
  fail(ErrorCode::UnknownTheorem, "unknown theorem id '" + std::string(text) + "'");
}

std::vector<TheoremId> all_theorems() {
  std::vector<TheoremId> out;
  for (const auto& [value, name] : kTheoremNames) out.push_back(value);
  return out;
}

std::string_view to_string(Policy policy) noexcept {
  return policy == Policy::Strict ? "strict" : "value-match-required";
}

bool VerificationReport::passed() const noexcept {
  if (policy == Policy::ValueMatchRequired) return summary.value_failures == 0;
  return summary.failed == 0;
}

std::vector<LemmaStats> run_lemma_battery(std::uint64_t seed, std::size_t trials, std::size_t min_n,
                                          std::size_t max_n) {
  // Smallest inputs: P_5 for lemma 2, P_6 for lemmas 1 and 5, T(1,3) for lemma 3.
  auto size_in = [&](Rng& rng, std::size_t floor) {
    const std::size_t lo = std::max(min_n, floor);
    return uniform(rng, lo, std::max(lo, max_n));
  };
  std::vector<LemmaStats> out;

  {
    Rng rng(seed);
    StatsBuilder b("lemma1 pendant shift");
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t n = size_in(rng, 6);
      const Tree in = lemma1_input(rng, n);
      const PendantShift s = lemma1_pendant_shift(in);
      const Int recomputed = reverse_wiener(s.tree) - reverse_wiener(in);
      const Int n1 = Int(s.target_side);
      const Int big_n = Int(n);
      const Int formula = n1 * (big_n - n1) - (n1 + 1) * (big_n - n1 - 1);
      b.record(n, s.delta == recomputed, s.delta < 0,
               s.delta == formula && 2 * s.target_side + 2 <= n,
               diameter_of(s.tree) == diameter_of(in), describe(in));
    }
    out.push_back(b.take());
  }
  {
    Rng rng(seed + 1);
    StatsBuilder b("lemma2 collapse");
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t n = size_in(rng, 5);
      const Tree in = lemma2_input(rng, n);
      const Collapse c = lemma2_collapse(in);
      const Int recomputed = reverse_wiener(c.tree) - reverse_wiener(in);
      const Int big_n = Int(n);
      const Int p = Int(c.branch_sizes.size());
      Int formula = -big_n * (big_n - 1) - p * (big_n - 1);
      for (std::size_t ni : c.branch_sizes) formula += Int(ni) * (big_n - Int(ni));
      b.record(n, c.delta == recomputed, c.delta < 0,
               c.delta == formula && c.delta <= -(big_n - 1) * (1 + p),
               diameter_of(c.tree) + 2 == diameter_of(in), describe(in));
    }
    out.push_back(b.take());
  }
  {
    Rng rng(seed + 2);
    StatsBuilder b("lemma3 rebalance");
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t n = size_in(rng, 7);
      const Lemma3Input in = lemma3_input(rng, n);
      const Rebalance r = lemma3_rebalance(in.spec, in.i, in.j);
      const Int recomputed = reverse_wiener(diam4(r.spec)) - reverse_wiener(diam4(in.spec));
      const Int gap = Int(in.spec.parts[in.i].value) - Int(in.spec.parts[in.j].value);
      const bool post = r.spec.n() == in.spec.n() && r.spec.k() == in.spec.k() &&
                        r.spec.n0 == in.spec.n0;
      b.record(n, r.delta == recomputed, r.delta < 0, r.delta == -2 * (gap - 1), post,
               to_string(TreeDescriptor{in.spec}) + " parts " + std::to_string(in.i) + "," +
                   std::to_string(in.j));
    }
    out.push_back(b.take());
  }
  {
    Rng rng(seed + 3);
    StatsBuilder b("lemma5 contraction");
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t n = size_in(rng, 6);
      const Tree in = lemma5_input(rng, n);
      const Contraction c = lemma5_contract(in);
      const Int recomputed = reverse_wiener(c.tree) - reverse_wiener(in);
      const Int big_n = Int(n);
      const Int formula = -(exact_div(big_n * (big_n - 1), 2) - Int(c.side_u) * Int(c.side_v) + big_n - 1);
      b.record(n, c.delta == recomputed, c.delta < 0, c.delta == formula,
               diameter_of(c.tree) == 4 && has_center_pendant(c.tree), describe(in));
    }
    out.push_back(b.take());
  }
  return out;
}

VerificationReport verify(TheoremId id, std::size_t n_from, std::size_t n_to, const VerifyOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  if (n_from > n_to) fail(ErrorCode::PreconditionFailed, "empty n range");
  if (n_from < domain_start(id)) {
    fail(ErrorCode::DomainTooSmall, std::string(to_string(id)) + " needs n >= " +
                                        std::to_string(domain_start(id)));
  }
  const EnumerationLimits& limits = options.limits;
  switch (id) {
    case TheoremId::Smallest:
    case TheoremId::SecondSmallest:
    case TheoremId::ThirdSmallest:
      if (n_to > limits.max_n_free) {
        fail(ErrorCode::BoundExceeded, std::string(to_string(id)) + " needs full enumeration; n <= " +
                                           std::to_string(limits.max_n_free));
      }
      break;
    case TheoremId::PropF4:
    case TheoremId::PropG4:
      if (n_to > limits.max_n_diam4) {
        fail(ErrorCode::BoundExceeded, std::string(to_string(id)) +
                                           " uses the diameter-4 oracle; n <= " +
                                           std::to_string(limits.max_n_diam4));
      }
      break;
    default:
      break;
  }

  VerificationReport report;
  report.theorem = id;
  report.n_from = n_from;
  report.n_to = n_to;
  report.policy = id == TheoremId::PropG4 ? Policy::ValueMatchRequired : Policy::Strict;

  if (id == TheoremId::Lemmas) {
    for (const LemmaStats& s : run_lemma_battery(options.seed, options.trials, n_from, n_to)) {
      VerificationRecord rec;
      rec.n = s.max_n;
      rec.quantity = s.lemma;
      rec.claimed_value = Int(s.trials);
      rec.oracle_value = Int(std::min({s.delta_matches, s.strictly_negative, s.lemma_formula,
                                       s.postconditions}));
      rec.value_match = s.all_ok();
      rec.set_match = true;
      rec.match = rec.value_match;
      rec.note = std::to_string(s.trials) + " random inputs; delta recomputed " +
                 std::to_string(s.delta_matches) + ", negative " + std::to_string(s.strictly_negative) +
                 ", lemma formula " + std::to_string(s.lemma_formula) + ", postconditions " +
                 std::to_string(s.postconditions);
      if (!s.first_failure.empty()) rec.note += "; first failure: " + s.first_failure;
      report.records.push_back(std::move(rec));
    }
  } else {
    const std::size_t count = n_to - n_from + 1;
    const unsigned jobs = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, limits.jobs), count));
    // A lone n gets the workers inside the ranking instead.
    EnumerationLimits inner = limits;
    inner.jobs = count == 1 ? limits.jobs : 1;
    std::vector<std::vector<VerificationRecord>> per_n(count);
    std::vector<std::exception_ptr> errors(jobs);
    auto work = [&](unsigned worker) {
      try {
        for (std::size_t i = worker; i < count; i += jobs) {
          const std::size_t n = n_from + i;
          const bool ranked = id == TheoremId::Smallest || id == TheoremId::SecondSmallest ||
                              id == TheoremId::ThirdSmallest;
          per_n[i] = ranked ? rank_records(id, n, inner) : class_records(id, n, inner);
        }
      } catch (...) {
        errors[worker] = std::current_exception();
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::jthread> threads;
      for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (auto& records : per_n) {
      for (auto& r : records) report.records.push_back(std::move(r));
    }
  }

  for (const VerificationRecord& r : report.records) {
    ++report.summary.checked;
    report.summary.passed += r.match;
    report.summary.value_failures += !r.value_match;
  }
  report.summary.failed = report.summary.checked - report.summary.passed;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace revwiener
