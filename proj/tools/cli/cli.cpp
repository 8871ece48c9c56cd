#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "report.hpp"
#include "revwiener/closed_forms.hpp"
#include "revwiener/enumeration.hpp"
#include "revwiener/error.hpp"
#include "revwiener/families.hpp"
#include "revwiener/invariants.hpp"
#include "revwiener/verify.hpp"

namespace revwiener::cli {
namespace {

struct Common {
  std::string format = "human";
  std::string out_file;
  std::size_t max_n_free = 20;
  std::size_t max_n_diam4 = 80;
  unsigned jobs = 1;
};

void add_common(CLI::App& sub, Common& c) {
  sub.add_option("--format", c.format, "human, structured or tabular")
      ->check(CLI::IsMember({"human", "structured", "tabular"}));
  sub.add_option("--out", c.out_file, "write output to FILE instead of standard output");
  sub.add_option("--max-n-free", c.max_n_free, "largest n for full free-tree enumeration");
  sub.add_option("--max-n-diam4", c.max_n_diam4, "largest n for diameter-4 enumeration");
  sub.add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
}

EnumerationLimits limits_from(const Common& c) {
  EnumerationLimits l;
  l.max_n_free = c.max_n_free;
  l.max_n_diam4 = c.max_n_diam4;
  l.jobs = c.jobs;
  return l;
}

// Sends output to --out when given, standard output otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) fail(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BoundExceeded:
    case ErrorCode::Overflow:
      return kBound;
    default:
      return kUsage;
  }
}

Tree read_tree(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  return read_edge_list(in);
}

int cmd_stats(const std::string& path, const Common& c, std::ostream& out) {
  const TreeMetrics m = metrics(read_tree(path));
  Sink sink(c.out_file, out);
  report::write(*sink, m, report::parse_format(c.format));
  return kPass;
}

int cmd_construct(const std::string& spec_text, std::size_t n, const Common& c, std::ostream& out) {
  const TreeDescriptor d = parse_descriptor(spec_text);
  if (n != 0 && vertex_count(d) != n) {
    fail(ErrorCode::InvalidSpec, spec_text + " has " + std::to_string(vertex_count(d)) +
                                     " vertices, not " + std::to_string(n));
  }
  const Tree t = build(d);
  Sink sink(c.out_file, out);
  if (report::parse_format(c.format) == report::Format::Structured) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : t.edges()) edges.push_back({e.u, e.v});
    nlohmann::json doc{{"descriptor", to_string(d)}, {"n", t.size()}, {"edges", edges}};
    *sink << doc.dump(2) << '\n';
  } else {
    write_edge_list(*sink, t);
  }
  return kPass;
}

int cmd_enumerate(std::size_t n, std::optional<std::uint32_t> diameter, bool count_only, const Common& c,
                  std::ostream& out) {
  const EnumerationLimits limits = limits_from(c);
  const report::Format format = report::parse_format(c.format);
  Sink sink(c.out_file, out);
  std::size_t count = 0;
  nlohmann::json items = nlohmann::json::array();

  auto emit = [&](const std::string& name, Int lambda, std::uint32_t d) {
    ++count;
    if (count_only) return;
    switch (format) {
      case report::Format::Structured:
        items.push_back({{"tree", name}, {"reverse_wiener", report::exact(lambda)}, {"diameter", d}});
        break;
      case report::Format::Tabular:
        *sink << name << '\t' << to_string(lambda) << '\t' << d << '\n';
        break;
      case report::Format::Human:
        *sink << name << "  lambda " << to_string(lambda) << "  diameter " << d << '\n';
        break;
    }
  };

  if (format == report::Format::Tabular && !count_only) *sink << "tree\treverse_wiener\tdiameter\n";
  if (diameter && *diameter == 4 && n > limits.max_n_free) {
    // Diameter-4 classes are enumerated directly, well past the free-tree bound.
    if (n > limits.max_n_diam4) {
      fail(ErrorCode::BoundExceeded, "diameter-4 enumeration limited to n <= " +
                                         std::to_string(limits.max_n_diam4));
    }
    for_each_diam4_spec(n, [&](const Diam4Spec& s) {
      emit(to_string(TreeDescriptor{s}), lambda_diam4_by_cuts(s), 4);
    });
  } else {
    for_each_free_tree(
        n,
        [&](const Tree& t) {
          const TreeMetrics m = metrics(t);
          if (diameter && m.diameter != *diameter) return;
          emit(to_string(identify(t)), m.reverse_wiener, m.diameter);
        },
        limits.max_n_free);
  }

  if (format == report::Format::Structured) {
    nlohmann::json doc{{"n", n}, {"count", count}};
    if (diameter) doc["diameter"] = *diameter;
    if (!count_only) doc["trees"] = std::move(items);
    *sink << doc.dump(2) << '\n';
  } else if (count_only || format == report::Format::Human) {
    *sink << (format == report::Format::Human && !count_only ? "count " : "") << count << '\n';
  }
  return kPass;
}

int cmd_rank(std::size_t n, std::size_t k, const Common& c, std::ostream& out) {
  EnumerationLimits limits = limits_from(c);
  if (const char* mem = std::getenv("REVWIENER_MAX_MEM")) {
    const auto bytes = parse_memory(mem);
    if (!bytes) fail(ErrorCode::ParseError, std::string("REVWIENER_MAX_MEM: bad size '") + mem + "'");
    limits.bucket_cap = bucket_cap_for(*bytes, n, k, limits.bucket_cap);
  }
  const auto ranking = rank_trees(n, k, limits);
  Sink sink(c.out_file, out);
  report::write(*sink, ranking, report::parse_format(c.format));
  return kPass;
}

ExtremalResult closed_form(const std::string& which, std::int64_t n) {
  if (which == "f2") {
    if (n < 3) fail(ErrorCode::DomainTooSmall, "f2 needs n >= 3");
    ExtremalResult r;
    r.rank = Rank::ClassMin;
    r.diameter = 2;
    r.value = f_n2(n);
    r.attaining.push_back(StarSpec{std::size_t(n)});
    return r;
  }
  if (which == "f3") return f_n3_result(n);
  if (which == "g3") return g_n3_result(n);
  if (which == "f4") return f_n4(n);
  if (which == "g4") return g_n4(n);
  if (which == "second") return second_smallest(n);
  return third_smallest(n);
}

int cmd_verify(const std::string& theorem, std::size_t n_from, std::size_t n_to, std::uint64_t seed,
               std::size_t trials, bool timing, const std::string& table_file, const Common& c,
               std::ostream& out) {
  const TheoremId id = parse_theorem(theorem);
  VerifyOptions options;
  options.limits = limits_from(c);
  options.seed = seed;
  options.trials = trials;
  const VerificationReport r = verify(id, n_from, n_to, options);
  {
    Sink sink(c.out_file, out);
    report::write(*sink, r, report::parse_format(c.format), timing);
  }
  if (!table_file.empty()) {
    Sink table(table_file, out);
    report::write(*table, r, report::Format::Tabular, timing);
  }
  return r.passed() ? kPass : kMismatch;
}

}  // namespace

std::optional<std::size_t> parse_memory(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t multiplier = 1;
  switch (text.back()) {
    case 'K': case 'k': multiplier = std::size_t(1) << 10; break;
    case 'M': case 'm': multiplier = std::size_t(1) << 20; break;
    case 'G': case 'g': multiplier = std::size_t(1) << 30; break;
    default: break;
  }
  if (multiplier != 1) text.remove_suffix(1);
  const auto value = parse_int(text);
  if (!value || *value < 0) return std::nullopt;
  const auto v = to_int64(*value);
  if (!v) return std::nullopt;
  return std::size_t(*v) * multiplier;
}

std::size_t bucket_cap_for(std::size_t bytes, std::size_t n, std::size_t k, std::size_t default_cap) {
  // A code is 2n characters plus string overhead.
  const std::size_t per_tree = 2 * n + 32;
  const std::size_t cap = bytes / (std::max<std::size_t>(k, 1) * per_tree);
  return std::clamp<std::size_t>(cap, 1, default_cap);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reverse Wiener index of trees: metrics, families, enumeration and verification",
               "revwiener"};
  app.require_subcommand(1);
  Common common;
  std::function<int()> action;

  std::string path;
  auto* stats = app.add_subcommand("stats", "metrics of a tree read from an edge-list file");
  stats->add_option("file", path, "edge-list file, or - for standard input")->required();
  add_common(*stats, common);
  stats->callback([&] { action = [&] { return cmd_stats(path, common, out); }; });

  std::string spec;
  std::size_t n = 0;
  auto* construct = app.add_subcommand("construct", "edge list of a family member, e.g. D(6,3)");
  construct->add_option("spec", spec, "S(n), P(n), D(n,a), T(n0; v^m, ...) or C(code)")->required();
  construct->add_option("--n", n, "expected vertex count");
  add_common(*construct, common);
  construct->callback([&] { action = [&] { return cmd_construct(spec, n, common, out); }; });

  std::optional<std::uint32_t> diameter;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "every tree on n vertices, optionally of one diameter");
  enumerate->add_option("--n", n, "vertex count")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--diameter", diameter, "only trees of this diameter");
  enumerate->add_flag("--count", count_only, "print the number of trees only");
  add_common(*enumerate, common);
  enumerate->callback([&] { action = [&] { return cmd_enumerate(n, diameter, count_only, common, out); }; });

  std::size_t k = 3;
  auto* rank = app.add_subcommand("rank", "the k smallest reverse Wiener values over all trees on n vertices");
  rank->add_option("--n", n, "vertex count")->required()->check(CLI::PositiveNumber);
  rank->add_option("--k", k, "number of distinct values")->check(CLI::PositiveNumber);
  add_common(*rank, common);
  rank->callback([&] { action = [&] { return cmd_rank(n, k, common, out); }; });

  std::string which;
  auto* closed = app.add_subcommand("closed-form", "closed-form extremal value and trees");
  closed->add_option("which", which, "f2, f3, g3, f4, g4, second or third")
      ->required()
      ->check(CLI::IsMember({"f2", "f3", "g3", "f4", "g4", "second", "third"}));
  closed->add_option("--n", n, "vertex count")->required();
  add_common(*closed, common);
  closed->callback([&] {
    action = [&] {
      const ExtremalResult r = closed_form(which, std::int64_t(n));
      Sink sink(common.out_file, out);
      report::write(*sink, r, report::parse_format(common.format));
      return int(kPass);
    };
  });

  std::string theorem;
  std::size_t n_from = 0;
  std::size_t n_to = 0;
  std::uint64_t seed = VerifyOptions{}.seed;
  std::size_t trials = VerifyOptions{}.trials;
  bool timing = false;
  std::string table_file;
  auto* verify_cmd = app.add_subcommand("verify", "check a theorem against its oracle over a range of n");
  verify_cmd->add_option("theorem", theorem,
                         "smallest, second-smallest, third-smallest, prop-d3, prop-f4, prop-g4 or lemmas")
      ->required();
  auto* n_opt = verify_cmd->add_option("--n", n, "a single n");
  auto* from_opt = verify_cmd->add_option("--n-from", n_from, "first n");
  auto* to_opt = verify_cmd->add_option("--n-to", n_to, "last n");
  n_opt->excludes(from_opt)->excludes(to_opt);
  from_opt->needs(to_opt);
  to_opt->needs(from_opt);
  verify_cmd->add_option("--seed", seed, "random seed for the lemma battery");
  verify_cmd->add_option("--trials", trials, "random inputs per lemma");
  verify_cmd->add_flag("--timing", timing, "include wall time (reports are then not reproducible)");
  verify_cmd->add_option("--table", table_file, "also write a tab-separated copy to FILE");
  add_common(*verify_cmd, common);
  verify_cmd->callback([&] {
    if (n_opt->count() > 0) n_from = n_to = n;
    if (n_opt->count() == 0 && from_opt->count() == 0) {
      throw CLI::ValidationError("verify", "give --n or --n-from/--n-to");
    }
    action = [&] { return cmd_verify(theorem, n_from, n_to, seed, trials, timing, table_file, common, out); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "revwiener: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace revwiener::cli
