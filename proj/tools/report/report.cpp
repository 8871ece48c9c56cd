#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "revwiener/error.hpp"

namespace revwiener::report {
namespace {

using nlohmann::json;

std::string joined(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (const std::string& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

std::vector<std::string> names(const std::vector<TreeDescriptor>& descriptors) {
  std::vector<std::string> out;
  for (const TreeDescriptor& d : descriptors) out.push_back(to_string(d));
  return out;
}

std::vector<std::string> names(const RankEntry& entry) {
  std::vector<std::string> out;
  for (const CanonicalCode& code : entry.trees) out.push_back(describe(code));
  return out;
}

std::string optional_value(const std::optional<Int>& v) { return v ? to_string(*v) : "-"; }

// TSV cells must not contain tabs or newlines.
std::string cell(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "human") return Format::Human;
  if (text == "structured") return Format::Structured;
  if (text == "tabular") return Format::Tabular;
  fail(ErrorCode::ParseError, "unknown format '" + std::string(text) + "'");
}

json exact(Int value) {
  if (auto v = to_int64(value)) return *v;
  return to_string(value);
}

std::string describe(const CanonicalCode& code) {
  const TreeDescriptor d = identify(tree_from_code(code));
  return to_string(d);
}

json to_json(const TreeMetrics& m) {
  return {{"n", m.n},
          {"wiener", exact(m.wiener)},
          {"diameter", m.diameter},
          {"reverse_wiener", exact(m.reverse_wiener)},
          {"centers", m.centers}};
}

json to_json(const ExtremalResult& r) {
  json out{{"rank", to_string(r.rank)}, {"value", exact(r.value)}, {"attaining", names(r.attaining)}};
  if (r.rank == Rank::ClassMin || r.rank == Rank::ClassSecondMin) out["diameter"] = r.diameter;
  out["notes"] = r.notes;
  return out;
}

json to_json(const std::vector<RankEntry>& ranking) {
  json out = json::array();
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    const RankEntry& e = ranking[i];
    std::vector<std::string> codes;
    for (const CanonicalCode& c : e.trees) codes.push_back(c.str());
    out.push_back({{"rank", i + 1},
                   {"value", exact(e.value)},
                   {"count", e.count},
                   {"truncated", e.truncated()},
                   {"trees", names(e)},
                   {"codes", codes}});
  }
  return out;
}

json to_json(const VerificationReport& r, bool with_timing) {
  json records = json::array();
  for (const VerificationRecord& rec : r.records) {
    records.push_back({{"n", rec.n},
                       {"quantity", rec.quantity},
                       {"claimed_value", rec.claimed_value ? exact(*rec.claimed_value) : json()},
                       {"oracle_value", rec.oracle_value ? exact(*rec.oracle_value) : json()},
                       {"claimed_set", rec.claimed_set},
                       {"oracle_set", rec.oracle_set},
                       {"value_match", rec.value_match},
                       {"set_match", rec.set_match},
                       {"match", rec.match},
                       {"note", rec.note}});
  }
  json out{{"schema", kSchema},
           {"theorem", to_string(r.theorem)},
           {"n_from", r.n_from},
           {"n_to", r.n_to},
           {"policy", to_string(r.policy)},
           {"records", std::move(records)},
           {"summary",
            {{"checked", r.summary.checked},
             {"passed", r.summary.passed},
             {"failed", r.summary.failed},
             {"value_failures", r.summary.value_failures},
             {"verdict", r.passed() ? "pass" : "fail"}}}};
  if (with_timing) out["wall_time_seconds"] = r.wall_seconds;
  return out;
}

void write(std::ostream& out, const TreeMetrics& m, Format format) {
  switch (format) {
    case Format::Structured:
      out << to_json(m).dump(2) << '\n';
      return;
    case Format::Tabular: {
      out << "n\twiener\tdiameter\treverse_wiener\tcenters\n";
      std::string centers;
      for (Vertex c : m.centers) centers += (centers.empty() ? "" : " ") + std::to_string(c);
      out << m.n << '\t' << to_string(m.wiener) << '\t' << m.diameter << '\t'
          << to_string(m.reverse_wiener) << '\t' << centers << '\n';
      return;
    }
    case Format::Human:
      out << "n               " << m.n << '\n'
          << "wiener          " << to_string(m.wiener) << '\n'
          << "diameter        " << m.diameter << '\n'
          << "reverse wiener  " << to_string(m.reverse_wiener) << '\n'
          << "centers        ";
      for (Vertex c : m.centers) out << ' ' << c;
      out << '\n';
      return;
  }
}

void write(std::ostream& out, const ExtremalResult& r, Format format) {
  switch (format) {
    case Format::Structured:
      out << to_json(r).dump(2) << '\n';
      return;
    case Format::Tabular:
      out << "rank\tvalue\tattaining\tnotes\n"
          << to_string(r.rank) << '\t' << to_string(r.value) << '\t'
          << cell(joined(names(r.attaining), " | ")) << '\t' << cell(joined(r.notes, " | ")) << '\n';
      return;
    case Format::Human:
      out << "value      " << to_string(r.value) << '\n';
      for (const std::string& name : names(r.attaining)) out << "attaining  " << name << '\n';
      for (const std::string& note : r.notes) out << "note       " << note << '\n';
      return;
  }
}

void write(std::ostream& out, const std::vector<RankEntry>& ranking, Format format) {
  switch (format) {
    case Format::Structured:
      out << to_json(ranking).dump(2) << '\n';
      return;
    case Format::Tabular:
      out << "rank\tvalue\tcount\ttruncated\ttrees\n";
      for (std::size_t i = 0; i < ranking.size(); ++i) {
        const RankEntry& e = ranking[i];
        out << i + 1 << '\t' << to_string(e.value) << '\t' << e.count << '\t'
            << (e.truncated() ? "yes" : "no") << '\t' << cell(joined(names(e), " | ")) << '\n';
      }
      return;
    case Format::Human:
      for (std::size_t i = 0; i < ranking.size(); ++i) {
        const RankEntry& e = ranking[i];
        out << std::setw(3) << i + 1 << "  " << std::setw(10) << to_string(e.value) << "  "
            << joined(names(e), ", ");
        if (e.truncated()) out << " (" << e.count << " trees, " << e.trees.size() << " shown)";
        out << '\n';
      }
      return;
  }
}

void write(std::ostream& out, const VerificationReport& r, Format format, bool with_timing) {
  switch (format) {
    case Format::Structured:
      out << to_json(r, with_timing).dump(2) << '\n';
      return;
    case Format::Tabular:
      out << "n\tquantity\tclaimed_value\toracle_value\tclaimed_set\toracle_set\tvalue_match\tset_match\tmatch\tnote\n";
      for (const VerificationRecord& rec : r.records) {
        out << rec.n << '\t' << rec.quantity << '\t' << optional_value(rec.claimed_value) << '\t'
            << optional_value(rec.oracle_value) << '\t' << cell(joined(rec.claimed_set, " | ")) << '\t'
            << cell(joined(rec.oracle_set, " | ")) << '\t' << rec.value_match << '\t' << rec.set_match
            << '\t' << rec.match << '\t' << cell(rec.note) << '\n';
      }
      return;
    case Format::Human: {
      out << "theorem " << to_string(r.theorem) << ", n = " << r.n_from << ".." << r.n_to
          << ", policy " << to_string(r.policy) << '\n';
      for (const VerificationRecord& rec : r.records) {
        out << std::setw(4) << rec.n << "  " << std::left << std::setw(22) << rec.quantity << std::right
            << (rec.match ? "ok      " : rec.value_match ? "SET     " : "VALUE   ")
            << optional_value(rec.claimed_value) << " {" << joined(rec.claimed_set, ", ") << "}";
        if (!rec.match) {
          out << " vs oracle " << optional_value(rec.oracle_value) << " {" << joined(rec.oracle_set, ", ")
              << "}";
        }
        out << '\n';
        if (!rec.note.empty()) out << "      note: " << rec.note << '\n';
      }
      out << "checked " << r.summary.checked << ", passed " << r.summary.passed << ", failed "
          << r.summary.failed << ", value failures " << r.summary.value_failures << ": "
          << (r.passed() ? "PASS" : "FAIL") << '\n';
      if (with_timing) {
        std::ostringstream t;
        t << std::fixed << std::setprecision(3) << r.wall_seconds;
        out << "wall time " << t.str() << " s\n";
      }
      return;
    }
  }
}

}  // namespace revwiener::report
