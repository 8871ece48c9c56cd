#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "revwiener/closed_forms.hpp"
#include "revwiener/enumeration.hpp"
#include "revwiener/invariants.hpp"
#include "revwiener/verify.hpp"

namespace revwiener::report {

enum class Format { Human, Structured, Tabular };

/// "human", "structured" or "tabular"; throws Error(ParseError) otherwise.
Format parse_format(std::string_view text);

/// Version tag written into every structured verification report. Bump it
/// whenever a field is renamed, removed or changes meaning.
inline constexpr std::string_view kSchema = "revwiener.verification/1";

/// Exact integers become JSON numbers when they fit in 64 bits and decimal
/// strings otherwise.
nlohmann::json exact(Int value);

nlohmann::json to_json(const TreeMetrics& m);
nlohmann::json to_json(const ExtremalResult& r);
nlohmann::json to_json(const std::vector<RankEntry>& ranking);
/// Wall time is only included when asked for, so that reports stay
/// byte-identical between runs.
nlohmann::json to_json(const VerificationReport& r, bool with_timing = false);

/// Display name for a canonical code: the family spec when the tree belongs
/// to a named family, the code itself otherwise.
std::string describe(const CanonicalCode& code);

void write(std::ostream& out, const TreeMetrics& m, Format format);
void write(std::ostream& out, const ExtremalResult& r, Format format);
void write(std::ostream& out, const std::vector<RankEntry>& ranking, Format format);
void write(std::ostream& out, const VerificationReport& r, Format format, bool with_timing = false);

}  // namespace revwiener::report
