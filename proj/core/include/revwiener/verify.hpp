#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revwiener/checked.hpp"
#include "revwiener/enumeration.hpp"

namespace revwiener {

enum class TheoremId {
  Smallest,        // S_n is the unique minimiser
  SecondSmallest,
  ThirdSmallest,
  PropD3,          // f(n,3) and g(n,3)
  PropF4,
  PropG4,
  Lemmas,          // transform battery
};

std::string_view to_string(TheoremId id) noexcept;
/// Throws UnknownTheorem.
TheoremId parse_theorem(std::string_view text);
std::vector<TheoremId> all_theorems();

/// Strict: a record passes only if values and sets agree.
/// ValueMatchRequired: set disagreements are reported but do not fail the
/// campaign (used for the runner-up table of diameter 4, which has errata).
enum class Policy { Strict, ValueMatchRequired };
std::string_view to_string(Policy policy) noexcept;

struct VerificationRecord {
  std::size_t n = 0;
  std::string quantity;  // what was compared, e.g. "g(n,4)"
  std::optional<Int> claimed_value;
  std::optional<Int> oracle_value;
  std::vector<std::string> claimed_set;  // descriptor strings, sorted
  std::vector<std::string> oracle_set;
  bool value_match = false;
  bool set_match = false;
  bool match = false;  // value_match && set_match
  std::string note;
};

struct VerificationSummary {
  std::size_t checked = 0;
  std::size_t passed = 0;  // records with match == true
  std::size_t failed = 0;  // checked - passed
  std::size_t value_failures = 0;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::Smallest;
  std::size_t n_from = 0;
  std::size_t n_to = 0;
  Policy policy = Policy::Strict;
  std::vector<VerificationRecord> records;  // ordered by n, then quantity
  VerificationSummary summary;
  double wall_seconds = 0.0;

  /// The campaign verdict under `policy`.
  bool passed() const noexcept;
};

struct VerifyOptions {
  EnumerationLimits limits;
  std::uint64_t seed = 0x5eed;
  std::size_t trials = 1000;  // random inputs per lemma
};

/// Runs one verification campaign over n_from..n_to. Per-n work is spread
/// over limits.jobs workers and merged by n, so the records do not depend on
/// the worker count. Throws BoundExceeded when the range needs an oracle
/// beyond its configured bound and DomainTooSmall below the theorem's domain.
VerificationReport verify(TheoremId id, std::size_t n_from, std::size_t n_to,
                          const VerifyOptions& options = {});

/// Outcome of the transform battery for one lemma.
struct LemmaStats {
  std::string lemma;
  std::size_t trials = 0;
  std::size_t delta_matches = 0;   // formula delta == recomputed difference
  std::size_t strictly_negative = 0;
  std::size_t lemma_formula = 0;   // lemma-specific closed form holds
  std::size_t postconditions = 0;  // diameter / shape guarantees hold
  std::size_t max_n = 0;
  std::string first_failure;

  bool all_ok() const noexcept {
    return delta_matches == trials && strictly_negative == trials && lemma_formula == trials &&
           postconditions == trials;
  }
};

/// `trials` seeded random valid inputs per lemma with sizes drawn from
/// [min_n, max_n], raised where a lemma has no smaller valid input.
std::vector<LemmaStats> run_lemma_battery(std::uint64_t seed, std::size_t trials, std::size_t min_n,
                                          std::size_t max_n);

}  // namespace revwiener
