#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string_view>

namespace revwiener::cli {

enum ExitCode : int {
  kPass = 0,
  kMismatch = 1,
  kUsage = 2,  // bad flags, unparsable input, invalid specs
  kBound = 3,  // an oracle bound or the integer range was exceeded
};

/// Entry point shared by main() and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Parses a REVWIENER_MAX_MEM style size: a byte count with an optional
/// K, M or G suffix (powers of 1024). Empty on malformed input.
std::optional<std::size_t> parse_memory(std::string_view text);

/// Trees kept per ranking bucket so that k buckets of n-vertex codes fit in
/// `bytes`, clamped to [1, default_cap].
std::size_t bucket_cap_for(std::size_t bytes, std::size_t n, std::size_t k, std::size_t default_cap);

}  // namespace revwiener::cli
