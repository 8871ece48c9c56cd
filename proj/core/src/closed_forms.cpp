#include "revwiener/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "revwiener/error.hpp"

namespace revwiener {
namespace {

void require_at_least(std::int64_t n, std::int64_t minimum, std::string_view what) {
  if (n < minimum) {
    fail(ErrorCode::DomainTooSmall, std::string(what) + " needs n >= " + std::to_string(minimum) +
                                        ", got " + std::to_string(n));
  }
}

std::int64_t floor_half(std::int64_t n) { return n / 2; }
std::int64_t ceil_half(std::int64_t n) { return (n + 1) / 2; }

// n^2/2 + 3n/2 - 2, shared by every double-star value.
Int double_star_base(std::int64_t n) {
  const Int big = Int(n);
  return checked_sub(exact_div(checked_add(checked_mul(big, big), checked_mul(Int(3), big)), 2), 2);
}

// One entry of a formula table: spokes given as (value, multiplicity) in
// terms of the current q and r, with k = q or q + 1 implied by the counts.
struct TableEntry {
  std::string_view label;
  std::vector<RawPart> parts;
};

void add_unique(ExtremalResult& result, TreeDescriptor d) {
  if (std::find(result.attaining.begin(), result.attaining.end(), d) == result.attaining.end()) {
    result.attaining.push_back(std::move(d));
  }
}

void add_entries(ExtremalResult& result, const QR& qr, std::string_view branch,
                 const std::vector<TableEntry>& entries) {
  for (const TableEntry& entry : entries) {
    try {
      Diam4Spec spec = normalize(0, entry.parts);
      if (static_cast<std::int64_t>(spec.n()) != qr.n) {
        result.notes.push_back("branch " + std::string(branch) + ": " + std::string(entry.label) +
                               " has " + std::to_string(spec.n()) + " vertices, expected " +
                               std::to_string(qr.n));
        continue;
      }
      add_unique(result, std::move(spec));
    } catch (const Error& e) {
      result.notes.push_back("branch " + std::string(branch) + ": " + std::string(entry.label) +
                             " is not a valid tree at q=" + std::to_string(qr.q) +
                             ", r=" + std::to_string(qr.r) + " (" + e.what() + ")");
    }
  }
}

}  // namespace

std::string_view to_string(Rank rank) noexcept {
  switch (rank) {
    case Rank::OverallFirst: return "overall-1st";
    case Rank::OverallSecond: return "overall-2nd";
    case Rank::OverallThird: return "overall-3rd";
    case Rank::ClassMin: return "class-min";
    case Rank::ClassSecondMin: return "class-2nd-min";
  }
  return "unknown";
}

QR qr_decompose(std::int64_t n) {
  require_at_least(n, 2, "qr_decompose");
  auto q = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n - 1)));
  while (q * q >= n) --q;
  while ((q + 1) * (q + 1) < n) ++q;
  return {n, q, n - q * q};
}

Int f_n2(std::int64_t n) {
  require_at_least(n, 2, "f(n,2)");
  return Int(n) - 1;
}

Int f_n3(std::int64_t n) {
  require_at_least(n, 4, "f(n,3)");
  return checked_sub(double_star_base(n), checked_mul(Int(floor_half(n)), Int(ceil_half(n))));
}

Int f_n3_qr(std::int64_t n) {
  require_at_least(n, 4, "f(n,3)");
  const QR qr = qr_decompose(n);
  const Int q = qr.q;
  const Int r = qr.r;
  // 4 f = q^4 + 2 r q^2 + 6 q^2 + r^2 + 6 r - 7 (odd n) or - 8 (even n).
  Int four_f = checked_mul(q, q, q, q);
  four_f = checked_add(four_f, checked_mul(Int(2), r, q, q));
  four_f = checked_add(four_f, checked_mul(Int(6), q, q));
  four_f = checked_add(four_f, checked_mul(r, r));
  four_f = checked_add(four_f, checked_mul(Int(6), r));
  four_f = checked_sub(four_f, n % 2 == 1 ? 7 : 8);
  return exact_div(four_f, 4);
}

Int g_n3(std::int64_t n) {
  require_at_least(n, 6, "g(n,3)");
  return checked_sub(double_star_base(n),
                     checked_mul(Int(floor_half(n) - 1), Int(ceil_half(n) + 1)));
}

Int f_n4_value(std::int64_t n) {
  require_at_least(n, 5, "f(n,4)");
  const QR qr = qr_decompose(n);
  const Int q = qr.q;
  const Int r = qr.r;
  Int v = checked_add(checked_mul(Int(2), q, q, q), checked_mul(q, q));
  v = checked_add(v, checked_mul(Int(3), r, q));
  if (qr.r <= qr.q) {
    // 2q^3 + q^2 + 3rq - 3q + 2r - 2
    return checked_sub(checked_add(checked_sub(v, checked_mul(Int(3), q)), checked_mul(Int(2), r)), 2);
  }
  // 2q^3 + q^2 + 3rq - 4q + 3r - 3
  return checked_sub(checked_add(checked_sub(v, checked_mul(Int(4), q)), checked_mul(Int(3), r)), 3);
}

Int g_n4_value(std::int64_t n) {
  require_at_least(n, 6, "g(n,4)");
  const QR qr = qr_decompose(n);
  const Int q = qr.q;
  const Int r = qr.r;
  const Int cube = checked_mul(Int(2), q, q, q);
  if (qr.r <= qr.q - 1) {
    // 2q^3 + q^2 + 3rq - 3q + 2r
    Int v = checked_add(cube, checked_mul(q, q));
    v = checked_add(v, checked_mul(Int(3), r, q));
    v = checked_sub(v, checked_mul(Int(3), q));
    return checked_add(v, checked_mul(Int(2), r));
  }
  if (qr.r == qr.q + 2) {
    // 2q^3 + 4q^2 + 5q + 4
    Int v = checked_add(cube, checked_mul(Int(4), q, q));
    return checked_add(checked_add(v, checked_mul(Int(5), q)), 4);
  }
  // 2q^3 + q^2 + 3rq - 4q + 3r - 1 for r = q, q+1, q+3, ..., 2q+1
  Int v = checked_add(cube, checked_mul(q, q));
  v = checked_add(v, checked_mul(Int(3), r, q));
  v = checked_sub(v, checked_mul(Int(4), q));
  return checked_sub(checked_add(v, checked_mul(Int(3), r)), 1);
}

ExtremalResult f_n3_result(std::int64_t n) {
  ExtremalResult result;
  result.rank = Rank::ClassMin;
  result.diameter = 3;
  result.value = f_n3(n);
  if (f_n3_qr(n) != result.value) {
    throw std::logic_error("f(n,3) floor and (q,r) forms disagree at n=" + std::to_string(n));
  }
  result.attaining.push_back(DoubleStarSpec{std::size_t(n), std::size_t(floor_half(n))});
  return result;
}

ExtremalResult g_n3_result(std::int64_t n) {
  ExtremalResult result;
  result.rank = Rank::ClassSecondMin;
  result.diameter = 3;
  result.value = g_n3(n);
  result.attaining.push_back(DoubleStarSpec{std::size_t(n), std::size_t(floor_half(n) - 1)});
  return result;
}

ExtremalResult f_n4(std::int64_t n) {
  ExtremalResult result;
  result.rank = Rank::ClassMin;
  result.diameter = 4;
  result.value = f_n4_value(n);
  const QR qr = qr_decompose(n);
  const std::int64_t q = qr.q;
  const std::int64_t r = qr.r;
  if (r == 1) {
    add_entries(result, qr, "r=1", {{"T_{n,q}(q-1^[q])", {{q - 1, q}}}});
  } else if (r <= q) {
    add_entries(result, qr, "r=2..q",
                {{"T_{n,q}(q-1^[q-r+1], q^[r-1])", {{q - 1, q - r + 1}, {q, r - 1}}}});
  } else if (r == q + 1) {
    add_entries(result, qr, "r=q+1",
                {{"T_{n,q}(q^[q])", {{q, q}}}, {"T_{n,q+1}(q-1^[q+1])", {{q - 1, q + 1}}}});
  } else {
    add_entries(result, qr, "r=q+2..2q+1",
                {{"T_{n,q+1}(q-1^[2(q+1)-r], q^[r-q-1])", {{q - 1, 2 * (q + 1) - r}, {q, r - q - 1}}}});
  }
  return result;
}

ExtremalResult g_n4(std::int64_t n) {
  ExtremalResult result;
  result.rank = Rank::ClassSecondMin;
  result.diameter = 4;
  result.value = g_n4_value(n);
  const QR qr = qr_decompose(n);
  const std::int64_t q = qr.q;
  const std::int64_t r = qr.r;
  // Branches are tried in the order they are listed; for small q some ranges
  // overlap (q=2: r=4 is both q+2 and 2q) and the first listed one wins.
  if (r >= 1 && r <= q - 2) {
    add_entries(result, qr, "r=1..q-2",
                {{"T_{n,q}(q-2^[1], q-1^[q-r-1], q^[r])", {{q - 2, 1}, {q - 1, q - r - 1}, {q, r}}}});
  } else if (r == q - 1) {
    add_entries(result, qr, "r=q-1",
                {{"T_{n,q}(q-2^[1], q^[q-1])", {{q - 2, 1}, {q, q - 1}}},
                 {"T_{n,q+1}(q-2^[2], q-1^[q-1])", {{q - 2, 2}, {q - 1, q - 1}}}});
  } else if (r == q) {
    add_entries(result, qr, "r=q",
                {{"T_{n,q+1}(q-2^[1], q-1^[q])", {{q - 2, 1}, {q - 1, q}}}});
  } else if (r == q + 1) {
    add_entries(result, qr, "r=q+1",
                {{"T_{n,q}(q-1^[1], q^[q-2], q+1^[1])", {{q - 1, 1}, {q, q - 2}, {q + 1, 1}}},
                 {"T_{n,q+1}(q-2^[1], q-1^[q-1], q^[1])", {{q - 2, 1}, {q - 1, q - 1}, {q, 1}}}});
  } else if (r == q + 2) {
    add_entries(result, qr, "r=q+2", {{"T_{n,q}(q^[q-1], q+1^[1])", {{q, q - 1}, {q + 1, 1}}}});
  } else if (r == q + 3) {
    add_entries(result, qr, "r=q+3",
                {{"T_{n,q}(q^[q-2], q+1^[2])", {{q, q - 2}, {q + 1, 2}}},
                 {"T_{n,q+1}(q-2^[1], q-1^[q-3], q^[3])", {{q - 2, 1}, {q - 1, q - 3}, {q, 3}}},
                 {"T_{n,q+1}(q-1^[q], q+1^[1])", {{q - 1, q}, {q + 1, 1}}}});
  } else if (r >= q + 4 && r <= 2 * q - 1) {
    add_entries(result, qr, "r=q+4..2q-1",
                {{"T_{n,q+1}(q-2^[1], q-1^[2q-r], q^[r-q])", {{q - 2, 1}, {q - 1, 2 * q - r}, {q, r - q}}},
                 {"T_{n,q+1}(q-1^[2q+3-r], q^[r-q-3], q+1^[1])",
                  {{q - 1, 2 * q + 3 - r}, {q, r - q - 3}, {q + 1, 1}}}});
  } else if (r == 2 * q) {
    add_entries(result, qr, "r=2q",
                {{"T_{n,q+1}(q-2^[1], q^[q])", {{q - 2, 1}, {q, q}}},
                 {"T_{n,q+1}(q-1^[2q+3-r], q^[r-q-3], q+1^[1])",
                  {{q - 1, 2 * q + 3 - r}, {q, r - q - 3}, {q + 1, 1}}}});
  } else {
    add_entries(result, qr, "r=2q+1",
                {{"T_{n,q+1}(q-1^[2], q^[q-2], q+1^[1])", {{q - 1, 2}, {q, q - 2}, {q + 1, 1}}}});
  }
  return result;
}

ExtremalResult second_smallest(std::int64_t n) {
  require_at_least(n, 4, "second smallest");
  ExtremalResult result;
  result.rank = Rank::OverallSecond;
  if (n <= 56) {
    const ExtremalResult d3 = f_n3_result(n);
    result.value = d3.value;
    result.attaining = d3.attaining;
  } else if (n == 57) {
    const ExtremalResult d3 = f_n3_result(n);
    const ExtremalResult d4 = f_n4(n);
    result.value = d3.value;
    if (d4.value != d3.value) {
      result.notes.push_back("f(57,3) = " + to_string(d3.value) + " differs from f(57,4) = " +
                             to_string(d4.value));
    }
    result.attaining = d3.attaining;
    for (const auto& d : d4.attaining) add_unique(result, d);
  } else {
    ExtremalResult d4 = f_n4(n);
    result.value = d4.value;
    result.attaining = std::move(d4.attaining);
    result.notes = std::move(d4.notes);
  }
  return result;
}

ExtremalResult third_smallest(std::int64_t n) {
  require_at_least(n, 5, "third smallest");
  ExtremalResult result;
  result.rank = Rank::OverallThird;
  if (n == 5) {
    // P_5, the only diameter-4 tree on five vertices.
    result.value = 20;
    result.attaining.push_back(PathSpec{5});
    return result;
  }
  if (n <= 57) {
    const ExtremalResult d3 = g_n3_result(n);
    result.value = d3.value;
    result.attaining = d3.attaining;
    // The runner-up among diameter 4 competes here: f(n,4) below 57 and
    // g(n,4) at 57. Flag any tie or inversion the formulas themselves show.
    const Int rival = n <= 56 ? f_n4_value(n) : g_n4_value(n);
    const std::string rival_name = n <= 56 ? "f(n,4)" : "g(n,4)";
    if (rival <= d3.value) {
      result.notes.push_back(rival_name + " = " + to_string(rival) + " is not above g(n,3) = " +
                             to_string(d3.value) + "; diameter-4 trees also reach this value");
    }
    return result;
  }
  ExtremalResult d4 = g_n4(n);
  result.value = d4.value;
  result.attaining = std::move(d4.attaining);
  result.notes = std::move(d4.notes);
  return result;
}

}  // namespace revwiener
