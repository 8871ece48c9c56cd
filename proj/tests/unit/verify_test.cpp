#include <gtest/gtest.h>

#include <algorithm>

#include "revwiener/error.hpp"
#include "revwiener/verify.hpp"

namespace {

using namespace revwiener;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::EmptyClass;
}

void expect_same_records(const VerificationReport& a, const VerificationReport& b) {
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const VerificationRecord& x = a.records[i];
    const VerificationRecord& y = b.records[i];
    EXPECT_EQ(x.n, y.n);
    EXPECT_EQ(x.quantity, y.quantity);
    EXPECT_EQ(x.claimed_value, y.claimed_value);
    EXPECT_EQ(x.oracle_value, y.oracle_value);
    EXPECT_EQ(x.claimed_set, y.claimed_set);
    EXPECT_EQ(x.oracle_set, y.oracle_set);
    EXPECT_EQ(x.match, y.match);
    EXPECT_EQ(x.note, y.note);
  }
  EXPECT_EQ(a.summary.passed, b.summary.passed);
  EXPECT_EQ(a.summary.value_failures, b.summary.value_failures);
}

TEST(TheoremNames, RoundTrip) {
  for (TheoremId id : all_theorems()) EXPECT_EQ(parse_theorem(to_string(id)), id);
  EXPECT_EQ(all_theorems().size(), 7u);
  EXPECT_EQ(code_of([] { parse_theorem("prop-x"); }), ErrorCode::UnknownTheorem);
  EXPECT_EQ(to_string(Policy::ValueMatchRequired), "value-match-required");
}

TEST(Verify, DomainAndBounds) {
  EXPECT_EQ(code_of([] { verify(TheoremId::PropG4, 5, 8); }), ErrorCode::DomainTooSmall);
  EXPECT_EQ(code_of([] { verify(TheoremId::SecondSmallest, 4, 21); }), ErrorCode::BoundExceeded);
  EXPECT_EQ(code_of([] { verify(TheoremId::PropF4, 5, 81); }), ErrorCode::BoundExceeded);
}

TEST(Verify, SecondAndThirdSmallestHoldOnSmallRanges) {
  const VerificationReport second = verify(TheoremId::SecondSmallest, 4, 12);
  EXPECT_TRUE(second.passed());
  EXPECT_EQ(second.summary.checked, 9u);
  const VerificationReport third = verify(TheoremId::ThirdSmallest, 5, 12);
  EXPECT_TRUE(third.passed());
  EXPECT_EQ(third.policy, Policy::Strict);
}

TEST(Verify, SmallestFailsOnlyAtTwo) {
  const VerificationReport r = verify(TheoremId::Smallest, 2, 8);
  EXPECT_FALSE(r.passed());
  ASSERT_EQ(r.summary.failed, 1u);
  const auto bad = std::find_if(r.records.begin(), r.records.end(), [](const auto& rec) { return !rec.match; });
  EXPECT_EQ(bad->n, 2u);
  EXPECT_EQ(bad->claimed_value, Int(1));
  EXPECT_EQ(bad->oracle_value, Int(0));
}

TEST(Verify, RunnerUpTableErrataAreReportedButValuesPass) {
  const VerificationReport r = verify(TheoremId::PropG4, 6, 20);
  EXPECT_EQ(r.policy, Policy::ValueMatchRequired);
  EXPECT_EQ(r.summary.value_failures, 0u);
  EXPECT_TRUE(r.passed());
  std::vector<std::size_t> set_mismatches;
  for (const VerificationRecord& rec : r.records) {
    EXPECT_TRUE(rec.value_match);
    if (!rec.set_match) {
      set_mismatches.push_back(rec.n);
      EXPECT_NE(rec.note.find("erratum"), std::string::npos);
    }
  }
  EXPECT_EQ(set_mismatches, (std::vector<std::size_t>{9, 19}));
}

TEST(Verify, ClassFormulasHold) {
  EXPECT_TRUE(verify(TheoremId::PropD3, 4, 40).passed());
  EXPECT_TRUE(verify(TheoremId::PropF4, 5, 40).passed());
}

TEST(Verify, RecordsIndependentOfWorkerCount) {
  VerifyOptions one;
  VerifyOptions four;
  four.limits.jobs = 4;
  expect_same_records(verify(TheoremId::PropG4, 6, 30, one), verify(TheoremId::PropG4, 6, 30, four));
  expect_same_records(verify(TheoremId::SecondSmallest, 4, 11, one),
                      verify(TheoremId::SecondSmallest, 4, 11, four));
  one.trials = four.trials = 200;
  expect_same_records(verify(TheoremId::Lemmas, 5, 25, one), verify(TheoremId::Lemmas, 5, 25, four));
}

TEST(Verify, LemmaReportHasOneRecordPerLemma) {
  VerifyOptions options;
  options.trials = 100;
  const VerificationReport r = verify(TheoremId::Lemmas, 5, 20, options);
  ASSERT_EQ(r.records.size(), 4u);
  for (const VerificationRecord& rec : r.records) EXPECT_EQ(rec.claimed_value, Int(100));
}

}  // namespace
