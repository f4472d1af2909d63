#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rivercross/rivercross.hpp"

using namespace rivercross;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

BigInt fibonacci(int n) {
  BigInt a = 0, b = 1;
  for (int i = 0; i < n; ++i) std::tie(a, b) = std::pair<BigInt, BigInt>{b, a + b};
  return a;
}

}  // namespace

TEST(Family, FibonacciLikeHead) {
  EXPECT_EQ(counts_only(family_counts({5, 3, 1, 8})), ints({4, 4, 13, 21, 34, 55, 89, 144}));
}

TEST(Family, CountsMatchIndependentSearch) {
  const FamilySpec fs{9, 2, 0, 8, 0};
  const auto terms = family_counts(fs);
  for (const auto& t : terms) {
    const auto want = oracle::mc_count(t.index + 9, t.index, 2, 0);
    ASSERT_TRUE(want);
    EXPECT_EQ(t.count, want->count) << "i=" << t.index;
    EXPECT_EQ(t.crossings, want->length) << "i=" << t.index;
  }
}

TEST(Family, EqualPopulationsWithSmallBoat) {
  const auto terms = family_counts({0, 2, 0, 5});
  for (const auto& t : terms) EXPECT_EQ(t.solvable(), t.index <= 3) << "i=" << t.index;
  EXPECT_EQ(terms[3].count, 0);
}

TEST(Family, ThreadCountDoesNotChangeResults) {
  setenv("RIVER_SOLVE_THREADS", "1", 1);
  const auto serial = family_counts({3, 3, 1, 10});
  setenv("RIVER_SOLVE_THREADS", "4", 1);
  const auto parallel = family_counts({3, 3, 1, 10});
  unsetenv("RIVER_SOLVE_THREADS");
  EXPECT_EQ(serial, parallel);
}

TEST(Family, RejectsBadSpecs) {
  EXPECT_THROW(family_counts({0, 2, 1, 3}), InvalidParams);
  EXPECT_THROW(family_counts({5, 3, 1, 0}), std::invalid_argument);
}

TEST(Recurrence, FibonacciTail) {
  const auto rec = fit_linear_recurrence(ints({13, 21, 34, 55, 89, 144}), 2, 0);
  ASSERT_TRUE(rec);
  EXPECT_EQ(rec->coefficients, (std::vector<BigRational>{1, 1}));
}

TEST(Recurrence, Constant) {
  const auto rec = fit_linear_recurrence(ints({361, 361, 361, 361, 361, 361}), 1, 0);
  ASSERT_TRUE(rec);
  EXPECT_EQ(rec->coefficients, (std::vector<BigRational>{1}));
}

TEST(Recurrence, Geometric) {
  const auto rec = fit_linear_recurrence(ints({1, 2, 4, 8, 16, 32, 64, 128}), 3, 0);
  ASSERT_TRUE(rec);
  EXPECT_EQ(rec->order(), 1u);
  EXPECT_EQ(rec->coefficients, (std::vector<BigRational>{2}));
}

TEST(Recurrence, NeedsHeldOutTerms) {
  EXPECT_THROW(fit_linear_recurrence(ints({1, 1, 2, 3, 5}), 2, 0), InsufficientData);
  EXPECT_FALSE(fit_linear_recurrence(ints({1, 5, 2, 9, 4, 1, 7, 3}), 1, 0));
}

TEST(Recurrence, ExtendAndHolds) {
  const auto rec = fit_linear_recurrence(ints({1, 1, 2, 3, 5, 8}), 2, 0);
  ASSERT_TRUE(rec);
  std::vector<BigInt> seq = ints({1, 1});
  rec->extend(seq, 12);
  EXPECT_EQ(seq.back(), 144);
  EXPECT_TRUE(rec->holds_on(seq));
}

TEST(GeneratingFunction, Fibonacci) {
  const auto seq = ints({1, 1, 2, 3, 5, 8, 13, 21});
  const auto rec = fit_linear_recurrence(seq, 2, 0);
  ASSERT_TRUE(rec);
  const auto gf = rational_gf(*rec, seq);
  EXPECT_EQ(gf.numerator, ints({1}));
  EXPECT_EQ(gf.denominator, ints({1, -1, -1}));
  EXPECT_EQ(series_coefficients(gf, 8), seq);
}

TEST(GeneratingFunction, ConstantTailWithHead) {
  const auto seq = ints({1, 1, 5, 28, 43, 155, 361, 361, 361, 361, 361, 361});
  const auto rec = best_recurrence(seq, 2);
  ASSERT_TRUE(rec);
  EXPECT_EQ(rec->order(), 1u);
  EXPECT_EQ(rec->offset, 6u);
  const auto gf = rational_gf(*rec, seq);
  EXPECT_EQ(gf.denominator, ints({1, -1}));
  EXPECT_EQ(series_coefficients(gf, 20), [&] {
    auto s = seq;
    s.resize(20, 361);
    return s;
  }());
}

TEST(Conjecture, FibonacciFamily) {
  const auto report = conjecture_report({5, 3, 1, 14}, 4);
  ASSERT_TRUE(report.recurrence);
  EXPECT_EQ(report.recurrence->coefficients, (std::vector<BigRational>{1, 1}));
  EXPECT_EQ(report.valid_from(), 3);
  for (const auto& t : report.terms)
    if (t.index >= 3) {
      EXPECT_EQ(t.count, fibonacci(t.index + 4)) << "i=" << t.index;
    }
  EXPECT_NE(report.text().find("a(i) = a(i-1) + a(i-2), valid from i = 3"), std::string::npos);
}

TEST(Conjecture, ThreeSixtyOne) {
  const auto report = conjecture_report({0, 4, 0, 12}, 4);
  ASSERT_TRUE(report.recurrence);
  EXPECT_EQ(report.recurrence->order(), 1u);
  EXPECT_EQ(report.valid_from(), 7);
  EXPECT_EQ(report.terms[6].count, 361);
  EXPECT_NE(report.text().find("a(i) = 361 for all i >= 7"), std::string::npos);
}

TEST(Conjecture, AllUnsolvable) {
  const auto report = conjecture_report({0, 2, 0, 4, 4}, 1);
  EXPECT_TRUE(report.all_unsolvable());
  EXPECT_FALSE(report.recurrence);
}

TEST(Conjecture, NinePlusN) {
  const auto report = conjecture_report({9, 2, 0, 24, 0}, 4);
  ASSERT_TRUE(report.gf);
  std::vector<BigInt> terms;
  for (const auto& t : report.terms) terms.push_back(t.count);
  EXPECT_EQ(series_coefficients(*report.gf, terms.size()), terms);
  EXPECT_EQ(report.gf->denominator, std::vector<BigInt>(fixtures::kReferenceDenominator.begin(),
                                                        fixtures::kReferenceDenominator.end()));
  EXPECT_EQ(report.gf->numerator, std::vector<BigInt>(fixtures::kReferenceNumerator.begin(),
                                                      fixtures::kReferenceNumerator.end()));
  EXPECT_GT(terms[11], BigInt(std::numeric_limits<std::int64_t>::max()));
}
