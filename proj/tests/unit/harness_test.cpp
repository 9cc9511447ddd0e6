#include "collatz/harness.hpp"

#include <gtest/gtest.h>

#include <mutex>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "collatz/classical.hpp"

using namespace collatz;

TEST(ScanRange, FirstTwoHundred) {
  const ScanSummary s = scan_range(Natural(1), Natural(201));
  EXPECT_EQ(s.verified, 200u);
  EXPECT_EQ(s.undecided, 0u);
  EXPECT_TRUE(s.failed.empty());
  EXPECT_EQ(s.scanned(), 200u);
}

TEST(ScanRange, SingleValue) {
  const ScanSummary s = scan_range(Natural(1), Natural(2));
  EXPECT_EQ(s.verified, 1u);
  ASSERT_TRUE(s.max_i_min);
  EXPECT_EQ(s.max_i_min->n, Natural(1));
  EXPECT_EQ(s.max_i_min->value, 0u);
  EXPECT_EQ(s.histogram, (std::map<std::uint64_t, std::uint64_t>{{0, 1}}));
}

TEST(ScanRange, ExtremaMatchWordOracle) {
  const ScanSummary s = scan_range(Natural(1), Natural(10001), {.workers = 2, .chunk_size = 333});
  std::uint64_t best_n = 1, best = 0;
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const std::uint64_t st = oracle::stopping_time(n);
    if (st > best) {
      best = st;
      best_n = n;
    }
  }
  ASSERT_TRUE(s.max_cardinality);
  EXPECT_EQ(s.max_cardinality->n, Natural(best_n));
  EXPECT_EQ(s.max_cardinality->value, best + 1);
  std::uint64_t total = 0;
  for (const auto& [i_min, count] : s.histogram) total += count;
  EXPECT_EQ(total, s.verified);
}

TEST(ScanRange, DeterministicAcrossWorkerCounts) {
  const ScanSummary one = scan_range(Natural(1), Natural(5001), {.workers = 1, .chunk_size = 97});
  for (std::size_t workers : {2u, 3u, 8u}) {
    const ScanSummary many =
        scan_range(Natural(1), Natural(5001), {.workers = workers, .chunk_size = 97});
    EXPECT_EQ(many, one) << workers;
  }
}

TEST(ScanRange, ProgressIsOrderedAndCoversRange) {
  std::vector<ChunkProgress> chunks;
  ScanOptions options;
  options.workers = 4;
  options.chunk_size = 100;
  options.on_chunk = [&](const ChunkProgress& c) { chunks.push_back(c); };
  scan_range(Natural(10), Natural(1005), options);
  ASSERT_EQ(chunks.size(), 10u);
  EXPECT_EQ(chunks.front().lo, Natural(10));
  EXPECT_EQ(chunks.back().hi, Natural(1005));
  for (std::size_t i = 1; i < chunks.size(); ++i) {
    EXPECT_EQ(chunks[i].lo, chunks[i - 1].hi);
  }
  std::uint64_t ok = 0;
  for (const auto& c : chunks) ok += c.ok;
  EXPECT_EQ(ok, 995u);
}

TEST(ScanRange, ResumeSkipsLowerValues) {
  ScanOptions options;
  options.resume_from = Natural(500);
  const ScanSummary s = scan_range(Natural(1), Natural(1001), options);
  EXPECT_EQ(s.lo, Natural(500));
  EXPECT_EQ(s.verified, 501u);

  options.resume_from = Natural(5000);
  EXPECT_EQ(scan_range(Natural(1), Natural(1001), options).scanned(), 0u);
}

TEST(ScanRange, UndecidedCountedNotFatal) {
  // 27 needs 111 classical steps; a budget of 100 leaves it undecided.
  const ScanSummary s = scan_range(Natural(25), Natural(30), {.budget = 100});
  EXPECT_EQ(s.undecided, 1u);
  EXPECT_EQ(s.verified, 4u);
  EXPECT_EQ(s.scanned(), 5u);
}

TEST(ScanRange, MonotoneBudget) {
  const ScanSummary low = scan_range(Natural(1), Natural(2001), {.budget = 60});
  const ScanSummary high = scan_range(Natural(1), Natural(2001), {.budget = 200});
  EXPECT_GT(low.undecided, 0u);
  EXPECT_GE(high.verified, low.verified);
  EXPECT_EQ(high.undecided, 0u);
}

TEST(ScanRange, RejectsInvalidRange) {
  EXPECT_THROW(scan_range(Natural(5), Natural(5)), DomainError);
  EXPECT_THROW(scan_range(Natural(6), Natural(5)), DomainError);
  EXPECT_THROW(scan_range(Natural(1), Natural(5), {.chunk_size = 0}), DomainError);
}

TEST(PowersOfThree, SmallExponents) {
  const auto results = powers_of_three(10);
  ASSERT_EQ(results.size(), 10u);
  EXPECT_EQ(results[0].exponent, 1u);
  EXPECT_EQ(results[0].i_min, 2u);
  EXPECT_EQ(results[0].cardinality, 8u);
  EXPECT_EQ(results[1].cardinality, 20u);
  EXPECT_EQ(results[1].stopping_time, 19u);
  EXPECT_EQ(results[2].stopping_time, 111u);
  EXPECT_EQ(results[9].stopping_time, 135u);
  for (const auto& r : results) {
    EXPECT_TRUE(r.terminated);
    EXPECT_TRUE(r.reached_fixed_point);
    EXPECT_TRUE(r.cross_check_passed);
    EXPECT_EQ(*r.cardinality, total_stopping_time(power(3, r.exponent)) + 1);
  }
}

TEST(PowersOfThree, WorkersDoNotChangeResults) {
  EXPECT_EQ(powers_of_three(40, kDefaultMaxIters, 1), powers_of_three(40, kDefaultMaxIters, 3));
}

TEST(PowersOfThree, UndecidedReportedPerExponent) {
  const auto results = powers_of_three(3, 20);
  EXPECT_TRUE(results[0].terminated);
  EXPECT_TRUE(results[0].cross_check_passed);
  EXPECT_FALSE(results[2].terminated);  // 3^3 = 27
  EXPECT_FALSE(results[2].cardinality);
  EXPECT_THROW(powers_of_three(0), DomainError);
}
