#include "listheap/disorder.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "listheap/error.hpp"
#include "oracles.hpp"
#include "sample.hpp"

using namespace lheap;

namespace {

std::vector<std::vector<std::int64_t>> keys_of(const Partition& p) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& part : p) {
    out.emplace_back();
    for (const auto& e : part) out.back().push_back(e.key);
  }
  return out;
}

}  // namespace

TEST(Disorder, SampleMeasures) {
  EXPECT_EQ(runs_count(sample::kKeys), 8u);
  EXPECT_EQ(sus_count(sample::kKeys), 7u);
  EXPECT_EQ(enc_count(sample::kKeys), 5u);
}

TEST(Disorder, SampleRunsPartition) {
  const auto p = runs_partition(sample::kKeys);
  EXPECT_EQ(keys_of(p), (std::vector<std::vector<std::int64_t>>{
                            {3}, {15, 14, 4}, {9}, {13, 5}, {12, 10, 6, 1}, {11, 8}, {16, 2}, {7}}));
  EXPECT_EQ(p[1].front().index, 1u);
}

TEST(Disorder, SampleEncroachingSet) {
  const auto e = enc_build(sample::kKeys);
  EXPECT_EQ(e.sequences, sample::kEaLists);
  EXPECT_TRUE(e.is_encroaching());
}

TEST(Disorder, RunsAreMaximalAndDecreasing) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto xs = oracle::random_unique(1 + rng() % 60, rng);
    const auto p = runs_partition(xs);
    std::size_t covered = 0;
    for (std::size_t r = 0; r < p.size(); ++r) {
      for (std::size_t j = 0; j < p[r].size(); ++j) {
        ASSERT_EQ(p[r][j].index, covered + j);
        if (j > 0) {
          ASSERT_GT(p[r][j - 1].key, p[r][j].key);
        }
      }
      covered += p[r].size();
      // The next run starts with an ascent.
      if (r + 1 < p.size()) {
        ASSERT_LT(p[r].back().key, p[r + 1].front().key);
      }
    }
    ASSERT_EQ(covered, xs.size());
  }
}

TEST(Disorder, SusMatchesExhaustiveSearch) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::int64_t> xs(n);
    std::iota(xs.begin(), xs.end(), 1);
    do {
      ASSERT_EQ(sus_count(xs), oracle::min_increasing_partition(xs));
    } while (std::next_permutation(xs.begin(), xs.end()));
  }
}

TEST(Disorder, SusMatchesLongestDecreasing) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const auto xs = oracle::random_unique(rng() % 300, rng);
    ASSERT_EQ(sus_count(xs), oracle::longest_decreasing(xs));
  }
}

TEST(Disorder, EncMatchesLinearScan) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 300; ++trial) {
    const auto xs = oracle::random_unique(rng() % 300, rng);
    const auto e = enc_build(xs);
    ASSERT_EQ(e.sequences, oracle::encroaching_by_scan(xs));
    ASSERT_TRUE(xs.empty() || e.is_encroaching());
  }
}

TEST(Disorder, MonotoneExtremes) {
  std::vector<std::int64_t> inc(50);
  std::iota(inc.begin(), inc.end(), 0);
  auto dec = inc;
  std::reverse(dec.begin(), dec.end());
  EXPECT_EQ(runs_count(inc), 50u);
  EXPECT_EQ(sus_count(inc), 1u);
  EXPECT_EQ(enc_count(inc), 1u);
  EXPECT_EQ(runs_count(dec), 1u);
  EXPECT_EQ(sus_count(dec), 50u);
  EXPECT_EQ(enc_count(dec), 1u);
  EXPECT_EQ(runs_count(std::vector<std::int64_t>{}), 0u);
}

TEST(Disorder, Melsort) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto xs = oracle::random_unique(rng() % 500, rng);
    auto expected = xs;
    std::sort(expected.begin(), expected.end());
    ASSERT_EQ(melsort(xs), expected);
  }
}

TEST(Disorder, RejectsDuplicates) {
  const std::vector<std::int64_t> xs{1, 2, 2};
  EXPECT_THROW(runs_count(xs), Error);
  EXPECT_THROW(sus_count(xs), Error);
  EXPECT_THROW(enc_count(xs), Error);
  EXPECT_THROW(melsort(xs), Error);
}

TEST(Disorder, EncroachingSetPredicate) {
  EXPECT_TRUE((EncroachingSet{{{1, 9}, {2, 8}}}.is_encroaching()));
  EXPECT_FALSE((EncroachingSet{{{1, 9}, {2, 10}}}.is_encroaching()));
  EXPECT_FALSE((EncroachingSet{{{2, 9}, {1, 8}}}.is_encroaching()));
  EXPECT_FALSE((EncroachingSet{{{3, 1}}}.is_encroaching()));
  EXPECT_FALSE((EncroachingSet{{{}}}.is_encroaching()));
}
