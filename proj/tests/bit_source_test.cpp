#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "otfgraph/bit_source.hpp"

using otfgraph::BitSource;
using otfgraph::Flag;

namespace {

// |count - draws*p| <= 3 sigma of the binomial.
void expect_within_3_sigma(std::uint64_t count, std::uint64_t draws, double p) {
  const double mean = static_cast<double>(draws) * p;
  const double sigma = std::sqrt(static_cast<double>(draws) * p * (1 - p));
  EXPECT_LE(std::abs(static_cast<double>(count) - mean), 3 * sigma)
      << "count " << count << " expected " << mean;
}

}  // namespace

TEST(BitSource, SameSeedSameStream) {
  BitSource a(42), b(42), c(43);
  std::vector<std::uint64_t> xa, xb, xc;
  for (int i = 0; i < 200; ++i) {
    xa.push_back(a.uniform_int(1000 + i));
    xb.push_back(b.uniform_int(1000 + i));
    xc.push_back(c.uniform_int(1000 + i));
  }
  EXPECT_EQ(xa, xb);
  EXPECT_NE(xa, xc);
  EXPECT_EQ(a.bits_consumed(), b.bits_consumed());
}

TEST(BitSource, FreshSourceHasConsumedNothing) {
  BitSource s(7);
  EXPECT_EQ(s.bits_consumed(), 0u);
  EXPECT_EQ(s.seed(), 7u);
}

TEST(BitSource, BitsAreChargedExactly) {
  BitSource s(1);
  s.bit();
  EXPECT_EQ(s.bits_consumed(), 1u);
  s.bits(13);
  EXPECT_EQ(s.bits_consumed(), 14u);
  s.bits(64);
  EXPECT_EQ(s.bits_consumed(), 78u);
  s.bits(0);
  EXPECT_EQ(s.bits_consumed(), 78u);
  EXPECT_THROW(s.bits(65), std::invalid_argument);
}

TEST(BitSource, BitsMatchSingleBitsInOrder) {
  BitSource a(9), b(9);
  for (unsigned count : {1u, 7u, 64u, 3u, 60u, 33u}) {
    std::uint64_t expected = 0;
    for (unsigned i = 0; i < count; ++i) expected |= std::uint64_t{b.bit()} << i;
    EXPECT_EQ(a.bits(count), expected);
  }
}

TEST(UniformInt, OneCostsNothing) {
  BitSource s(3);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(s.uniform_int(1), 0u);
  EXPECT_EQ(s.bits_consumed(), 0u);
}

TEST(UniformInt, PowersOfTwoCostLog2Bits) {
  BitSource s(3);
  s.uniform_int(8);
  EXPECT_EQ(s.bits_consumed(), 3u);
  s.uniform_int(std::uint64_t{1} << 40);
  EXPECT_EQ(s.bits_consumed(), 43u);
}

TEST(UniformInt, ZeroRejected) {
  BitSource s(3);
  EXPECT_THROW(s.uniform_int(0), std::invalid_argument);
}

TEST(UniformInt, StaysInRange) {
  BitSource s(11);
  for (std::uint64_t m : {2ULL, 3ULL, 5ULL, 6ULL, 7ULL, 1000ULL, (1ULL << 62) + 1, ~0ULL}) {
    for (int i = 0; i < 200; ++i) EXPECT_LT(s.uniform_int(m), m);
  }
}

TEST(UniformInt, FairCoin) {
  BitSource s(5);
  const std::uint64_t draws = 1'000'000;
  std::uint64_t zeros = 0;
  for (std::uint64_t i = 0; i < draws; ++i) zeros += s.uniform_int(2) == 0;
  expect_within_3_sigma(zeros, draws, 0.5);
}

TEST(UniformInt, ThreeWayUniform) {
  BitSource s(6);
  const std::uint64_t draws = 1'000'000;
  std::uint64_t counts[3] = {0, 0, 0};
  for (std::uint64_t i = 0; i < draws; ++i) ++counts[s.uniform_int(3)];
  for (auto c : counts) expect_within_3_sigma(c, draws, 1.0 / 3.0);
}

TEST(UniformInt, ExpectedBitsNearLog2) {
  BitSource s(8);
  for (std::uint64_t m : {3ULL, 5ULL, 100ULL, 1'000'003ULL}) {
    const std::uint64_t before = s.bits_consumed();
    const int draws = 20000;
    for (int i = 0; i < draws; ++i) s.uniform_int(m);
    const double mean = static_cast<double>(s.bits_consumed() - before) / draws;
    EXPECT_LE(mean, std::ceil(std::log2(static_cast<double>(m))) + 2) << "m=" << m;
  }
}

TEST(UniformFlag, OneBitEachAndFair) {
  BitSource s(12), replay(12);
  const std::uint64_t draws = 1'000'000;
  std::uint64_t dirs = 0;
  for (std::uint64_t i = 0; i < draws; ++i) {
    const Flag f = s.uniform_flag();
    EXPECT_EQ(f, replay.uniform_flag());
    dirs += f == Flag::dir;
  }
  EXPECT_EQ(s.bits_consumed(), draws);
  expect_within_3_sigma(dirs, draws, 0.5);
}
