#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "otfgraph/batch.hpp"
#include "otfgraph/stats.hpp"

using namespace otfgraph;

namespace {

double frequency_of_parent(Model model, Node n, Node j, Node p, std::uint64_t seeds) {
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < seeds; ++s) {
    BitSource source(s);
    hits += batch_sample(model, n, source).parent_of(j) == p;
  }
  return static_cast<double>(hits) / static_cast<double>(seeds);
}

}  // namespace

TEST(Batch, TwoNodesForced) {
  for (Model m : {Model::ba, Model::z, Model::rrt}) {
    BitSource source(1);
    EXPECT_EQ(batch_sample(m, 2, source).parent, (std::vector<Node>{1, 1}));
  }
}

TEST(Batch, ThirdNodeLaw) {
  const std::uint64_t seeds = 100'000;
  const double tol = 3 * std::sqrt(0.25 * 0.75 / seeds);
  EXPECT_NEAR(frequency_of_parent(Model::ba, 3, 3, 1, seeds), 0.75, tol);
  EXPECT_NEAR(frequency_of_parent(Model::z, 3, 3, 1, seeds), 0.75, tol);
  EXPECT_NEAR(frequency_of_parent(Model::rrt, 3, 3, 1, seeds), 0.5,
              3 * std::sqrt(0.25 / seeds));
}

TEST(Batch, SamplesAreValid) {
  BitSource source(3);
  for (Model m : {Model::ba, Model::z, Model::rrt}) {
    for (int i = 0; i < 50; ++i) EXPECT_NO_THROW(batch_sample(m, 200, source).validate());
  }
  EXPECT_THROW(batch_ba(0, source), std::invalid_argument);
}

TEST(Batch, ValidateRejectsBadVectors) {
  EXPECT_THROW((GraphSample{3, {1, 1}}.validate()), std::invalid_argument);
  EXPECT_THROW((GraphSample{3, {2, 1, 1}}.validate()), std::invalid_argument);
  EXPECT_THROW((GraphSample{3, {1, 1, 3}}.validate()), std::invalid_argument);
}

TEST(Batch, ParseModel) {
  EXPECT_EQ(parse_model("z"), Model::z);
  EXPECT_STREQ(to_string(Model::rrt), "rrt");
  EXPECT_THROW(parse_model("er"), std::invalid_argument);
}

TEST(EnumerateExact, BaThreeNodes) {
  const auto d = enumerate_exact(Model::ba, 3);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.at({1, 1, 1}), Rational(3, 4));
  EXPECT_EQ(d.at({1, 1, 2}), Rational(1, 4));
}

TEST(EnumerateExact, RrtFourNodes) {
  const auto d = enumerate_exact(Model::rrt, 4);
  ASSERT_EQ(d.size(), 6u);
  for (const auto& [key, p] : d) EXPECT_EQ(p, Rational(1, 6));
}

TEST(EnumerateExact, Normalized) {
  for (Model m : {Model::ba, Model::z, Model::rrt}) {
    for (Node n = 1; n <= 7; ++n) {
      Rational sum = 0;
      for (const auto& [key, p] : enumerate_exact(m, n)) sum += p;
      EXPECT_EQ(sum, 1);
    }
  }
}

TEST(EnumerateExact, BaEqualsZ) {
  for (Node n = 2; n <= 6; ++n) EXPECT_EQ(enumerate_exact(Model::ba, n), enumerate_exact(Model::z, n));
}

TEST(EnumerateExact, SizeLimit) {
  EXPECT_THROW(enumerate_exact(Model::ba, 9), std::invalid_argument);
  EXPECT_THROW(enumerate_exact(Model::ba, 0), std::invalid_argument);
}

TEST(EnumerateExact, BatchSamplersMatch) {
  for (Model m : {Model::ba, Model::z, Model::rrt}) {
    const auto exact = enumerate_exact(m, 5);
    Histogram h;
    BitSource source(static_cast<std::uint64_t>(m) + 10);
    for (int i = 0; i < 60'000; ++i) ++h[batch_sample(m, 5, source).parent];
    EXPECT_GT(chi_square(exact, h).p_value, 1e-3) << to_string(m);
  }
}
