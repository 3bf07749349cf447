// Copyright 2026 The Wallman Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "wallman/epsilon_net.hpp"
#include "wallman/random_models.hpp"

namespace wallman {
namespace {

TEST(MemberSet, BitOperations) {
  MemberSet a(130);
  a.set(0);
  a.set(64);
  a.set(129);
  EXPECT_EQ(a.count(), 3U);
  EXPECT_EQ(a.first(), 0U);
  MemberSet b(130);
  b.set(64);
  EXPECT_TRUE(b.subset_of(a));
  EXPECT_FALSE(a.subset_of(b));
  EXPECT_EQ((a & b).count(), 1U);
  a.subtract(b);
  EXPECT_EQ(a.count(), 2U);
  EXPECT_FALSE(a.test(64));
  EXPECT_TRUE(MemberSet(5).none());
  EXPECT_EQ(MemberSet(5).first(), 5U);
}

TEST(MinimumNet, SmallCases) {
  EXPECT_EQ(minimum_net({}).size(), 0U);
  const auto single = closeness_matrix(1, [](std::size_t, std::size_t) { return false; });
  EXPECT_EQ(minimum_net(single).net, std::vector<std::size_t>{0});

  // Two members at distance d: one ball suffices iff ε ≥ d (closed balls).
  const double d = 0.3;
  for (double eps : {0.1, 0.29, 0.3, 0.5}) {
    const auto m = closeness_matrix(2, [&](std::size_t, std::size_t) { return d <= eps; });
    EXPECT_EQ(minimum_net(m).size(), eps >= d ? 1U : 2U) << eps;
  }
}

TEST(MinimumNet, GreedyIsNotAlwaysOptimal) {
  // Path 0-1-2-3-4-5: greedy can pick a middle vertex first; two balls suffice.
  const auto m = closeness_matrix(6, [](std::size_t i, std::size_t j) {
    return (i > j ? i - j : j - i) <= 1;
  });
  const NetResult r = minimum_net(m);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.size(), 2U);
  EXPECT_TRUE(is_net(m, r.net));
  EXPECT_GE(r.greedy_size, r.size());
}

TEST(MinimumNet, ExhaustedBudgetKeepsAValidCover) {
  // Pairs {2k, 2k+1} plus a hub 0 next to every even member. Each odd member
  // needs a ball of its own pair, so 15 is optimal, but the counting bound at
  // the root is 2 and the search must descend.
  const auto m = closeness_matrix(30, [](std::size_t i, std::size_t j) {
    return i == j || (i ^ 1) == j || (i == 0 && j % 2 == 0) || (j == 0 && i % 2 == 0);
  });
  const NetResult r = minimum_net(m, 1);
  EXPECT_FALSE(r.exact);
  EXPECT_TRUE(is_net(m, r.net));
  EXPECT_EQ(r.greedy_size, 15U);
  EXPECT_EQ(r.size(), r.greedy_size);
  const NetResult full = minimum_net(m);
  EXPECT_TRUE(full.exact);
  EXPECT_EQ(full.size(), 15U);
  EXPECT_TRUE(is_net(m, full.net));
}

TEST(RestrictMatrix, Renumbers) {
  const auto m = closeness_matrix(4, [](std::size_t i, std::size_t j) { return i + j == 3; });
  const std::vector<std::size_t> members{1, 2};
  const auto r = restrict_matrix(m, members);
  ASSERT_EQ(r.size(), 2U);
  EXPECT_TRUE(r[0].test(1));
  EXPECT_TRUE(r[1].test(0));
}

// Randomized: exact search against exhaustive subset enumeration.
TEST(NetProperties, MatchesExhaustiveSearchInThePlane) {
  Rng rng(31, 8);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = static_cast<std::size_t>(rng.range(1, 14));
    std::vector<std::pair<int, int>> pts;
    for (std::size_t i = 0; i < n; ++i) pts.emplace_back(rng.range(0, 20), rng.range(0, 20));
    const int eps = rng.range(1, 8);
    const auto close = [&](std::size_t i, std::size_t j) {
      return std::max(std::abs(pts[i].first - pts[j].first),
                      std::abs(pts[i].second - pts[j].second)) <= eps;
    };
    const NetResult r = minimum_net(closeness_matrix(n, close));
    ASSERT_TRUE(r.exact);
    EXPECT_TRUE(is_net(closeness_matrix(n, close), r.net));
    EXPECT_EQ(r.size(), oracle::min_net_size(n, close)) << "round " << round;
    EXPECT_TRUE(std::is_sorted(r.net.begin(), r.net.end()));
  }
}

TEST(NetProperties, MatchesCoveringCountOnTheLine) {
  Rng rng(37, 9);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = static_cast<std::size_t>(rng.range(1, 60));
    std::vector<double> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(static_cast<double>(rng.range(0, 200)) / 8.0);
    const double eps = static_cast<double>(rng.range(1, 40)) / 8.0;
    const auto m = closeness_matrix(n, [&](std::size_t i, std::size_t j) {
      return std::abs(xs[i] - xs[j]) <= eps;
    });
    const NetResult r = minimum_net(m);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.size(), oracle::covering_count_1d(xs, eps)) << "round " << round;
  }
}

}  // namespace
}  // namespace wallman
