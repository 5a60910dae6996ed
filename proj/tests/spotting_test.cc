// Copyright 2026 The adarec Authors.
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

#include "adarec/spotting.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "adarec/core.h"
#include "adarec/oracle.h"
#include "adarec/rng.h"
#include "gtest/gtest.h"

namespace adarec {
namespace {

IndexSet iota_set(std::size_t n) {
  IndexSet s(n);
  std::iota(s.begin(), s.end(), Index{0});
  return s;
}

// x_j = 1 and the rest of the bucket Gaussian with l2 norm `rest`.
Vector boundary_instance(std::size_t m, Index j, double rest, RngStream& rng) {
  Vector x(m);
  for (double& v : x) v = rng.gaussian();
  x[j] = 0.0;
  const double n = lp_norm(x, 2);
  for (double& v : x) v *= rest / n;
  x[j] = 1.0;
  return x;
}

TEST(ScheduleTest, Examples) {
  EXPECT_EQ(spot_schedule(0, 0.25), 4096u);
  EXPECT_EQ(spot_schedule(1, 0.25), 16384u);
  EXPECT_EQ(spot_schedule(0, 1.0 / 3.0), 3072u);
  EXPECT_THROW(spot_schedule(-1, 0.25), ParameterError);
  EXPECT_THROW(spot_schedule(0, 1.0), ParameterError);
}

TEST(ScheduleTest, AboveLowerBoundAndSaturates) {
  for (int k = 0; k < 12; ++k) {
    const double lower = std::exp2(8.0 * std::pow(9.0 / 8.0, k));
    EXPECT_GT(static_cast<double>(spot_schedule(k, 0.5)), lower) << k;
  }
  EXPECT_EQ(spot_schedule(40, 0.5), std::uint64_t{1} << 62);
}

TEST(KStarTest, Examples) {
  EXPECT_EQ(k_star_for(1), 0);
  EXPECT_EQ(k_star_for(256), 0);
  EXPECT_EQ(k_star_for(512), 1);
  EXPECT_EQ(k_star_for(65536), 6);
  EXPECT_THROW(k_star_for(0.5), ParameterError);
}

TEST(KStarTest, ScheduleCoversRatio) {
  for (double ratio : {1.0, 3.0, 300.0, 1e4, 1e6, 1e9}) {
    const int k = k_star_for(ratio);
    EXPECT_GE(std::exp2(8.0 * std::pow(9.0 / 8.0, k)), std::ceil(ratio));
  }
}

TEST(HeavyHitterConstantTest, Examples) {
  EXPECT_NEAR(hh_constant_spot(1.0 / 3.0), 8556.24, 0.01);
  EXPECT_NEAR(hh_constant_spot(0.25), 11824.62, 0.01);
  // 1025 sqrt(2 ln 16) = 2413.69...
  EXPECT_NEAR(hh_constant_spot(1.0 - 1e-9),
              1025 * std::sqrt(2 * std::log(16.0)), 0.01);
  EXPECT_NEAR(hh_constant_spot(1.0 - 1e-9), 2413.69, 0.01);
}

TEST(ShrinkTest, SingleCandidate) {
  MeasurementOracle o({0, 0, 0, 0, 2.5, 0});
  RngStream rng(1, "shrink");
  const IndexSet s{4};
  const std::vector<std::uint64_t> labels{2};
  EXPECT_EQ(shrink(o, s, labels, 3, rng), (IndexSet{4}));
  EXPECT_EQ(o.cost(), 2u);
}

TEST(ShrinkTest, ZeroInputFails) {
  MeasurementOracle o({0, 0, 0});
  RngStream rng(2, "shrink");
  const IndexSet s{0, 1, 2};
  const std::vector<std::uint64_t> labels{0, 1, 1};
  EXPECT_TRUE(shrink(o, s, labels, 2, rng).empty());
  EXPECT_EQ(o.cost(), 2u);
}

TEST(ShrinkTest, EmptyInputIsFree) {
  MeasurementOracle o({1, 2});
  RngStream rng(3, "shrink");
  EXPECT_TRUE(shrink(o, IndexSet{}, std::vector<std::uint64_t>{}, 2, rng).empty());
  EXPECT_EQ(o.cost(), 0u);
}

TEST(ShrinkTest, DominantSpike) {
  MeasurementOracle o({10, 0.01, -0.01});
  RngStream rng(4, "shrink");
  const IndexSet s{0, 1, 2};
  const std::vector<std::uint64_t> labels{0, 1, 1};
  const int T = 10000;
  int hits = 0;
  for (int t = 0; t < T; ++t) hits += shrink(o, s, labels, 2, rng) == IndexSet{0};
  EXPECT_GE(hits, 0.99 * T);
  EXPECT_EQ(o.cost(), 2u * T);
}

TEST(ShrinkTest, OneSparseReturnsItsLabelClass) {
  RngStream rng(5, "shrink");
  for (int t = 0; t < 500; ++t) {
    Vector x(40, 0.0);
    const Index j = rng.uniform_below(40);
    x[j] = rng.gaussian();
    MeasurementOracle o(x);
    const IndexSet s = iota_set(40);
    std::vector<std::uint64_t> labels(40);
    for (auto& l : labels) l = rng.uniform_below(7);
    IndexSet want;
    for (Index i = 0; i < 40; ++i) {
      if (labels[i] == labels[j]) want.push_back(i);
    }
    ASSERT_EQ(shrink(o, s, labels, 7, rng), want);
  }
}

TEST(SpotTest, SingletonIsFree) {
  MeasurementOracle o(Vector(8, 1.0));
  RngStream rng(6, "spot");
  const IndexSet j{5};
  EXPECT_EQ(spot(o, j, SpotParams{0.25, 3}, rng), std::optional<Index>(5));
  EXPECT_EQ(o.cost(), 0u);
  EXPECT_EQ(spot(o, IndexSet{}, SpotParams{0.25, 3}, rng), std::nullopt);
  EXPECT_EQ(o.cost(), 0u);
}

TEST(SpotTest, OneSparseExact) {
  RngStream rng(7, "spot-1sparse");
  const std::size_t m = 2048;
  const IndexSet all = iota_set(m);
  for (int k_star = 0; k_star <= 3; ++k_star) {
    for (int t = 0; t < 250; ++t) {
      Vector x(m, 0.0);
      const Index j = rng.uniform_below(m);
      x[j] = rng.gaussian();
      MeasurementOracle o(x);
      ASSERT_EQ(spot(o, all, SpotParams{1.0 / 3.0, k_star}, rng),
                std::optional<Index>(j));
    }
  }
}

TEST(SpotPropertyTest, CostCapNestingAndExactCost) {
  RngStream rng(8, "spot-props");
  for (int t = 0; t < 2000; ++t) {
    const std::size_t m = 2 + rng.uniform_below(3000);
    const int k_star = static_cast<int>(rng.uniform_below(7));
    Vector x(m);
    for (double& v : x) v = rng.gaussian() * (rng.uniform_below(4) == 0);
    MeasurementOracle o(x);
    SpotTrace trace;
    spot(o, iota_set(m), SpotParams{1.0 / 3.0, k_star}, rng, &trace);
    ASSERT_LE(o.cost(), 2u * (k_star + 1));
    for (std::size_t l = 1; l < trace.levels.size(); ++l) {
      ASSERT_TRUE(std::includes(trace.levels[l - 1].begin(),
                                trace.levels[l - 1].end(),
                                trace.levels[l].begin(), trace.levels[l].end()));
    }
    // Every recorded level after the first is one shrink, except the
    // empty level recorded when the final set is oversized.
    const std::size_t levels = trace.levels.size();
    const bool oversized =
        levels == static_cast<std::size_t>(k_star) + 2 &&
        trace.levels[k_star].size() > spot_schedule(k_star, 1.0 / 3.0);
    const std::uint64_t shrinks = levels - 1 - (oversized ? 1 : 0);
    ASSERT_EQ(o.cost(), 2 * shrinks);
    if (levels == static_cast<std::size_t>(k_star) + 2 && !oversized) {
      ASSERT_EQ(o.cost(), 2u * (k_star + 1));
    }
  }
}

TEST(SpotPropertyTest, HeavyHitterGuarantee) {
  const std::size_t m = 4096;
  const int T = 10000;
  for (double delta2 : {1.0 / 3.0, 0.25}) {
    RngStream rng(9, "spot-hhc");
    const int k_star = k_star_for(m);
    const double gamma = hh_constant_spot(delta2);
    const IndexSet all = iota_set(m);
    int hits = 0;
    for (int t = 0; t < T; ++t) {
      const Index j = rng.uniform_below(m);
      MeasurementOracle o(boundary_instance(m, j, 1.0 / gamma, rng));
      hits += spot(o, all, SpotParams{delta2, k_star}, rng) == std::optional<Index>(j);
    }
    EXPECT_GE(hits / double(T), 1 - delta2 - 3 * std::sqrt(delta2 / T)) << delta2;
  }
}

}  // namespace
}  // namespace adarec
