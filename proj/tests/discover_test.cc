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

#include "adarec/discover.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "adarec/core.h"
#include "adarec/oracle.h"
#include "adarec/rng.h"
#include "adarec/spotting.h"
#include "gtest/gtest.h"

namespace adarec {
namespace {

constexpr std::size_t kHuge = std::size_t{1} << 60;

TEST(DiscoverSizeTest, BasicExamples) {
  const double g = 3075 * std::sqrt(2 * std::log(48.0));
  EXPECT_EQ(discover_D_basic(1, 0.1, kHuge), 342250u);
  EXPECT_EQ(discover_D_basic(1, 0.1, kHuge),
            static_cast<std::uint64_t>(std::ceil(40 * g)));
  EXPECT_EQ(discover_D_basic(2, 0.5, kHuge),
            static_cast<std::uint64_t>(std::ceil(16 * g * g)));
  EXPECT_NEAR(static_cast<double>(discover_D_basic(2, 0.5, kHuge)), 1.171e9, 0.001e9);
  EXPECT_EQ(discover_D_basic(2, 0.5, 1 << 20), std::uint64_t{1} << 20);
  // p > 2 regime: 75 645 000 log 48 m^(1/2) eps^-2, capped at m.
  const std::size_t m = std::size_t{1} << 62;
  const double want = 75645000.0 * std::log(48.0) * std::exp2(31) * 4;
  EXPECT_NEAR(static_cast<double>(discover_D_basic(4, 0.5, m)), want, want * 1e-12);
  EXPECT_EQ(discover_D_basic(4, 0.5, 1 << 20), std::uint64_t{1} << 20);
}

TEST(DiscoverSizeTest, PreconditionedExamples) {
  EXPECT_EQ(discover_D_precond(2, 0.1, kHuge), 3000u);
  EXPECT_EQ(discover_D_precond(1, 0.5, kHuge), 27u);
  EXPECT_EQ(discover_D_precond(1, 1 - 1e-9, kHuge), 14u);
  // p > 2 uses m^(1-2/p): 256 * 30 * 4.
  EXPECT_EQ(discover_D_precond(4, 0.5, 1 << 16), 30720u);
  EXPECT_THROW(discover_D_precond(2, 1.5, kHuge), ParameterError);
}

TEST(DiscoverConfigTest, Derived) {
  EXPECT_EQ(variant_precond_k(), 701u);
  const DiscoverConfig basic = DiscoverConfig::for_sensitivity(Variant::kBasic, 1, 0.5, 1 << 20);
  EXPECT_EQ(basic.delta2, 1.0 / 3.0);
  EXPECT_EQ(basic.precond_k, 0u);
  EXPECT_EQ(basic.buckets, discover_D_basic(1, 0.5, 1 << 20));
  EXPECT_EQ(basic.k_star, k_star_for(std::ceil((1 << 20) / double(basic.buckets))));
  EXPECT_EQ(basic.cost_cap(), basic.buckets * 2 * (basic.k_star + 1));

  const DiscoverConfig pre = DiscoverConfig::for_sensitivity(Variant::kPreconditioned, 1, 0.5, 1 << 20);
  EXPECT_EQ(pre.delta2, 0.25);
  EXPECT_EQ(pre.precond_k, 701u);
  EXPECT_EQ(pre.buckets, 27u);
  // ceil(2^20 / 27) = 38837 needs depth 6.
  EXPECT_EQ(pre.k_star, 6);
  EXPECT_EQ(pre.cost_cap(), 27u * (703 + 2 * 6));

  const DiscoverConfig d60 = DiscoverConfig::for_buckets(Variant::kPreconditioned, 60 * 4096, 60);
  EXPECT_EQ(d60.k_star, 4);
  EXPECT_EQ(d60.cost_cap(), 42660u);
  EXPECT_THROW(DiscoverConfig::for_buckets(Variant::kBasic, 10, 11), ParameterError);
}

TEST(VariantTest, Names) {
  EXPECT_EQ(parse_variant("basic"), Variant::kBasic);
  EXPECT_EQ(parse_variant("precond"), Variant::kPreconditioned);
  EXPECT_EQ(to_string(Variant::kBasic), "basic");
  EXPECT_EQ(to_string(Variant::kPreconditioned), "precond");
  EXPECT_THROW(parse_variant("fast"), ParameterError);
}

TEST(DiscoverTest, OneSparseAlwaysFound) {
  RngStream rng(1, "discover-1sparse");
  const std::size_t m = 4096;
  for (Variant v : {Variant::kBasic, Variant::kPreconditioned}) {
    const DiscoverConfig cfg = DiscoverConfig::for_buckets(v, m, 16);
    for (int t = 0; t < 1000; ++t) {
      Vector x(m, 0.0);
      const Index j = rng.uniform_below(m);
      x[j] = rng.gaussian();
      MeasurementOracle o(x);
      const DiscoverResult r = discover(o, cfg, rng);
      ASSERT_TRUE(std::binary_search(r.found.begin(), r.found.end(), j));
    }
  }
}

TEST(DiscoverTest, ZeroVectorStaysInRange) {
  RngStream rng(2, "discover-zero");
  const std::size_t m = 500;
  for (Variant v : {Variant::kBasic, Variant::kPreconditioned}) {
    const DiscoverConfig cfg = DiscoverConfig::for_buckets(v, m, 50);
    for (int t = 0; t < 50; ++t) {
      MeasurementOracle o(Vector(m, 0.0));
      const DiscoverResult r = discover(o, cfg, rng);
      ASSERT_LE(r.found.size(), cfg.buckets);
      for (Index j : r.found) ASSERT_LT(j, m);
    }
  }
}

TEST(DiscoverPropertyTest, CostCapAndCardinality) {
  RngStream rng(3, "discover-cap");
  for (int t = 0; t < 300; ++t) {
    const std::size_t m = 1 + rng.uniform_below(3000);
    const std::uint64_t D = 1 + rng.uniform_below(std::min<std::size_t>(m, 40));
    const Variant v = rng.uniform_below(2) ? Variant::kBasic : Variant::kPreconditioned;
    const DiscoverConfig cfg = DiscoverConfig::for_buckets(v, m, D);
    Vector x(m);
    for (double& e : x) e = rng.uniform_below(3) == 0 ? rng.gaussian() : 0.0;
    MeasurementOracle o(x);
    const DiscoverResult r = discover(o, cfg, rng);
    ASSERT_LE(o.cost(), cfg.cost_cap());
    ASSERT_EQ(o.cost(), r.precond_cost + r.spot_cost);
    ASSERT_LE(r.found.size(), D);
    ASSERT_TRUE(std::is_sorted(r.found.begin(), r.found.end()));
  }
}

TEST(DiscoverPropertyTest, OverhashingReadsEveryNonzero) {
  // With D = m every bucket is a singleton and costs nothing to spot.
  RngStream rng(4, "discover-overhash");
  const std::size_t m = 64;
  Vector x(m);
  for (double& e : x) e = rng.gaussian();
  MeasurementOracle o(x);
  const DiscoverResult r = discover(o, DiscoverConfig::for_buckets(Variant::kBasic, m, m), rng);
  EXPECT_EQ(r.found.size(), m);
  EXPECT_EQ(o.cost(), 0u);
}

TEST(DiscoverPropertyTest, SensitivityLevel) {
  RngStream rng(5, "discover-sens");
  const std::size_t m = 1 << 12;
  const int T = 2000;
  const DiscoverConfig cfg = DiscoverConfig::for_sensitivity(Variant::kPreconditioned, 1, 0.25, m);
  std::vector<int> hits(4, 0);
  for (int t = 0; t < T; ++t) {
    Vector x(m, 0.0);
    IndexSet spikes;
    while (spikes.size() < 4) {
      const Index j = rng.uniform_below(m);
      if (x[j] == 0.0) {
        x[j] = rng.rademacher() * 0.25;
        spikes.push_back(j);
      }
    }
    MeasurementOracle o(x);
    const DiscoverResult r = discover(o, cfg, rng);
    for (int s = 0; s < 4; ++s) {
      hits[s] += std::binary_search(r.found.begin(), r.found.end(), spikes[s]);
    }
  }
  for (int h : hits) EXPECT_GE(h / double(T), 0.5 - 3 * std::sqrt(0.25 / T));
}

TEST(DiscoverTest, StreamsAreDistinct) {
  const RngStream rng(6, "discover");
  const std::uint64_t keys[] = {rng.child("hash").key(), rng.child("precond", 0).key(),
                                rng.child("spot", 0).key(), rng.child("precond", 1).key(),
                                rng.child("spot", 1).key()};
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = a + 1; b < 5; ++b) EXPECT_NE(keys[a], keys[b]);
  }
}

}  // namespace
}  // namespace adarec
