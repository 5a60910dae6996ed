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

#include "adarec/hashing.h"
#include "adarec/precondition.h"
#include "adarec/spotting.h"

namespace adarec {
namespace {

constexpr double kBasicDelta0 = 0.25;
constexpr double kPrecondDelta0 = 1.0 / 6.0;
constexpr double kPrecondDelta1 = 0.2;

}  // namespace

std::string_view to_string(Variant v) {
  return v == Variant::kBasic ? "basic" : "precond";
}

Variant parse_variant(std::string_view name) {
  if (name == "basic") return Variant::kBasic;
  if (name == "precond" || name == "preconditioned") {
    return Variant::kPreconditioned;
  }
  throw ParameterError("unknown variant '" + std::string(name) + "'");
}

double variant_delta2(Variant v) {
  return v == Variant::kBasic ? 1.0 / 3.0 : 0.25;
}

std::uint64_t variant_precond_k() {
  return precond_k_for(hh_constant_spot(variant_delta2(Variant::kPreconditioned)),
                       kPrecondDelta1);
}

std::uint64_t discover_D_basic(double p, double eps, std::size_t m) {
  return hash_size_for(p, eps, kBasicDelta0,
                       hh_constant_spot(variant_delta2(Variant::kBasic)), m);
}

std::uint64_t discover_D_precond(double p, double eps, std::size_t m) {
  // Hashing only has to establish the mild sqrt(5) condition.
  return hash_size_for(p, eps, kPrecondDelta0, std::sqrt(5.0), m);
}

DiscoverConfig DiscoverConfig::for_buckets(Variant variant, std::size_t m,
                                           std::uint64_t buckets) {
  require(m >= 1, "discover: need m >= 1");
  require(buckets >= 1 && buckets <= m, "discover: need 1 <= D <= m");
  DiscoverConfig cfg;
  cfg.variant = variant;
  cfg.m = m;
  cfg.buckets = buckets;
  cfg.delta2 = variant_delta2(variant);
  const std::uint64_t largest = (m + buckets - 1) / buckets;
  cfg.k_star = k_star_for(static_cast<double>(largest));
  cfg.precond_k =
      variant == Variant::kPreconditioned ? variant_precond_k() : 0;
  return cfg;
}

DiscoverConfig DiscoverConfig::for_sensitivity(Variant variant, double p,
                                               double eps, std::size_t m) {
  const std::uint64_t d = variant == Variant::kBasic
                              ? discover_D_basic(p, eps, m)
                              : discover_D_precond(p, eps, m);
  return for_buckets(variant, m, d);
}

std::uint64_t DiscoverConfig::cost_cap() const {
  const std::uint64_t per_spot = 2 * (static_cast<std::uint64_t>(k_star) + 1);
  return buckets * (precond_k + per_spot);
}

DiscoverResult discover(MeasurementOracle& oracle, const DiscoverConfig& cfg,
                        RngStream& rng) {
  if (cfg.m != oracle.dimension()) {
    throw DimensionError("discover: config dimension differs from oracle");
  }
  RngStream hash_rng = rng.child("hash");
  const BucketPartition partition(equi_hash(cfg.m, cfg.buckets, hash_rng));
  const SpotParams spot_params{cfg.delta2, cfg.k_star};

  DiscoverResult result;
  for (std::uint64_t d = 0; d < partition.size(); ++d) {
    const IndexSet& bucket = partition.bucket(d);
    if (bucket.empty()) continue;
    IndexSet candidates;
    std::span<const Index> spot_input = bucket;
    if (cfg.variant == Variant::kPreconditioned) {
      RngStream precond_rng = rng.child("precond", d);
      const std::uint64_t before = oracle.cost();
      candidates = precond(oracle, bucket, cfg.precond_k, precond_rng);
      result.precond_cost += oracle.cost() - before;
      spot_input = candidates;
    }
    RngStream spot_rng = rng.child("spot", d);
    const std::uint64_t before = oracle.cost();
    if (auto j = spot(oracle, spot_input, spot_params, spot_rng)) {
      result.found.push_back(*j);
    }
    result.spot_cost += oracle.cost() - before;
  }
  std::sort(result.found.begin(), result.found.end());
  return result;
}

}  // namespace adarec
