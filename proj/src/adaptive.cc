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

#include "adarec/adaptive.h"

#include <algorithm>
#include <cmath>

#include "adarec/spotting.h"

namespace adarec {
namespace {

void check_pq(double p, double q) {
  require(p >= 1.0 && std::isfinite(p), "need 1 <= p < inf");
  require(q > p && std::isfinite(q), "need p < q < inf");
}

double p_prime(double p) { return std::min(2.0, p); }

// Exponent rate (1/p')(1 - p/q) of the error bound in L.
double decay_rate(double p, double q) { return (1.0 - p / q) / p_prime(p); }

}  // namespace

double level_constant(Variant variant, double p) {
  require(p >= 1.0 && std::isfinite(p), "level_constant: need 1 <= p < inf");
  const double pc = p_prime(p);
  if (variant == Variant::kBasic) {
    return 4.0 * std::pow(hh_constant_spot(variant_delta2(Variant::kBasic)), pc);
  }
  return 6.0 * std::pow(5.0, pc / 2.0);
}

std::uint64_t level_D(int level, double p, std::size_t m, Variant variant) {
  require(level >= 1, "level_D: need l >= 1");
  require(m >= 1, "level_D: need m >= 1");
  double d = level_constant(variant, p) * std::exp2(level);
  if (p > 2.0) d *= std::pow(static_cast<double>(m), 1.0 - 2.0 / p);
  if (!(d < static_cast<double>(m))) return m;
  return std::min<std::uint64_t>(ceil_to_count(d), m);
}

int repetitions(double p, double q) {
  check_pq(p, q);
  return static_cast<int>(ceil_to_count(q / p_prime(p)));
}

int repetitions_for_confidence(int base_R, double delta) {
  require(base_R >= 1, "repetitions_for_confidence: need base_R >= 1");
  require(delta > 0.0 && delta < 1.0,
          "repetitions_for_confidence: need delta in (0,1)");
  return base_R * static_cast<int>(ceil_to_count(std::log2(1.0 / delta)));
}

AdaptivePlan AdaptivePlan::make(std::size_t m, double p, double q, int L,
                                Variant variant, int R) {
  check_pq(p, q);
  require(m >= 1, "AdaptivePlan: need m >= 1");
  require(L >= 0, "AdaptivePlan: need L >= 0");
  AdaptivePlan plan;
  plan.m = m;
  plan.p = p;
  plan.q = q;
  plan.L = L;
  plan.R = R > 0 ? R : repetitions(p, q);
  plan.variant = variant;
  for (int l = 1; l <= L; ++l) {
    LevelPlan level;
    level.level = l;
    level.sensitivity = std::exp2(-l / p_prime(p));
    level.discover =
        DiscoverConfig::for_buckets(variant, m, level_D(l, p, m, variant));
    plan.levels.push_back(level);
  }
  return plan;
}

std::uint64_t AdaptivePlan::discover_cap() const {
  std::uint64_t cap = 0;
  for (const auto& level : levels) {
    cap += static_cast<std::uint64_t>(R) * level.discover.cost_cap();
  }
  return cap;
}

std::uint64_t AdaptivePlan::read_cap() const {
  std::uint64_t total = 0;
  for (const auto& level : levels) {
    total += static_cast<std::uint64_t>(R) * level.discover.buckets;
  }
  return std::min<std::uint64_t>(total, m);
}

double AdaptivePlan::error_bound() const {
  return std::pow(3.0, 1.0 / q) * std::exp2(-decay_rate(p, q) * L);
}

ApproximationResult approximate(MeasurementOracle& oracle,
                                const AdaptivePlan& plan, RngStream& rng) {
  if (plan.m != oracle.dimension()) {
    throw DimensionError("approximate: plan dimension differs from oracle");
  }
  ApproximationResult result;
  for (const auto& level : plan.levels) {
    for (int r = 1; r <= plan.R; ++r) {
      const std::uint64_t label =
          (static_cast<std::uint64_t>(r) << 32) |
          static_cast<std::uint64_t>(level.level);
      RngStream pass_rng = rng.child("discover", label);
      DiscoverResult found = discover(oracle, level.discover, pass_rng);
      result.cost.precond += found.precond_cost;
      result.cost.spot += found.spot_cost;
      result.support = set_union(result.support, found.found);
    }
  }
  result.output.assign(plan.m, 0.0);
  for (Index j : result.support) result.output[j] = oracle.read_entry(j);
  result.cost.reads = result.support.size();
  return result;
}

int choose_L_for_eps(double eps, double p, double q) {
  check_pq(p, q);
  require(eps > 0.0 && eps < 1.0, "choose_L_for_eps: need eps in (0,1)");
  const double levels =
      std::log2(std::pow(3.0, 1.0 / q) / eps) / decay_rate(p, q);
  return static_cast<int>(ceil_to_count(levels));
}

int choose_L_for_budget(std::uint64_t n, std::size_t m, double p, double q,
                        Variant variant) {
  check_pq(p, q);
  require(m >= 1, "choose_L_for_budget: need m >= 1");
  int best = 0;
  for (int L = 1;; ++L) {
    const AdaptivePlan plan = AdaptivePlan::make(m, p, q, L, variant);
    if (plan.cost_cap() > n) break;
    best = L;
    if (plan.levels.back().discover.buckets >= m) break;
  }
  return best;
}

}  // namespace adarec
