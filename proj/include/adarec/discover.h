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

// One detection pass: equi-hash [0, m) into D buckets, optionally
// precondition each bucket with sign measurements, then spot one candidate
// per bucket. With D chosen for sensitivity eps, every coordinate with
// |x_j| >= eps is returned with probability at least 1/2 whenever
// ||x||_p <= 1.

#ifndef ADAREC_DISCOVER_H_
#define ADAREC_DISCOVER_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "adarec/core.h"
#include "adarec/oracle.h"
#include "adarec/rng.h"

namespace adarec {

enum class Variant { kBasic, kPreconditioned };

std::string_view to_string(Variant v);
// Accepts "basic" and "precond"/"preconditioned".
Variant parse_variant(std::string_view name);

// Spot failure probability used by each variant.
double variant_delta2(Variant v);

// Sign measurements per preconditioned bucket: precond_k_for at the spot
// constant for delta2 = 1/4 and delta1 = 1/5 (evaluates to 701).
std::uint64_t variant_precond_k();

// Buckets for sensitivity eps without preconditioning:
// ceil(4 (3075 sqrt(2 log 48))^p eps^-p) for p <= 2,
// ceil(75645000 log 48 m^(1-2/p) eps^-2) for p > 2; capped at m.
std::uint64_t discover_D_basic(double p, double eps, std::size_t m);

// Buckets for sensitivity eps with preconditioning:
// ceil(6 5^(p/2) eps^-p) for p <= 2, ceil(30 m^(1-2/p) eps^-2) for p > 2;
// capped at m.
std::uint64_t discover_D_precond(double p, double eps, std::size_t m);

struct DiscoverConfig {
  Variant variant = Variant::kPreconditioned;
  std::size_t m = 0;
  std::uint64_t buckets = 0;     // D, 1 <= D <= m
  double delta2 = 0.25;
  int k_star = 0;                // from ceil(m / D)
  std::uint64_t precond_k = 0;   // 0 for the basic variant

  static DiscoverConfig for_buckets(Variant variant, std::size_t m,
                                    std::uint64_t buckets);
  static DiscoverConfig for_sensitivity(Variant variant, double p, double eps,
                                        std::size_t m);

  // D * 2(k*+1) basic; D * (precond_k + 2(k*+1)) preconditioned.
  std::uint64_t cost_cap() const;
};

struct DiscoverResult {
  IndexSet found;
  std::uint64_t precond_cost = 0;
  std::uint64_t spot_cost = 0;
};

DiscoverResult discover(MeasurementOracle& oracle, const DiscoverConfig& cfg,
                        RngStream& rng);

}  // namespace adarec

#endif  // ADAREC_DISCOVER_H_
