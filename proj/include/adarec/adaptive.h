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

// The multi-sensitivity algorithm A_{L,R}.
//
// Level l in 1..L runs R independent discover passes with D^(l) buckets,
// tuned so that each pass finds every coordinate above
// eps_l = 2^(-l/min(2,p)) with probability >= 1/2. The union K of all
// candidates is read directly and returned as x restricted to K. For
// ||x||_p <= 1 and R = ceil(q / min(2,p)) the q-moment error is at most
// 3^(1/q) 2^(-(1/min(2,p)) (1 - p/q) L).

#ifndef ADAREC_ADAPTIVE_H_
#define ADAREC_ADAPTIVE_H_

#include <cstdint>
#include <vector>

#include "adarec/core.h"
#include "adarec/discover.h"
#include "adarec/oracle.h"
#include "adarec/rng.h"

namespace adarec {

// C_p = 4 (3075 sqrt(2 log 48))^p (basic) or 6 5^(p/2) (preconditioned).
double level_constant(Variant variant, double p);

// D^(l) = ceil(C_p 2^l) for p <= 2, ceil(C_2 m^(1-2/p) 2^l) for p > 2;
// capped at m.
std::uint64_t level_D(int level, double p, std::size_t m, Variant variant);

// R = ceil(q / min(2,p)).
int repetitions(double p, double q);

// base_R * ceil(log2(1/delta)), for a high-confidence error guarantee.
int repetitions_for_confidence(int base_R, double delta);

struct LevelPlan {
  int level = 0;
  double sensitivity = 0.0;  // eps_l
  DiscoverConfig discover;
};

struct AdaptivePlan {
  std::size_t m = 0;
  double p = 1.0;
  double q = 2.0;
  int L = 0;  // 0 is the zero algorithm
  int R = 1;
  Variant variant = Variant::kPreconditioned;
  std::vector<LevelPlan> levels;

  // R <= 0 selects repetitions(p, q).
  static AdaptivePlan make(std::size_t m, double p, double q, int L,
                           Variant variant, int R = 0);

  // Sum over levels of R * (discover cap at that level).
  std::uint64_t discover_cap() const;
  // Bound on #K: min(m, sum over levels of R * D^(l)).
  std::uint64_t read_cap() const;
  std::uint64_t cost_cap() const { return discover_cap() + read_cap(); }

  // 3^(1/q) 2^(-(1/p')(1 - p/q) L), p' = min(2,p).
  double error_bound() const;
};

struct ApproximationResult {
  Vector output;   // x restricted to `support`
  IndexSet support;
  CostBreakdown cost;
};

// Runs the R * L discover passes on streams labeled by (r, l), then reads
// every candidate directly.
ApproximationResult approximate(MeasurementOracle& oracle,
                                const AdaptivePlan& plan, RngStream& rng);

// Smallest L whose error bound is <= eps.
int choose_L_for_eps(double eps, double p, double q);

// Largest L whose cost cap is <= n (0 selects the zero algorithm). The search
// stops at the first level whose bucket count reaches m, where every
// coordinate already sits in its own bucket.
int choose_L_for_budget(std::uint64_t n, std::size_t m, double p, double q,
                        Variant variant);

}  // namespace adarec

#endif  // ADAREC_ADAPTIVE_H_
