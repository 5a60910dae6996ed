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

// Adaptive isolation of a single heavy hitter inside a bucket.
//
// spot() narrows a candidate set S_0 = J through a nested chain
// S_0 >= S_1 >= ... >= S_{k*} by repeated shrink steps. Each shrink step hashes
// the current set into D_k labels and spends two Gaussian measurements,
//   y1 = sum g_i x_i,   y2 = sum g_i (h_i + 1) x_i,
// whose ratio points at the label of a dominant coordinate. A final shrink
// with an injective labeling of S_{k*} yields at most one index.

#ifndef ADAREC_SPOTTING_H_
#define ADAREC_SPOTTING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "adarec/core.h"
#include "adarec/oracle.h"
#include "adarec/rng.h"

namespace adarec {

struct SpotParams {
  double delta2 = 1.0 / 3.0;  // failure probability in (0,1)
  int k_star = 0;             // iteration depth >= 0
};

// D_k = ceil(2^(8*(9/8)^k + k + 2) / delta2).
std::uint64_t spot_schedule(int k, double delta2);

// k* = max{0, ceil(log_{9/8}(log2(ceil(ratio)) / 8))}: the smallest depth
// whose schedule covers a set of ceil(ratio) elements.
int k_star_for(double ratio);

// (1/delta2) * 1025 * sqrt(2 log(16/delta2)): the heavy-hitter constant that
// spot needs to succeed with probability 1 - delta2.
double hh_constant_spot(double delta2);

// One shrink step on `candidates` with bucket labels `labels` in
// [0, num_labels). Uses exactly two measurements unless `candidates` is
// empty. Returns the candidates whose label is round(y2/y1) - 1, or an empty
// set when y1 == 0 or the estimate falls outside the label range.
IndexSet shrink(MeasurementOracle& oracle, std::span<const Index> candidates,
                std::span<const std::uint64_t> labels,
                std::uint64_t num_labels, RngStream& rng);

// Nested candidate sets recorded by spot(); levels[0] is the input set.
struct SpotTrace {
  std::vector<IndexSet> levels;
};

// Returns at most one index of `bucket` (sorted). Inputs of size <= 1 are
// returned unchanged at zero cost. Cost is at most 2 * (k_star + 1).
std::optional<Index> spot(MeasurementOracle& oracle,
                          std::span<const Index> bucket,
                          const SpotParams& params, RngStream& rng,
                          SpotTrace* trace = nullptr);

}  // namespace adarec

#endif  // ADAREC_SPOTTING_H_
