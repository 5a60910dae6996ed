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

#ifndef ADAREC_PRECONDITION_H_
#define ADAREC_PRECONDITION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "adarec/core.h"
#include "adarec/oracle.h"
#include "adarec/rng.h"

namespace adarec {

// Number of sign measurements that turns a sqrt(5) heavy hitter into a gamma
// heavy hitter with probability 1 - delta1:
//   ceil(36 * log((1 + 2/5 gamma^2) / delta1)).
std::uint64_t precond_k_for(double gamma, double delta1);

// Number of positions where two +-1 vectors differ.
std::size_t hamming(std::span<const int> a, std::span<const int> b);

// The random matrix and observed sign pattern of one precond() call.
struct PrecondDraw {
  SignMatrix signs;     // k x #bucket, column t belongs to bucket[t]
  std::vector<int> s;   // sgn(signs * x), with sgn(0) = +1
};

// Spends k Rademacher measurements on `bucket` and keeps the coordinates whose
// sign column is within Hamming distance k/6 of s or -s. An empty bucket
// returns empty at zero cost.
IndexSet precond(MeasurementOracle& oracle, std::span<const Index> bucket,
                 std::uint64_t k, RngStream& rng, PrecondDraw* draw = nullptr);

}  // namespace adarec

#endif  // ADAREC_PRECONDITION_H_
