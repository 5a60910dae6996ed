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

// Test-vector families inside the unit lp ball.

#ifndef ADAREC_FAMILIES_H_
#define ADAREC_FAMILIES_H_

#include <string>
#include <string_view>

#include "adarec/core.h"
#include "adarec/rng.h"

namespace adarec {

enum class FamilyKind {
  kSpikes,              // k entries +-k^(-1/p) at random positions
  kGeometric,           // |x_(j)|^p proportional to 0.8^j, random positions
  kSpikePlusTail,       // k spikes carrying half the p-mass, dense j^-a tail
  kUniformBall,         // uniform on the unit lp ball
  kZero,
  kDenoiseAdversarial,  // 2k+1 entries (2k+1)^(-1/p)
};

struct VectorFamily {
  FamilyKind kind = FamilyKind::kSpikes;
  std::size_t k = 1;
  double tail_exponent = 1.0;  // spike_plus_tail only
};

// Accepts "spikes:K", "geometric", "spike_plus_tail:K[:A]", "uniform_ball",
// "zero", "denoise_adversarial:K".
VectorFamily parse_family(std::string_view text);
std::string to_string(const VectorFamily& family);

// A vector with ||x||_p <= 1. Throws ParameterError when the family does not
// fit in dimension m.
Vector gen_vector(const VectorFamily& family, std::size_t m, double p,
                  RngStream& rng);

// k distinct indices in [0, m), sorted.
IndexSet random_subset(std::size_t m, std::size_t k, RngStream& rng);

}  // namespace adarec

#endif  // ADAREC_FAMILIES_H_
