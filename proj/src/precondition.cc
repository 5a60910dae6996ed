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

#include "adarec/precondition.h"

#include <bit>
#include <cmath>
#include <utility>

namespace adarec {

std::uint64_t precond_k_for(double gamma, double delta1) {
  require(gamma > 1.0 && std::isfinite(gamma), "precond_k_for: need gamma > 1");
  require(delta1 > 0.0 && delta1 < 1.0, "precond_k_for: need delta1 in (0,1)");
  return ceil_to_count(36.0 * std::log((1.0 + 0.4 * gamma * gamma) / delta1));
}

std::size_t hamming(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw DimensionError("hamming: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]) ? 1 : 0;
  return d;
}

IndexSet precond(MeasurementOracle& oracle, std::span<const Index> bucket,
                 std::uint64_t k, RngStream& rng, PrecondDraw* draw) {
  require(k >= 1, "precond: need k >= 1");
  if (bucket.empty()) return {};
  SignMatrix signs = SignMatrix::random(k, bucket.size(), rng);
  const std::vector<double> y = oracle.measure_signs(bucket, signs);

  // Sign pattern in the matrix's bit layout: bit set means -1.
  std::vector<std::uint64_t> s_bits(signs.words_per_column(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (y[i] < 0.0) s_bits[i / 64] |= 1ULL << (i % 64);
  }

  IndexSet kept;
  for (std::size_t t = 0; t < bucket.size(); ++t) {
    const auto col = signs.column_bits(t);
    std::uint64_t dist = 0;
    for (std::size_t w = 0; w < col.size(); ++w) {
      dist += static_cast<std::uint64_t>(std::popcount(col[w] ^ s_bits[w]));
    }
    // d(a, -s) = k - d(a, s); compare against k/6 in integers.
    if (6 * dist <= k || 6 * (k - dist) <= k) kept.push_back(bucket[t]);
  }

  if (draw != nullptr) {
    draw->s.assign(k, 1);
    for (std::size_t i = 0; i < k; ++i) {
      if (y[i] < 0.0) draw->s[i] = -1;
    }
    draw->signs = std::move(signs);
  }
  return kept;
}

}  // namespace adarec
