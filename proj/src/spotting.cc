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

#include <cmath>
#include <limits>

#include "adarec/hashing.h"

namespace adarec {
namespace {

// Exponents beyond this saturate the schedule; no bucket is that large.
constexpr double kMaxScheduleLog2 = 62.0;

void check_delta2(double delta2) {
  require(delta2 > 0.0 && delta2 < 1.0, "spot: need delta2 in (0,1)");
}

}  // namespace

std::uint64_t spot_schedule(int k, double delta2) {
  require(k >= 0, "spot_schedule: need k >= 0");
  check_delta2(delta2);
  const double exponent = 8.0 * std::pow(9.0 / 8.0, k) + k + 2.0;
  if (exponent - std::log2(delta2) > kMaxScheduleLog2) {
    return std::uint64_t{1} << 62;
  }
  return ceil_to_count(std::exp2(exponent) / delta2);
}

int k_star_for(double ratio) {
  require(ratio >= 1.0 && std::isfinite(ratio), "k_star_for: need ratio >= 1");
  const double size = static_cast<double>(ceil_to_count(ratio));
  const double arg = std::log2(size) / 8.0;
  if (arg <= 1.0) return 0;
  const double depth = std::log(arg) / std::log(9.0 / 8.0);
  return static_cast<int>(ceil_to_count(depth));
}

double hh_constant_spot(double delta2) {
  check_delta2(delta2);
  return 1025.0 * std::sqrt(2.0 * std::log(16.0 / delta2)) / delta2;
}

IndexSet shrink(MeasurementOracle& oracle, std::span<const Index> candidates,
                std::span<const std::uint64_t> labels,
                std::uint64_t num_labels, RngStream& rng) {
  if (candidates.size() != labels.size()) {
    throw DimensionError("shrink: candidates/labels length mismatch");
  }
  if (candidates.empty()) return {};
  std::vector<double> plain(candidates.size());
  std::vector<double> weighted(candidates.size());
  for (std::size_t t = 0; t < candidates.size(); ++t) {
    const double g = rng.gaussian();
    plain[t] = g;
    weighted[t] = g * static_cast<double>(labels[t] + 1);
  }
  IndexSet support(candidates.begin(), candidates.end());
  const double y1 = oracle.measure(LinearFunctional(support, std::move(plain)));
  const double y2 =
      oracle.measure(LinearFunctional(std::move(support), std::move(weighted)));
  if (y1 == 0.0) return {};
  const double estimate = std::round(y2 / y1);
  if (!std::isfinite(estimate) || estimate < 1.0 ||
      estimate > static_cast<double>(num_labels)) {
    return {};
  }
  const auto label = static_cast<std::uint64_t>(estimate) - 1;
  IndexSet out;
  for (std::size_t t = 0; t < candidates.size(); ++t) {
    if (labels[t] == label) out.push_back(candidates[t]);
  }
  return out;
}

std::optional<Index> spot(MeasurementOracle& oracle,
                          std::span<const Index> bucket,
                          const SpotParams& params, RngStream& rng,
                          SpotTrace* trace) {
  check_delta2(params.delta2);
  require(params.k_star >= 0, "spot: need k_star >= 0");
  IndexSet current(bucket.begin(), bucket.end());
  if (trace != nullptr) trace->levels = {current};
  auto finish = [&]() -> std::optional<Index> {
    if (current.empty()) return std::nullopt;
    return current.front();
  };
  if (current.size() <= 1) return finish();

  const std::size_t m = oracle.dimension();
  std::vector<std::uint64_t> labels;
  for (int k = 0; k < params.k_star; ++k) {
    RngStream step = rng.child("shrink", static_cast<std::uint64_t>(k));
    const std::uint64_t d = spot_schedule(k, params.delta2);
    const PairwiseHash h = PairwiseHash::draw(m, d, step);
    labels.resize(current.size());
    for (std::size_t t = 0; t < current.size(); ++t) labels[t] = h(current[t]);
    current = shrink(oracle, current, labels, d, step);
    if (trace != nullptr) trace->levels.push_back(current);
    if (current.size() <= 1) return finish();
  }

  // An oversized final set has no guarantee; report failure instead.
  if (current.size() > spot_schedule(params.k_star, params.delta2)) {
    current.clear();
    if (trace != nullptr) trace->levels.push_back(current);
    return std::nullopt;
  }
  RngStream last =
      rng.child("shrink", static_cast<std::uint64_t>(params.k_star));
  labels.resize(current.size());
  for (std::size_t t = 0; t < current.size(); ++t) labels[t] = t;
  current = shrink(oracle, current, labels, labels.size(), last);
  if (trace != nullptr) trace->levels.push_back(current);
  return finish();
}

}  // namespace adarec
