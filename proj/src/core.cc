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

#include "adarec/core.h"

#include <algorithm>
#include <cmath>
#include <iterator>

namespace adarec {

double lp_norm(std::span<const double> v, double p) {
  if (!(p >= 1.0)) throw ParameterError("lp_norm: p must be >= 1");
  if (std::isinf(p)) {
    double best = 0.0;
    for (double x : v) best = std::max(best, std::abs(x));
    return best;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
  }
  // Scale by the max entry so large p neither overflows nor underflows.
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  if (p == 2.0) {
    for (double x : v) {
      const double t = x / scale;
      s += t * t;
    }
    return scale * std::sqrt(s);
  }
  for (double x : v) s += std::pow(std::abs(x) / scale, p);
  return scale * std::pow(s, 1.0 / p);
}

double lp_norm_pow(std::span<const double> v, double q) {
  if (!(q >= 1.0) || std::isinf(q)) {
    throw ParameterError("lp_norm_pow: q must be finite and >= 1");
  }
  double s = 0.0;
  if (q == 2.0) {
    for (double x : v) s += x * x;
  } else {
    for (double x : v) s += std::pow(std::abs(x), q);
  }
  return s;
}

Vector restrict_to(std::span<const double> v, std::span<const Index> support) {
  Vector out(v.size(), 0.0);
  for (Index j : support) {
    if (j >= v.size()) throw DimensionError("restrict_to: index out of range");
    out[j] = v[j];
  }
  return out;
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

namespace {

constexpr double kSnapTolerance = 1e-12;
constexpr double kMaxCount = 9.2e18;

bool near_integer(double x, double* rounded) {
  *rounded = std::round(x);
  return std::abs(x - *rounded) <= kSnapTolerance * std::max(1.0, std::abs(x));
}

}  // namespace

std::uint64_t ceil_to_count(double x) {
  if (!std::isfinite(x) || x > kMaxCount) {
    throw ParameterError("ceil_to_count: value not representable");
  }
  if (x <= 0.0) return 0;
  double r;
  const double c = near_integer(x, &r) ? r : std::ceil(x);
  return static_cast<std::uint64_t>(c);
}

std::uint64_t floor_to_count(double x) {
  if (!std::isfinite(x) || x > kMaxCount) {
    throw ParameterError("floor_to_count: value not representable");
  }
  if (x <= 0.0) return 0;
  double r;
  const double f = near_integer(x, &r) ? r : std::floor(x);
  return static_cast<std::uint64_t>(f);
}

}  // namespace adarec
