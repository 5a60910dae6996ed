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

#include "adarec/families.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <unordered_set>
#include <vector>

namespace adarec {
namespace {

constexpr double kGeometricRatio = 0.8;
// Entries whose p-mass falls below this are dropped.
constexpr double kGeometricCutoff = 1e-30;

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::size_t parse_count(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  require(ec == std::errc() && ptr == s.data() + s.size() && v >= 1,
          "family: bad count '" + std::string(s) + "'");
  return v;
}

double parse_real(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  require(ec == std::errc() && ptr == s.data() + s.size(),
          "family: bad number '" + std::string(s) + "'");
  return v;
}

std::string format_real(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

// Places `magnitudes` (largest first) at random positions with random signs.
Vector scatter(const std::vector<double>& magnitudes, std::size_t m,
               bool random_signs, RngStream& rng) {
  IndexSet pos = random_subset(m, magnitudes.size(), rng);
  std::shuffle(pos.begin(), pos.end(), rng);
  Vector x(m, 0.0);
  for (std::size_t t = 0; t < magnitudes.size(); ++t) {
    const double s = random_signs ? rng.rademacher() : 1.0;
    x[pos[t]] = s * magnitudes[t];
  }
  return x;
}

}  // namespace

VectorFamily parse_family(std::string_view text) {
  const auto parts = split(text, ':');
  const std::string_view name = parts[0];
  VectorFamily f;
  auto want = [&](std::size_t lo, std::size_t hi) {
    require(parts.size() >= lo && parts.size() <= hi,
            "family: wrong number of fields in '" + std::string(text) + "'");
  };
  if (name == "spikes") {
    want(2, 2);
    f.kind = FamilyKind::kSpikes;
    f.k = parse_count(parts[1]);
  } else if (name == "geometric") {
    want(1, 1);
    f.kind = FamilyKind::kGeometric;
  } else if (name == "spike_plus_tail") {
    want(2, 3);
    f.kind = FamilyKind::kSpikePlusTail;
    f.k = parse_count(parts[1]);
    if (parts.size() == 3) f.tail_exponent = parse_real(parts[2]);
    require(f.tail_exponent > 0.0, "family: tail exponent must be > 0");
  } else if (name == "uniform_ball") {
    want(1, 1);
    f.kind = FamilyKind::kUniformBall;
  } else if (name == "zero") {
    want(1, 1);
    f.kind = FamilyKind::kZero;
  } else if (name == "denoise_adversarial") {
    want(2, 2);
    f.kind = FamilyKind::kDenoiseAdversarial;
    f.k = parse_count(parts[1]);
  } else {
    throw ParameterError("unknown family '" + std::string(text) + "'");
  }
  return f;
}

std::string to_string(const VectorFamily& f) {
  switch (f.kind) {
    case FamilyKind::kSpikes:
      return "spikes:" + std::to_string(f.k);
    case FamilyKind::kGeometric:
      return "geometric";
    case FamilyKind::kSpikePlusTail:
      return "spike_plus_tail:" + std::to_string(f.k) + ":" +
             format_real(f.tail_exponent);
    case FamilyKind::kUniformBall:
      return "uniform_ball";
    case FamilyKind::kZero:
      return "zero";
    case FamilyKind::kDenoiseAdversarial:
      return "denoise_adversarial:" + std::to_string(f.k);
  }
  return "?";
}

IndexSet random_subset(std::size_t m, std::size_t k, RngStream& rng) {
  require(k <= m, "random_subset: k > m");
  // Floyd's algorithm: O(k) draws regardless of m.
  std::unordered_set<Index> chosen;
  chosen.reserve(2 * k);
  for (std::size_t j = m - k; j < m; ++j) {
    const Index t = rng.uniform_below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  IndexSet out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

Vector gen_vector(const VectorFamily& f, std::size_t m, double p,
                  RngStream& rng) {
  require(m >= 1, "gen_vector: need m >= 1");
  require(p >= 1.0 && std::isfinite(p), "gen_vector: need 1 <= p < inf");
  switch (f.kind) {
    case FamilyKind::kZero:
      return Vector(m, 0.0);
    case FamilyKind::kSpikes: {
      require(f.k <= m, "spikes: k > m");
      const double a = std::pow(static_cast<double>(f.k), -1.0 / p);
      return scatter(std::vector<double>(f.k, a), m, true, rng);
    }
    case FamilyKind::kDenoiseAdversarial: {
      const std::size_t n = 2 * f.k + 1;
      require(n <= m, "denoise_adversarial: 2k+1 > m");
      const double a = std::pow(static_cast<double>(n), -1.0 / p);
      return scatter(std::vector<double>(n, a), m, false, rng);
    }
    case FamilyKind::kGeometric: {
      std::vector<double> mass;
      for (double w = 1.0; mass.size() < m && w >= kGeometricCutoff;
           w *= kGeometricRatio) {
        mass.push_back(w);
      }
      double total = 0.0;
      for (double w : mass) total += w;
      std::vector<double> mag(mass.size());
      for (std::size_t j = 0; j < mass.size(); ++j) {
        mag[j] = std::pow(mass[j] / total, 1.0 / p);
      }
      return scatter(mag, m, true, rng);
    }
    case FamilyKind::kSpikePlusTail: {
      require(f.k < m, "spike_plus_tail: need k < m");
      const std::size_t tail = m - f.k;
      std::vector<double> mag(m);
      const double spike = std::pow(0.5 / static_cast<double>(f.k), 1.0 / p);
      for (std::size_t j = 0; j < f.k; ++j) mag[j] = spike;
      double tail_mass = 0.0;
      for (std::size_t j = 0; j < tail; ++j) {
        tail_mass += std::pow(static_cast<double>(j + 1), -f.tail_exponent * p);
      }
      const double scale = std::pow(0.5 / tail_mass, 1.0 / p);
      for (std::size_t j = 0; j < tail; ++j) {
        mag[f.k + j] =
            scale * std::pow(static_cast<double>(j + 1), -f.tail_exponent);
      }
      return scatter(mag, m, true, rng);
    }
    case FamilyKind::kUniformBall: {
      // g_i with density proportional to exp(-|t|^p), W ~ Exp(1); then
      // g / (sum |g_i|^p + W)^(1/p) is uniform on the ball.
      std::gamma_distribution<double> gamma(1.0 / p, 1.0);
      std::exponential_distribution<double> expo(1.0);
      Vector x(m);
      double s = 0.0;
      for (double& v : x) {
        const double g = gamma(rng);
        s += g;
        v = rng.rademacher() * std::pow(g, 1.0 / p);
      }
      s += expo(rng);
      const double scale = std::pow(s, -1.0 / p);
      for (double& v : x) v *= scale;
      return x;
    }
  }
  throw ParameterError("gen_vector: unknown family");
}

}  // namespace adarec
