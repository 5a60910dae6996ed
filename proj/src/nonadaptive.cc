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

#include "adarec/nonadaptive.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace adarec {

LinearFunctional linsketch_row(std::size_t m, std::size_t row,
                               const RngStream& rng) {
  RngStream row_rng = rng.child("linsketch-row", row);
  IndexSet support(m);
  std::iota(support.begin(), support.end(), Index{0});
  std::vector<double> coef(m);
  for (double& c : coef) c = row_rng.gaussian();
  return LinearFunctional(std::move(support), std::move(coef));
}

std::vector<LinearFunctional> linsketch_functionals(std::size_t m,
                                                    std::size_t n,
                                                    const RngStream& rng) {
  std::vector<LinearFunctional> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rows.push_back(linsketch_row(m, i, rng));
  return rows;
}

Vector linsketch(MeasurementOracle& oracle, std::size_t n,
                 const RngStream& rng) {
  require(n >= 1, "linsketch: need n >= 1");
  const std::size_t m = oracle.dimension();
  Vector acc(m, 0.0);
  // Rows are regenerated one at a time; each depends only on (rng, i).
  for (std::size_t i = 0; i < n; ++i) {
    const LinearFunctional row = linsketch_row(m, i, rng);
    const double y = oracle.measure(row);
    const auto& c = row.coefficients();
    for (std::size_t j = 0; j < m; ++j) acc[j] += y * c[j];
  }
  const double scale = 1.0 / static_cast<double>(n);
  for (double& v : acc) v *= scale;
  return acc;
}

double linsketch_uniform_bound(std::size_t m, std::size_t n, double p) {
  require(m >= 2 && n >= 1, "linsketch_uniform_bound: need m >= 2, n >= 1");
  require(p >= 2.0, "linsketch_uniform_bound: need p >= 2");
  const double md = static_cast<double>(m);
  const double factor = std::isinf(p) ? md : std::pow(md, 1.0 - 2.0 / p);
  return 2.0 * std::sqrt(2.0 * factor * std::log(md) / static_cast<double>(n));
}

CountSketchParams countsketch_params(int L, std::size_t m) {
  require(L >= 0 && L <= 58, "countsketch_params: need 0 <= L <= 58");
  require(m >= 1, "countsketch_params: need m >= 1");
  const double floor_r =
      std::max(5.0, 2.0 + 3.0 * std::log2(static_cast<double>(m)));
  auto r = static_cast<int>(ceil_to_count(floor_r));
  if (r % 2 == 0) ++r;
  return {r, std::uint64_t{1} << (4 + L)};
}

CountSketchDesign CountSketchDesign::draw(std::size_t m, int R,
                                          std::uint64_t G,
                                          const RngStream& rng) {
  require(m >= 1, "countsketch: need m >= 1");
  require(R >= 1 && R % 2 == 1, "countsketch: R must be odd and >= 1");
  require(G >= 1, "countsketch: need G >= 1");
  CountSketchDesign d;
  d.m_ = m;
  d.R_ = R;
  d.G_ = G;
  d.groups_.resize(static_cast<std::size_t>(R) * m);
  d.signs_.resize(static_cast<std::size_t>(R) * m);
  for (int r = 0; r < R; ++r) {
    RngStream rep = rng.child("countsketch-rep", static_cast<std::uint64_t>(r));
    for (std::size_t i = 0; i < m; ++i) {
      d.groups_[r * m + i] = rep.uniform_below(G);
      d.signs_[r * m + i] = rep.rademacher();
    }
  }
  return d;
}

std::vector<LinearFunctional> CountSketchDesign::functionals() const {
  std::vector<LinearFunctional> out;
  out.reserve(static_cast<std::size_t>(R_) * G_);
  std::vector<IndexSet> support(G_);
  std::vector<std::vector<double>> coef(G_);
  for (int r = 0; r < R_; ++r) {
    for (auto& s : support) s.clear();
    for (auto& c : coef) c.clear();
    for (std::size_t i = 0; i < m_; ++i) {
      const std::uint64_t g = group(r, i);
      support[g].push_back(i);
      coef[g].push_back(sign(r, i));
    }
    for (std::uint64_t g = 0; g < G_; ++g) {
      out.emplace_back(support[g], coef[g]);
    }
  }
  return out;
}

CountSketchState::CountSketchState(CountSketchDesign design,
                                   std::vector<double> measurements)
    : design_(std::move(design)), y_(std::move(measurements)) {
  if (y_.size() != static_cast<std::size_t>(design_.repetitions()) *
                       design_.groups()) {
    throw DimensionError("CountSketchState: measurement count");
  }
}

double CountSketchState::estimate(int r, Index i) const {
  return design_.sign(r, i) * measurement(r, design_.group(r, i));
}

Vector CountSketchState::median_estimate() const {
  const std::size_t m = design_.dimension();
  const int R = design_.repetitions();
  Vector z(m);
  std::vector<double> column(R);
  for (std::size_t i = 0; i < m; ++i) {
    for (int r = 0; r < R; ++r) column[r] = estimate(r, i);
    auto mid = column.begin() + R / 2;
    std::nth_element(column.begin(), mid, column.end());
    z[i] = *mid;
  }
  return z;
}

CountSketchState countsketch_measure(MeasurementOracle& oracle, int R,
                                     std::uint64_t G, const RngStream& rng) {
  CountSketchDesign design =
      CountSketchDesign::draw(oracle.dimension(), R, G, rng);
  const std::vector<LinearFunctional> fs = design.functionals();
  std::vector<double> y;
  y.reserve(fs.size());
  for (const auto& f : fs) y.push_back(oracle.measure(f));
  return CountSketchState(std::move(design), std::move(y));
}

Vector countsketch(MeasurementOracle& oracle, int R, std::uint64_t G,
                   const RngStream& rng) {
  return countsketch_measure(oracle, R, G, rng).median_estimate();
}

std::size_t denoise_k(double eps, double p, std::size_t m) {
  require(eps > 0.0, "denoise: need eps > 0");
  require(p >= 1.0 && std::isfinite(p), "denoise: need 1 <= p < inf");
  const double k = std::pow(eps, -p);
  if (!(k < static_cast<double>(m))) return m;
  return static_cast<std::size_t>(floor_to_count(k));
}

Vector keep_largest(const Vector& z, std::size_t k) {
  if (k >= z.size()) return z;
  std::vector<Index> order(z.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::partial_sort(order.begin(), order.begin() + k, order.end(),
                    [&](Index a, Index b) {
                      const double fa = std::abs(z[a]);
                      const double fb = std::abs(z[b]);
                      return fa != fb ? fa > fb : a < b;
                    });
  Vector w(z.size(), 0.0);
  for (std::size_t t = 0; t < k; ++t) w[order[t]] = z[order[t]];
  return w;
}

Vector denoise(const Vector& z, double eps, double p) {
  return keep_largest(z, denoise_k(eps, p, z.size()));
}

Vector denoised_countsketch(MeasurementOracle& oracle, int L, double p,
                            const RngStream& rng) {
  const CountSketchParams params = countsketch_params(L, oracle.dimension());
  const Vector z = countsketch(oracle, params.R, params.G, rng);
  return denoise(z, std::exp2(-L / p), p);
}

double linsketch_denoise_eps(std::size_t m, std::size_t n, double p) {
  require(m >= 1 && n >= 1, "linsketch_denoise_eps: need m, n >= 1");
  require(p >= 1.0 && std::isfinite(p), "linsketch_denoise_eps: need p >= 1");
  const double md = static_cast<double>(m);
  return std::sqrt(std::pow(md, 1.0 - 2.0 / p) * std::log(md) /
                   static_cast<double>(n));
}

Vector denoised_linsketch(MeasurementOracle& oracle, std::size_t n, double p,
                          const RngStream& rng) {
  const std::size_t m = oracle.dimension();
  const double eps = linsketch_denoise_eps(m, n, p);
  const std::size_t k = eps == 0.0 ? m : denoise_k(eps, p, m);
  if (k == 0) return Vector(m, 0.0);
  return keep_largest(linsketch(oracle, n, rng), k);
}

}  // namespace adarec
