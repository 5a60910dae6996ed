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

// Non-adaptive baselines: the Gaussian linear sketch, count-sketch, and the
// top-k denoising step that turns their uniform error into lq error.
//
// Every measurement functional here is a function of the random stream and
// the parameters only; the *_functionals() builders expose the full list so
// callers can check that nothing depends on earlier measurement values.

#ifndef ADAREC_NONADAPTIVE_H_
#define ADAREC_NONADAPTIVE_H_

#include <cstdint>
#include <vector>

#include "adarec/core.h"
#include "adarec/oracle.h"
#include "adarec/rng.h"

namespace adarec {

// ---------------------------------------------------------------------------
// LinSketch: (1/n) N^T N x with N an n x m standard Gaussian matrix.

// Row i of N, drawn from its own child stream of `rng`.
LinearFunctional linsketch_row(std::size_t m, std::size_t row,
                               const RngStream& rng);
std::vector<LinearFunctional> linsketch_functionals(std::size_t m,
                                                    std::size_t n,
                                                    const RngStream& rng);

// Exactly n measurements.
Vector linsketch(MeasurementOracle& oracle, std::size_t n,
                 const RngStream& rng);

// 2 sqrt(2 m^(1-2/p) log m / n): the uniform error bound for ||x||_p <= 1,
// p >= 2, m >= 2.
double linsketch_uniform_bound(std::size_t m, std::size_t n, double p);

// ---------------------------------------------------------------------------
// CountSketch.

struct CountSketchParams {
  int R = 0;            // odd repetitions
  std::uint64_t G = 0;  // groups per repetition
};

// G = 2^(4+L); R the smallest odd number >= max{5, 2 + 3 log2 m}.
CountSketchParams countsketch_params(int L, std::size_t m);

// Hash vectors (i.i.d. uniform on [0, G)) and signs for R repetitions.
class CountSketchDesign {
 public:
  static CountSketchDesign draw(std::size_t m, int R, std::uint64_t G,
                                const RngStream& rng);

  std::size_t dimension() const { return m_; }
  int repetitions() const { return R_; }
  std::uint64_t groups() const { return G_; }
  std::uint64_t group(int r, Index i) const { return groups_[r * m_ + i]; }
  int sign(int r, Index i) const { return signs_[r * m_ + i]; }

  // The R * G functionals Y_{r,g} = sum_{i: H_i^r = g} sigma_ri x_i, ordered
  // by (r, g). Empty groups give functionals with empty support.
  std::vector<LinearFunctional> functionals() const;

 private:
  std::size_t m_ = 0;
  int R_ = 0;
  std::uint64_t G_ = 0;
  std::vector<std::uint64_t> groups_;
  std::vector<int> signs_;
};

// Measurements Y_{r,g} of one count-sketch run and the per-repetition
// estimates derived from them.
class CountSketchState {
 public:
  CountSketchState(CountSketchDesign design, std::vector<double> measurements);

  const CountSketchDesign& design() const { return design_; }
  double measurement(int r, std::uint64_t g) const {
    return y_[r * design_.groups() + g];
  }
  // sigma_ri * Y_{r, H_i^r}, an unbiased estimate of x_i.
  double estimate(int r, Index i) const;
  // Componentwise median over repetitions.
  Vector median_estimate() const;

 private:
  CountSketchDesign design_;
  std::vector<double> y_;
};

// All R * G functionals are fixed before the first measurement.
CountSketchState countsketch_measure(MeasurementOracle& oracle, int R,
                                     std::uint64_t G, const RngStream& rng);

// R odd; exactly R * G measurements.
Vector countsketch(MeasurementOracle& oracle, int R, std::uint64_t G,
                   const RngStream& rng);

// ---------------------------------------------------------------------------
// Denoising.

// min{floor(eps^-p), m}.
std::size_t denoise_k(double eps, double p, std::size_t m);

// Keeps the k largest-magnitude entries (ties to the smaller index).
Vector keep_largest(const Vector& z, std::size_t k);

Vector denoise(const Vector& z, double eps, double p);

// Count-sketch at level L followed by denoising with eps = 2^(-L/p), i.e.
// k = 2^L.
Vector denoised_countsketch(MeasurementOracle& oracle, int L, double p,
                            const RngStream& rng);

// eps = sqrt(m^(1-2/p) log m / n) for the linear sketch with n rows.
double linsketch_denoise_eps(std::size_t m, std::size_t n, double p);

// LinSketch with n rows followed by denoising at linsketch_denoise_eps. When
// that leaves k = 0 the zero vector is returned without measuring.
Vector denoised_linsketch(MeasurementOracle& oracle, std::size_t n, double p,
                          const RngStream& rng);

}  // namespace adarec

#endif  // ADAREC_NONADAPTIVE_H_
