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

#include "adarec/oracle.h"

#include <algorithm>
#include <cmath>
#include <utility>

namespace adarec {

LinearFunctional::LinearFunctional(IndexSet support,
                                   std::vector<double> coefficients)
    : support_(std::move(support)), coefficients_(std::move(coefficients)) {
  if (support_.size() != coefficients_.size()) {
    throw DimensionError("LinearFunctional: support/coefficient length");
  }
  for (std::size_t t = 0; t < support_.size(); ++t) {
    if (t > 0 && support_[t] <= support_[t - 1]) {
      throw ParameterError("LinearFunctional: support not strictly increasing");
    }
    if (!std::isfinite(coefficients_[t])) {
      throw ParameterError("LinearFunctional: non-finite coefficient");
    }
  }
}

LinearFunctional LinearFunctional::coordinate(Index j) {
  return LinearFunctional({j}, {1.0});
}

SignMatrix::SignMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      words_((rows + 63) / 64),
      bits_(words_ * cols, 0) {}

SignMatrix SignMatrix::random(std::size_t rows, std::size_t cols,
                              RngStream& rng) {
  SignMatrix a(rows, cols);
  const std::size_t tail = rows % 64;
  const std::uint64_t tail_mask = tail == 0 ? ~0ULL : ((1ULL << tail) - 1);
  FastBits bits(rng);
  for (std::size_t c = 0; c < cols; ++c) {
    std::uint64_t* col = a.bits_.data() + c * a.words_;
    for (std::size_t w = 0; w < a.words_; ++w) col[w] = bits();
    if (a.words_ > 0) col[a.words_ - 1] &= tail_mask;
  }
  return a;
}

int SignMatrix::sign(std::size_t row, std::size_t col) const {
  const std::uint64_t w = bits_[col * words_ + row / 64];
  return ((w >> (row % 64)) & 1ULL) ? -1 : 1;
}

void SignMatrix::set_sign(std::size_t row, std::size_t col, int sign) {
  std::uint64_t& w = bits_[col * words_ + row / 64];
  const std::uint64_t bit = 1ULL << (row % 64);
  if (sign < 0) {
    w |= bit;
  } else {
    w &= ~bit;
  }
}

std::span<const std::uint64_t> SignMatrix::column_bits(std::size_t col) const {
  return {bits_.data() + col * words_, words_};
}

LinearFunctional SignMatrix::row_functional(
    std::size_t row, std::span<const Index> support) const {
  if (support.size() != cols_) {
    throw DimensionError("SignMatrix::row_functional: support size");
  }
  std::vector<double> coef(cols_);
  for (std::size_t c = 0; c < cols_; ++c) coef[c] = sign(row, c);
  return LinearFunctional(IndexSet(support.begin(), support.end()),
                          std::move(coef));
}

MeasurementOracle::MeasurementOracle(Vector hidden)
    : hidden_(std::move(hidden)) {
  if (hidden_.empty()) throw DimensionError("MeasurementOracle: empty vector");
  for (double x : hidden_) {
    if (!std::isfinite(x)) {
      throw ParameterError("MeasurementOracle: non-finite entry");
    }
  }
}

void MeasurementOracle::check_support(std::span<const Index> support) const {
  for (std::size_t t = 0; t < support.size(); ++t) {
    if (support[t] >= hidden_.size()) {
      throw DimensionError("MeasurementOracle: index out of range");
    }
    if (t > 0 && support[t] <= support[t - 1]) {
      throw ParameterError("MeasurementOracle: support not strictly increasing");
    }
  }
}

double MeasurementOracle::measure(const LinearFunctional& f) {
  check_support(f.support());
  const auto& s = f.support();
  const auto& c = f.coefficients();
  double y = 0.0;
  for (std::size_t t = 0; t < s.size(); ++t) y += c[t] * hidden_[s[t]];
  ++cost_;
  return y;
}

std::vector<double> MeasurementOracle::measure_signs(
    std::span<const Index> support, const SignMatrix& signs) {
  if (support.size() != signs.cols()) {
    throw DimensionError("measure_signs: support size != matrix columns");
  }
  check_support(support);
  const std::size_t k = signs.rows();
  std::vector<double> y(k, 0.0);
  // Zero entries contribute nothing, so skipping them leaves every row sum
  // bit-identical to measure() on the row functional.
  for (std::size_t t = 0; t < support.size(); ++t) {
    const double x = hidden_[support[t]];
    if (x == 0.0) continue;
    const auto col = signs.column_bits(t);
    for (std::size_t w = 0; w < col.size(); ++w) {
      const std::uint64_t word = col[w];
      const std::size_t base = w * 64;
      const std::size_t n = std::min<std::size_t>(64, k - base);
      for (std::size_t b = 0; b < n; ++b) {
        y[base + b] += ((word >> b) & 1ULL) ? -x : x;
      }
    }
  }
  cost_ += k;
  return y;
}

double MeasurementOracle::read_entry(Index j) {
  if (j >= hidden_.size()) {
    throw DimensionError("read_entry: index out of range");
  }
  ++cost_;
  return hidden_[j];
}

}  // namespace adarec
