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

#ifndef ADAREC_ORACLE_H_
#define ADAREC_ORACLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "adarec/core.h"
#include "adarec/rng.h"

namespace adarec {

// A linear functional sum_t coefficients[t] * x[support[t]].
// The support is strictly increasing and the coefficients are finite.
class LinearFunctional {
 public:
  LinearFunctional() = default;
  LinearFunctional(IndexSet support, std::vector<double> coefficients);

  // Coordinate functional e_j.
  static LinearFunctional coordinate(Index j);

  const IndexSet& support() const { return support_; }
  const std::vector<double>& coefficients() const { return coefficients_; }
  std::size_t size() const { return support_.size(); }

 private:
  IndexSet support_;
  std::vector<double> coefficients_;
};

// A k x n matrix of +-1 entries stored column-major as packed bits
// (bit set means -1). Row i read against a support of n coordinates is the
// Rademacher functional sum_t sign(i, t) * x[support[t]].
class SignMatrix {
 public:
  SignMatrix() = default;
  SignMatrix(std::size_t rows, std::size_t cols);

  // i.i.d. uniform signs; column by column from `rng`.
  static SignMatrix random(std::size_t rows, std::size_t cols, RngStream& rng);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_column() const { return words_; }

  int sign(std::size_t row, std::size_t col) const;
  void set_sign(std::size_t row, std::size_t col, int sign);
  std::span<const std::uint64_t> column_bits(std::size_t col) const;

  LinearFunctional row_functional(std::size_t row,
                                  std::span<const Index> support) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Holds the hidden vector and answers linear measurements of it.
//
// The only way to learn about the hidden vector is through measure(),
// measure_signs() and read_entry(); each evaluated functional adds exactly one
// to cost(). Not thread-safe: one writer per instance.
class MeasurementOracle {
 public:
  explicit MeasurementOracle(Vector hidden);

  std::size_t dimension() const { return hidden_.size(); }

  double measure(const LinearFunctional& f);

  // Evaluates every row of `signs` against `support` (cols == support size).
  // Costs signs.rows().
  std::vector<double> measure_signs(std::span<const Index> support,
                                    const SignMatrix& signs);

  double read_entry(Index j);

  std::uint64_t cost() const { return cost_; }
  void reset_cost() { cost_ = 0; }

 private:
  void check_support(std::span<const Index> support) const;

  Vector hidden_;
  std::uint64_t cost_ = 0;
};

}  // namespace adarec

#endif  // ADAREC_ORACLE_H_
