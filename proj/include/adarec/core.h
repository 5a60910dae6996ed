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

#ifndef ADAREC_CORE_H_
#define ADAREC_CORE_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace adarec {

// Coordinates are 0-based throughout the library.
using Index = std::size_t;
using Vector = std::vector<double>;
// Sorted, duplicate-free list of coordinates.
using IndexSet = std::vector<Index>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Raised when a parameter lies outside the domain of an operation.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an index or length does not match the vector dimension.
class DimensionError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Classical lp norm; p == kInfinity gives the max norm.
double lp_norm(std::span<const double> v, double p);

// Returns the q-th power of the lq norm (sum of |v_i|^q), q finite.
double lp_norm_pow(std::span<const double> v, double q);

// x*_K: entries of v on K, zero elsewhere.
Vector restrict_to(std::span<const double> v, std::span<const Index> support);

// Sorted union of two index sets.
IndexSet set_union(const IndexSet& a, const IndexSet& b);

// Oracle cost split by algorithm stage.
struct CostBreakdown {
  std::uint64_t precond = 0;  // sign measurements
  std::uint64_t spot = 0;     // shrink measurements
  std::uint64_t reads = 0;    // direct coordinate reads
  std::uint64_t sketch = 0;   // non-adaptive sketch measurements

  std::uint64_t total() const { return precond + spot + reads + sketch; }
};

// Ceiling and floor that snap to the nearest integer when the argument is
// within a relative 1e-12 of it, so closed-form parameters that are
// mathematically integral do not jump by one through rounding noise.
std::uint64_t ceil_to_count(double x);
std::uint64_t floor_to_count(double x);

// Throws ParameterError with `what` unless `ok`.
inline void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

}  // namespace adarec

#endif  // ADAREC_CORE_H_
