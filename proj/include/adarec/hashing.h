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

// Random bucketing of coordinates.
//
// A hash vector assigns every coordinate i in [0, m) a bucket label in
// [0, D). Two distributions are provided: the equi-hash distribution, where a
// uniform permutation spreads labels so that every bucket has floor(m/D) or
// ceil(m/D) members, and a pairwise-independent affine family modulo a prime.

#ifndef ADAREC_HASHING_H_
#define ADAREC_HASHING_H_

#include <cstdint>
#include <vector>

#include "adarec/core.h"
#include "adarec/rng.h"

namespace adarec {

struct HashVector {
  std::uint64_t buckets = 0;            // D
  std::vector<std::uint64_t> values;   // labels in [0, buckets)
};

// H_i = ceil(pi(i) * D / m) for a uniform permutation pi of {1..m}
// (returned 0-based). Requires 1 <= D <= m.
HashVector equi_hash(std::size_t m, std::uint64_t buckets, RngStream& rng);

// h(i) = floor(((a*i + b) mod P) * D / P) with P the smallest prime
// >= max(domain, D), a uniform in [1, P-1], b uniform in [0, P-1].
class PairwiseHash {
 public:
  static PairwiseHash draw(std::uint64_t domain, std::uint64_t buckets,
                           RngStream& rng);

  std::uint64_t operator()(Index i) const;

  std::uint64_t buckets() const { return buckets_; }
  std::uint64_t prime() const { return prime_; }

 private:
  PairwiseHash(std::uint64_t prime, std::uint64_t a, std::uint64_t b,
               std::uint64_t buckets)
      : prime_(prime), a_(a), b_(b), buckets_(buckets) {}

  std::uint64_t prime_;
  std::uint64_t a_;
  std::uint64_t b_;
  std::uint64_t buckets_;
};

// Materializes a PairwiseHash over [0, m). Requires D >= 1.
HashVector pairwise_hash(std::size_t m, std::uint64_t buckets, RngStream& rng);

// The buckets J_0..J_{D-1} induced by a hash vector; each sorted ascending.
class BucketPartition {
 public:
  explicit BucketPartition(const HashVector& h);

  std::size_t size() const { return buckets_.size(); }
  const IndexSet& bucket(std::uint64_t d) const { return buckets_.at(d); }
  const std::vector<IndexSet>& buckets() const { return buckets_; }

 private:
  std::vector<IndexSet> buckets_;
};

// B_j = { i : H_i == H_j }.
IndexSet bucket_of(const HashVector& h, Index j);

// Number of buckets that isolates an eps-large coordinate below a
// heavy-hitter constant gamma with probability >= 1 - delta0:
//   ceil((gamma/eps)^p / delta0)                    for 1 <= p <= 2,
//   ceil(m^(1-2/p) * (gamma/eps)^2 / delta0)        for p > 2,
// capped at m. With `pairwise_with_size_bound` the failure budget is split
// between the norm and the bucket-size event (delta0 replaced by delta0/2),
// the variant suited to pairwise rather than equi-hash bucketing.
std::uint64_t hash_size_for(double p, double eps, double delta0, double gamma,
                            std::size_t m,
                            bool pairwise_with_size_bound = false);

// Smallest prime >= n (deterministic Miller-Rabin for 64-bit inputs).
std::uint64_t smallest_prime_at_least(std::uint64_t n);

}  // namespace adarec

#endif  // ADAREC_HASHING_H_
