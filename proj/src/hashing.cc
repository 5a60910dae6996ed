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

#include "adarec/hashing.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace adarec {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  a %= n;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

std::uint64_t smallest_prime_at_least(std::uint64_t n) {
  if (n <= 2) return 2;
  std::uint64_t c = n | 1;
  while (!is_prime(c)) c += 2;
  return c;
}

HashVector equi_hash(std::size_t m, std::uint64_t buckets, RngStream& rng) {
  require(buckets >= 1 && buckets <= m, "equi_hash: need 1 <= D <= m");
  // Permutation values v in (l*m/D, (l+1)*m/D] carry label l, i.e.
  // ceil(v * D / m) - 1. Shuffling that table gives H for a uniform pi.
  HashVector h{buckets, std::vector<std::uint64_t>(m)};
  const bool narrow = m <= 0xffffffffULL;
  std::size_t start = 0;
  for (std::uint64_t l = 0; l < buckets; ++l) {
    const auto end = static_cast<std::size_t>(
        narrow ? (l + 1) * m / buckets : static_cast<u128>(l + 1) * m / buckets);
    std::fill(h.values.begin() + start, h.values.begin() + end, l);
    start = end;
  }
  FastBits bits(rng);
  for (std::size_t i = m; i > 1; --i) {
    std::swap(h.values[i - 1], h.values[bits.below(i)]);
  }
  return h;
}

PairwiseHash PairwiseHash::draw(std::uint64_t domain, std::uint64_t buckets,
                                RngStream& rng) {
  require(buckets >= 1, "PairwiseHash: need D >= 1");
  const std::uint64_t prime =
      smallest_prime_at_least(std::max<std::uint64_t>({domain, buckets, 2}));
  const std::uint64_t a = 1 + rng.uniform_below(prime - 1);
  const std::uint64_t b = rng.uniform_below(prime);
  return PairwiseHash(prime, a, b, buckets);
}

std::uint64_t PairwiseHash::operator()(Index i) const {
  const std::uint64_t v =
      static_cast<std::uint64_t>((static_cast<u128>(a_) * i + b_) % prime_);
  const std::uint64_t d =
      static_cast<std::uint64_t>(static_cast<u128>(v) * buckets_ / prime_);
  return std::min(d, buckets_ - 1);
}

HashVector pairwise_hash(std::size_t m, std::uint64_t buckets, RngStream& rng) {
  const PairwiseHash f = PairwiseHash::draw(m, buckets, rng);
  HashVector h{buckets, std::vector<std::uint64_t>(m)};
  for (std::size_t i = 0; i < m; ++i) h.values[i] = f(i);
  return h;
}

BucketPartition::BucketPartition(const HashVector& h) : buckets_(h.buckets) {
  std::vector<std::size_t> sizes(h.buckets, 0);
  for (std::uint64_t v : h.values) ++sizes.at(v);
  for (std::uint64_t d = 0; d < h.buckets; ++d) buckets_[d].reserve(sizes[d]);
  for (std::size_t i = 0; i < h.values.size(); ++i) {
    buckets_[h.values[i]].push_back(i);
  }
}

IndexSet bucket_of(const HashVector& h, Index j) {
  if (j >= h.values.size()) throw DimensionError("bucket_of: index");
  IndexSet out;
  const std::uint64_t label = h.values[j];
  for (std::size_t i = 0; i < h.values.size(); ++i) {
    if (h.values[i] == label) out.push_back(i);
  }
  return out;
}

std::uint64_t hash_size_for(double p, double eps, double delta0, double gamma,
                            std::size_t m, bool pairwise_with_size_bound) {
  require(p >= 1.0 && std::isfinite(p), "hash_size_for: need 1 <= p < inf");
  require(eps > 0.0 && eps < 1.0, "hash_size_for: need eps in (0,1)");
  require(delta0 > 0.0 && delta0 <= 1.0, "hash_size_for: need delta0 in (0,1]");
  require(gamma > 1.0, "hash_size_for: need gamma > 1");
  require(m >= 1, "hash_size_for: need m >= 1");
  const double failure = pairwise_with_size_bound ? delta0 / 2.0 : delta0;
  const double ratio = gamma / eps;
  double d;
  if (p <= 2.0) {
    d = std::pow(ratio, p) / failure;
  } else {
    d = std::pow(static_cast<double>(m), 1.0 - 2.0 / p) * ratio * ratio /
        failure;
  }
  if (!(d < static_cast<double>(m))) return m;
  return std::min<std::uint64_t>(ceil_to_count(d), m);
}

}  // namespace adarec
