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

#ifndef ADAREC_RNG_H_
#define ADAREC_RNG_H_

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace adarec {

// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Uniform in [0, n), n >= 1: multiply-shift with rejection (Lemire), exact
// for every n.
template <class Gen>
std::uint64_t bounded_draw(Gen& gen, std::uint64_t n) {
  unsigned __int128 t = static_cast<unsigned __int128>(gen()) * n;
  auto low = static_cast<std::uint64_t>(t);
  if (low < n) {
    const std::uint64_t floor = (0 - n) % n;
    while (low < floor) {
      t = static_cast<unsigned __int128>(gen()) * n;
      low = static_cast<std::uint64_t>(t);
    }
  }
  return static_cast<std::uint64_t>(t >> 64);
}

// A labeled, splittable random stream.
//
// Every stream is identified by a 64-bit key derived from a root seed and a
// path of (label, counter) pairs. Draws are a SplitMix64 counter sequence over
// that key, so a stream is cheap to create and the same path always replays
// the same draws. Independent random components of an algorithm take
// distinct child labels.
//
// Satisfies UniformRandomBitGenerator, so standard distributions apply.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t seed, std::string_view label);

  // Derived stream; `counter` distinguishes repeated calls at one site.
  RngStream child(std::string_view label, std::uint64_t counter = 0) const;

  std::uint64_t key() const { return key_; }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() {
    ++counter_;
    return mix64(key_ + kGolden * counter_);
  }

  double gaussian();
  // Uniform in [0, n), n >= 1.
  std::uint64_t uniform_below(std::uint64_t n) { return bounded_draw(*this, n); }
  // Uniform in [0, 1).
  double uniform01();
  // +1 or -1 with equal probability.
  int rademacher();

 private:
  explicit RngStream(std::uint64_t key, int /*tag*/) : key_(key) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

// wyrand: one multiply per draw. Used for bulk bits in inner loops, seeded
// from a single draw of a stream so results still follow the stream's path.
class FastBits {
 public:
  explicit FastBits(RngStream& rng) : state_(rng()) {}

  std::uint64_t operator()() {
    state_ += 0xa0761d6478bd642fULL;
    const unsigned __int128 t = static_cast<unsigned __int128>(state_) *
                                (state_ ^ 0xe7037ed1a0b428dbULL);
    return static_cast<std::uint64_t>(t >> 64) ^ static_cast<std::uint64_t>(t);
  }
  std::uint64_t below(std::uint64_t n) { return bounded_draw(*this, n); }

 private:
  std::uint64_t state_;
};

}  // namespace adarec

#endif  // ADAREC_RNG_H_
