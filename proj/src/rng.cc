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

#include "adarec/rng.h"

namespace adarec {
namespace {

std::uint64_t hash_label(std::string_view label) {
  // FNV-1a.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::string_view label)
    : key_(mix64(mix64(seed) ^ hash_label(label))) {}

RngStream RngStream::child(std::string_view label,
                           std::uint64_t counter) const {
  const std::uint64_t k =
      mix64(mix64(key_ ^ hash_label(label)) + kGolden * (counter + 1));
  return RngStream(k, 0);
}

double RngStream::gaussian() { return normal_(*this); }

double RngStream::uniform01() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

int RngStream::rademacher() { return ((*this)() >> 63) ? -1 : 1; }

}  // namespace adarec
