// Copyright 2026 The cliffsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace cliffsynth {

// Seedable generator with a fixed output sequence on every platform. Only raw
// engine output is used; std distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    while (true) {
      std::uint64_t x = next();
      if (x < limit) return x % bound;
    }
  }

  bool coin() { return next() >> 63; }

  std::uint64_t seed() const { return seed_; }

  // Stream for sub-task `index`: seeded with mix(seed) ^ index, so it does not
  // depend on how many values this generator has already produced. Mixing
  // first keeps nearby seeds from sharing streams (5 ^ 1 == 4 ^ 0).
  Rng split(std::uint64_t index) const { return Rng(mix(seed_) ^ index); }

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace cliffsynth
