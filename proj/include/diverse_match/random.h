// Copyright 2026 The diverse-match Authors.
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

// SplitMix64 (Steele, Lea and Flood, 2014) and the exact sampling rules built
// on it. Everything random in this library goes through this file, and none of
// it uses <random> distributions, whose outputs differ between standard
// library implementations. Given a seed, every generator output is therefore
// reproducible bit-for-bit by any implementation of the rules below:
//
//   Next():          state += 0x9e3779b97f4a7c15; z = state;
//                    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9;
//                    z = (z ^ (z >> 27)) * 0x94d049bb133111eb;
//                    return z ^ (z >> 31).
//   Below(r):        rejection sampling; draw x until x >= (2^64 - r) mod r,
//                    return x mod r.
//   Uniform(lo, hi): lo + Below(hi - lo + 1).
//   UnitDouble():    (Next() >> 11) * 2^-53.
//   Split():         a new generator seeded with Next().

#ifndef DIVERSE_MATCH_RANDOM_H_
#define DIVERSE_MATCH_RANDOM_H_

#include <cstdint>
#include <utility>
#include <vector>

namespace diverse_match {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, range). `range` must be positive.
  std::uint64_t Below(std::uint64_t range) {
    const std::uint64_t threshold = (0 - range) % range;
    std::uint64_t x;
    do {
      x = Next();
    } while (x < threshold);
    return x % range;
  }

  // Uniform integer in [lo, hi].
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    Below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  double UnitDouble() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  bool Bernoulli(double p) { return UnitDouble() < p; }

  SplitMix64 Split() { return SplitMix64(Next()); }

 private:
  std::uint64_t state_;
};

// One SplitMix64 output for a (seed, value) pair; used as a reproducible
// tie-break key.
inline std::uint64_t MixKey(std::uint64_t seed, std::uint64_t value) {
  SplitMix64 rng(seed ^ (value * 0xd1b54a32d192ed03ULL));
  return rng.Next();
}

// Fisher-Yates prefix: moves `count` uniformly chosen distinct elements of
// `pool` to its front. `pool` stays a permutation, so callers can reuse it
// without resetting.
template <typename T>
void SamplePrefix(std::vector<T>& pool, std::size_t count, SplitMix64& rng) {
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t j = i + rng.Below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
}

}  // namespace diverse_match

#endif  // DIVERSE_MATCH_RANDOM_H_
