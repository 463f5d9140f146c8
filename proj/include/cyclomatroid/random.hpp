// Copyright 2026 The Authors.
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

#ifndef CYCLOMATROID_RANDOM_HPP_
#define CYCLOMATROID_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace cyclomatroid {

std::uint64_t SplitMix64(std::uint64_t x);

// Seed for trial `trial` of a run seeded with `base`.
inline std::uint64_t TrialSeed(std::uint64_t base, std::uint64_t trial) {
  return SplitMix64(base ^ SplitMix64(trial + 0x632be59bd9b4e019ULL));
}

// mt19937_64 with its own bounded draw, so streams are identical across
// standard libraries (std::uniform_int_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform on [lo, hi].
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace cyclomatroid

#endif  // CYCLOMATROID_RANDOM_HPP_
