/*
 * Copyright 2026 The nmcond Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef NMC_SEEDS_H_
#define NMC_SEEDS_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "nmc/bitstring.h"

namespace nmc {

std::uint64_t SplitMix64(std::uint64_t& state);

// Child seed of `parent` for the named branch. The tree is
//   child = splitmix64(parent ^ fnv1a64(label) ^ index * golden)
// so any node can be recomputed from the master seed and its path.
std::uint64_t DeriveSeed(std::uint64_t parent, std::string_view label, std::uint64_t index = 0);

std::uint64_t ParseSeedHex(std::string_view hex);
std::string SeedToHex(std::uint64_t seed);

// Deterministic bit generator over splitmix64.
class BitRng {
 public:
  explicit BitRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t Next() { return SplitMix64(state_); }
  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t Below(std::uint64_t bound);
  BitString Bits(std::size_t n);

 private:
  std::uint64_t state_;
};

}  // namespace nmc

#endif  // NMC_SEEDS_H_
