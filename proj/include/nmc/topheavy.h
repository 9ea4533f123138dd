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

#ifndef NMC_TOPHEAVY_H_
#define NMC_TOPHEAVY_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "nmc/bitstring.h"

namespace nmc {

// f(mu): for each bit b_i (1-based i), {4i-3, 4i} if b_i = 0, else
// {4i-2, 4i-1}. Elements are 1-based and sorted.
struct TopHeavySet {
  std::vector<std::size_t> elems;
  BitString source_message;
};

// Throws Error on an empty message.
TopHeavySet topheavy_map(const BitString& mu);

struct TopHeavyResult {
  bool top_heavy = false;
  std::optional<std::size_t> witness;  // smallest j with |s1 >= j| > |s2 >= j|
};

// s1, s2 must be subsets of [1, t]; throws Error otherwise.
TopHeavyResult is_top_heavy(const std::vector<std::size_t>& s1, const std::vector<std::size_t>& s2, std::size_t t);

// The rows r_i for i in f(mu), in increasing i. Requires |rows| = 4 |mu|.
std::vector<BitString> la_mac(const std::vector<BitString>& r_rows, const BitString& mu);

struct TopHeavySweep {
  std::size_t m = 0;
  std::uint64_t pairs = 0;
  std::uint64_t failures = 0;
};

// Checks is_top_heavy(f(mu), f(mu')) for every ordered pair mu != mu' of
// m-bit messages. Requires m <= 16.
TopHeavySweep CheckPairwiseTopHeavy(std::size_t m);
TopHeavySweep CheckPairwiseTopHeavySerial(std::size_t m);

}  // namespace nmc

#endif  // NMC_TOPHEAVY_H_
