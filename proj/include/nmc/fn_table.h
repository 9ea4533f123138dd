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

#ifndef NMC_FN_TABLE_H_
#define NMC_FN_TABLE_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "nmc/bitstring.h"

namespace nmc {

// f(x, y) tabulated for every x in {0,1}^n and y in {0,1}^d, with m-bit
// outputs stored as integers (bit 0 of the output string most significant).
struct FnTable {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t m = 0;
  std::vector<std::uint32_t> out;  // index (x << d) | y

  using Fn = std::function<BitString(const BitString& x, const BitString& y)>;
  // Requires n + d <= 26 and m <= 32.
  static FnTable Build(std::size_t n, std::size_t d, std::size_t m, const Fn& f);

  std::uint32_t At(std::uint32_t x, std::uint32_t y) const { return out[(std::size_t{x} << d) | y]; }
};

// A seed-tampering function A: {0,1}^d -> {0,1}^d stored as its table.
using AdversaryTable = std::vector<std::uint32_t>;

// True iff A(y) != y for every y.
bool IsFixedPointFree(const AdversaryTable& a);
// Throws Error("A(y)=y violates the non-malleability definition") if any
// fixed point exists.
void RequireFixedPointFree(const AdversaryTable& a);

// Number of fixed-point-free functions on {0,1}^d: (2^d - 1)^(2^d), or
// UINT64_MAX if that overflows.
std::uint64_t CountFixedPointFree(std::size_t d);

// The index-th fixed-point-free table in lexicographic order, with A(0) the
// most significant position.
AdversaryTable FixedPointFreeAt(std::size_t d, std::uint64_t index);

// The first `cap` tables in lexicographic order, then `samples` seeded
// uniform tables. Exhaustive when the count is at most `cap`.
std::vector<AdversaryTable> EnumerateAdversaries(std::size_t d, std::uint64_t cap, std::size_t samples,
                                                 std::uint64_t seed);

}  // namespace nmc

#endif  // NMC_FN_TABLE_H_
