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

#ifndef NMC_PRIMITIVES_H_
#define NMC_PRIMITIVES_H_

#include <cstddef>

#include "nmc/bitstring.h"

namespace nmc {

// Seeded hash extractor: an m x n Toeplitz matrix applied to x over GF(2).
// The matrix has n+m-1 diagonal bits. A seed of at least that length supplies
// them directly (the universal Toeplitz family). A shorter seed is repeated
// cyclically and, past its own length, XORed with the fixed stream from
// HashMaskBit, so short seeds still index distinct matrices.
// Throws Error("output exceeds source length") when m > |x|.
BitString ext_hash(const BitString& x, const BitString& y, std::size_t m);
// Bit-at-a-time version of ext_hash; ext_hash uses word arithmetic when
// n + m - 1 <= 64 and must agree with this everywhere.
BitString ext_hash_reference(const BitString& x, const BitString& y, std::size_t m);

// Seed length at which ext_hash is exactly the universal Toeplitz family.
inline std::size_t FullToeplitzSeedLen(std::size_t n, std::size_t m) { return m == 0 ? 0 : n + m - 1; }

// Bit j of the fixed mask stream used to expand short seeds.
bool HashMaskBit(std::size_t j);

// Two-source extractor: y is truncated or zero-padded on the right to |x|,
// both are cut into m-bit blocks, and the output is sum_b x_b * y_b in
// GF(2^m). m == 0 gives the empty string.
BitString two_source_ip(const BitString& x, const BitString& y, std::size_t m);

// Inner-product non-malleable extractor: same block product, but the inputs
// must have equal length.
BitString nm_ip(const BitString& x, const BitString& y, std::size_t m);

}  // namespace nmc

#endif  // NMC_PRIMITIVES_H_
