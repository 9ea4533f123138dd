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

#ifndef NMC_GF2_H_
#define NMC_GF2_H_

#include <cstdint>

#include "nmc/bitstring.h"

namespace nmc {

// Largest supported field width.
inline constexpr int kMaxFieldWidth = 32;

// Irreducible modulus for GF(2^w), including the x^w term.
// Throws Error for w outside [1, kMaxFieldWidth].
std::uint64_t GfModulus(int w);

// Product of two w-bit field elements given as integers (bit w-1 is the
// coefficient of x^(w-1)).
std::uint64_t GfMul(std::uint64_t a, std::uint64_t b, int w);
std::uint64_t GfPow(std::uint64_t a, std::uint64_t e, int w);

struct FieldElem {
  std::uint64_t value = 0;
  int width = 1;

  static FieldElem FromBits(const BitString& bits);
  BitString ToBits() const { return BitString::FromU64(value, static_cast<std::size_t>(width)); }

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

// Throws Error on width mismatch.
FieldElem gf_add(const FieldElem& a, const FieldElem& b);
FieldElem gf_mul(const FieldElem& a, const FieldElem& b);

}  // namespace nmc

#endif  // NMC_GF2_H_
