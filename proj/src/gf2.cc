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

#include "nmc/gf2.h"

#include <array>

namespace nmc {
namespace {

// Index w holds the modulus for GF(2^w).
constexpr std::array<std::uint64_t, kMaxFieldWidth + 1> kModuli = {
    0x0,        0x3,        0x7,        0xB,        0x13,       0x25,       0x43,
    0x83,       0x11B,      0x211,      0x409,      0x805,      0x1009,     0x201B,
    0x4021,     0x8003,     0x1002B,    0x20009,    0x40009,    0x80027,    0x100009,
    0x200005,   0x400003,   0x800021,   0x1000087,  0x2000009,  0x4000047,  0x8000027,
    0x10000003, 0x20000005, 0x40000003, 0x80000009, 0x100400007};

}  // namespace

std::uint64_t GfModulus(int w) {
  if (w < 1 || w > kMaxFieldWidth) throw Error("unsupported field width");
  return kModuli[static_cast<std::size_t>(w)];
}

std::uint64_t GfMul(std::uint64_t a, std::uint64_t b, int w) {
  const std::uint64_t mod = GfModulus(w);
  const std::uint64_t top = std::uint64_t{1} << w;
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= mod;
  }
  return r;
}

std::uint64_t GfPow(std::uint64_t a, std::uint64_t e, int w) {
  std::uint64_t r = 1;
  while (e != 0) {
    if (e & 1u) r = GfMul(r, a, w);
    a = GfMul(a, a, w);
    e >>= 1;
  }
  return r;
}

FieldElem FieldElem::FromBits(const BitString& bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxFieldWidth)) {
    throw Error("unsupported field width");
  }
  return FieldElem{bits.ToU64(), static_cast<int>(bits.size())};
}

FieldElem gf_add(const FieldElem& a, const FieldElem& b) {
  if (a.width != b.width) throw Error("field width mismatch");
  return FieldElem{a.value ^ b.value, a.width};
}

FieldElem gf_mul(const FieldElem& a, const FieldElem& b) {
  if (a.width != b.width) throw Error("field width mismatch");
  return FieldElem{GfMul(a.value, b.value, a.width), a.width};
}

}  // namespace nmc
