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

#include "nmc/primitives.h"

#include <array>
#include <bit>

#include "nmc/gf2.h"
#include "nmc/seeds.h"

namespace nmc {
namespace {

constexpr std::uint64_t kMaskSeed = 0x6e6d636f6e642d31ULL;
constexpr std::size_t kMaskWords = 64;  // covers diagonals up to 4096 bits

const std::array<std::uint64_t, kMaskWords>& MaskWords() {
  static const std::array<std::uint64_t, kMaskWords> words = [] {
    std::array<std::uint64_t, kMaskWords> w{};
    std::uint64_t state = kMaskSeed;
    for (auto& v : w) v = SplitMix64(state);
    return w;
  }();
  return words;
}

BitString Reverse(const BitString& x) {
  BitString r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.Get(i)) r.Set(x.size() - 1 - i, true);
  }
  return r;
}

std::uint64_t BlockProduct(const BitString& x, const BitString& y, std::size_t m) {
  const int w = static_cast<int>(m);
  std::uint64_t acc = 0;
  for (std::size_t b = 0; b < x.size() / m; ++b) {
    const std::uint64_t xb = x.Slice(b * m, m).ToU64();
    if (xb == 0) continue;
    acc ^= GfMul(xb, y.Slice(b * m, m).ToU64(), w);
  }
  return acc;
}

std::uint64_t ReverseBits(std::uint64_t v) {
  v = ((v >> 1) & 0x5555555555555555ULL) | ((v & 0x5555555555555555ULL) << 1);
  v = ((v >> 2) & 0x3333333333333333ULL) | ((v & 0x3333333333333333ULL) << 2);
  v = ((v >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((v & 0x0F0F0F0F0F0F0F0FULL) << 4);
  return __builtin_bswap64(v);
}

}  // namespace

bool HashMaskBit(std::size_t j) {
  if (j >= kMaskWords * 64) throw Error("hash diagonal too long");
  return (MaskWords()[j / 64] >> (63 - j % 64)) & 1u;
}

BitString ext_hash(const BitString& x, const BitString& y, std::size_t m) {
  const std::size_t n = x.size();
  const std::size_t len = n + m - 1;
  if (m == 0 || m > n || y.empty() || len > 64) return ext_hash_reference(x, y, m);
  // diag holds diagonal bit j at position 63 - j: the seed repeated, XORed
  // with the mask stream past the seed's own length.
  std::uint64_t diag = 0;
  const std::size_t ys = y.size();
  if (ys >= 64) {
    diag = y.words()[0];
  } else {
    diag = y.ToU64() << (64 - ys);
    for (std::size_t filled = ys; filled < 64; filled *= 2) diag |= diag >> filled;
    diag ^= MaskWords()[0] & (~std::uint64_t{0} >> ys);
  }
  if (len < 64) diag &= ~(~std::uint64_t{0} >> len);
  // Window i is diag[i .. i+n-1] with diag[i] most significant; row i pairs
  // it with x reversed, i.e. x[n-1-k] against diag[i+k].
  const std::uint64_t rx = ReverseBits(x.ToU64()) >> (64 - n);
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t v = ((diag << i) >> (64 - n)) & rx;
    v ^= v >> 32;
    v ^= v >> 16;
    v ^= v >> 8;
    v ^= v >> 4;
    v ^= v >> 2;
    v ^= v >> 1;
    out = (out << 1) | (v & 1u);
  }
  return BitString::FromU64(out, m);
}

BitString ext_hash_reference(const BitString& x, const BitString& y, std::size_t m) {
  const std::size_t n = x.size();
  if (m > n) throw Error("output exceeds source length");
  if (m == 0) return BitString();
  if (y.empty()) throw Error("empty seed");
  const std::size_t len = n + m - 1;
  BitString diag(len);
  if (y.size() >= len) {
    diag = y.Slice(0, len);
  } else {
    for (std::size_t j = 0; j < len; ++j) {
      bool b = y.Get(j % y.size());
      if (j >= y.size()) b ^= HashMaskBit(j);
      if (b) diag.Set(j, true);
    }
  }
  // Row i of the matrix is diag[i .. i+n-1] read backwards, so
  // out_i = <reverse(x), diag[i .. i+n-1]>.
  const BitString rx = Reverse(x);
  BitString out(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (Ip(rx, diag.Slice(i, n))) out.Set(i, true);
  }
  return out;
}

BitString two_source_ip(const BitString& x, const BitString& y, std::size_t m) {
  if (m == 0) return BitString();
  if (m > static_cast<std::size_t>(kMaxFieldWidth)) throw Error("output length exceeds field table");
  if (x.size() % m != 0) throw Error("source length not divisible by output length");
  return BitString::FromU64(BlockProduct(x, y.Resized(x.size()), m), m);
}

BitString nm_ip(const BitString& x, const BitString& y, std::size_t m) {
  if (x.size() != y.size()) throw Error("unequal lengths");
  if (m == 0) return BitString();
  if (m > static_cast<std::size_t>(kMaxFieldWidth)) throw Error("output length exceeds field table");
  if (x.size() % m != 0) throw Error("source length not divisible by output length");
  return BitString::FromU64(BlockProduct(x, y, m), m);
}

}  // namespace nmc
