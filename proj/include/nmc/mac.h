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

#ifndef NMC_MAC_H_
#define NMC_MAC_H_

#include <cstdint>
#include <vector>

#include "nmc/bitstring.h"
#include "nmc/rational.h"

namespace nmc {

// One-time polynomial MAC over GF(2^v). The key is (k1, k2), its first and
// last v bits; the message is zero-padded to c = ceil(|msg| / v) chunks
// m_1..m_c and tag = k2 + sum_i m_i * k1^i.
// Throws Error unless |key| == 2v and 1 <= v <= 32.
BitString mac_tag(const BitString& key, const BitString& msg, std::size_t v);

// Joint distribution of the key R (a 2v-bit integer) and Eve's side
// information E, as integer weights.
struct KeyLeakDist {
  std::vector<std::uint32_t> keys;
  std::vector<std::uint32_t> leaks;
  std::vector<std::uint64_t> weights;

  static KeyLeakDist Uniform(std::size_t v);
  // Flat on the given keys, E constant.
  static KeyLeakDist FlatOn(const std::vector<std::uint32_t>& keys);
  // E = R.
  static KeyLeakDist Revealed(std::size_t v);
  std::uint64_t Total() const;
  // 2^-H~(R|E) as an exact rational.
  Rational GuessProb() const;
};

// Exact optimal forgery probability for messages of `chunks` full chunks:
//   sum_e max_w sum_t max_{w' != w, t'} Pr[E=e, tag_w = t, tag_w' = t'].
// Throws Error directing to sampling when v > 8 or the enumeration exceeds
// the exhaustive budget.
Rational mac_forgery_advantage(std::size_t v, std::size_t chunks);
Rational mac_forgery_advantage(std::size_t v, std::size_t chunks, const KeyLeakDist& dist);

// Independent reference for tiny parameters: enumerates every forger table
// A: tags -> (w', t') explicitly. Requires uniform keys and (2^v)^... small.
Rational MacForgeryAdvantageByForgerTables(std::size_t v, std::size_t chunks);

// ceil(d / v) * 2^v * 2^-H~(R|E) with d = chunks * v.
Rational MacForgeryBound(std::size_t v, std::size_t chunks, const KeyLeakDist& dist);

}  // namespace nmc

#endif  // NMC_MAC_H_
