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

#ifndef NMC_SOURCES_H_
#define NMC_SOURCES_H_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "nmc/dist.h"

namespace nmc {

enum class SourceKind { kExplicit, kFlat, kUniform };

// Declarative description of a weak source, as read from configs.
struct SourceSpec {
  SourceKind kind = SourceKind::kUniform;
  std::size_t n = 0;
  std::vector<BitString> points;  // kFlat / kExplicit
  std::vector<Rational> probs;    // kExplicit only, parallel to points

  Dist ToDist() const;
  double MinEntropy() const;

  // {"kind": "uniform"|"flat"|"explicit", "n": .., "points": ["0101", ..],
  //  "probs": ["1/2", ..]}. A flat source may instead give "size" and a hex
  // "seed" to draw a random support with RandomSubset.
  nlohmann::json ToJson() const;
  static SourceSpec FromJson(const nlohmann::json& j);
};

// A source on n <= 30 bits with integer weights: Pr[x_i] = weights[i] / total.
// The kernels count with these weights instead of rationals.
struct WeightedSource {
  std::size_t n = 0;
  std::vector<std::uint32_t> points;
  std::vector<std::uint64_t> weights;
  std::uint64_t total = 0;

  static WeightedSource Flat(std::size_t n, std::vector<std::uint32_t> points);
  static WeightedSource Uniform(std::size_t n);
  // Requires all probabilities to share a denominator below 2^62.
  static WeightedSource FromDist(const Dist& d);
  Dist ToDist() const;
  std::uint64_t MaxWeight() const;
};

// The flat k-sources on {0,1}^n used by the verifiers: the first `cap`
// subsets of size 2^k in lexicographic order, then `samples` further subsets
// drawn with a seeded generator. When the number of subsets is at most `cap`
// the family is exhaustive and no samples are drawn.
struct FlatFamily {
  std::vector<WeightedSource> sources;
  bool exhaustive = false;
  std::string description;
};
FlatFamily MakeFlatFamily(std::size_t n, std::size_t k, std::size_t cap, std::size_t samples,
                          std::uint64_t seed);

// Uniform random subset of {0,1}^n with `size` elements, sorted.
std::vector<std::uint32_t> RandomSubset(std::size_t n, std::size_t size, std::uint64_t seed);

}  // namespace nmc

#endif  // NMC_SOURCES_H_
