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

#ifndef NMC_DIST_H_
#define NMC_DIST_H_

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "nmc/bitstring.h"
#include "nmc/rational.h"

namespace nmc {

// Finite distribution over bit strings of one length, with exact
// probabilities. Zero-probability entries are never stored.
class Dist {
 public:
  explicit Dist(std::size_t domain_len) : domain_len_(domain_len) {}

  static Dist Uniform(std::size_t n);
  static Dist PointMass(const BitString& x);
  // Uniform over the given distinct points.
  static Dist Flat(const std::vector<BitString>& points);

  // Adds mass to `x`. Throws Error on a length mismatch or negative mass.
  void Add(const BitString& x, const Rational& p);
  // Throws Error unless probabilities sum to exactly 1.
  void Validate() const;

  std::size_t domain_len() const { return domain_len_; }
  const std::map<BitString, Rational>& support() const { return support_; }
  Rational Prob(const BitString& x) const;
  Rational MaxProb() const;
  Rational Total() const;

 private:
  std::size_t domain_len_;
  std::map<BitString, Rational> support_;
};

using Tuple = std::vector<BitString>;

// Finite joint distribution over tuples of bit strings.
class JointDist {
 public:
  explicit JointDist(std::vector<std::size_t> lengths) : lengths_(std::move(lengths)) {}

  static JointDist Product(const Dist& a, const Dist& b);

  void Add(const Tuple& x, const Rational& p);
  void Validate() const;

  std::size_t arity() const { return lengths_.size(); }
  const std::vector<std::size_t>& lengths() const { return lengths_; }
  const std::map<Tuple, Rational>& support() const { return support_; }

  Dist MarginalDist(std::size_t index) const;
  JointDist Marginal(const std::vector<std::size_t>& indices) const;
  // Distribution of the other components given component `index` == value.
  // Throws Error("zero-probability condition") if value has no mass.
  JointDist Condition(std::size_t index, const BitString& value) const;
  // Concatenates every tuple into a single string.
  Dist Flatten() const;

 private:
  std::vector<std::size_t> lengths_;
  std::map<Tuple, Rational> support_;
};

// Half the L1 distance. Throws Error on a domain mismatch.
Rational stat_distance(const Dist& a, const Dist& b);
Rational stat_distance(const JointDist& a, const JointDist& b);

// -log2 of the largest point probability. Throws Error on empty support.
double min_entropy(const Dist& d);

// Expected best-guess probability E_w[max_x Pr[X=x | W=w]] for a joint (X, W).
Rational avg_guess_prob(const JointDist& j);
// -log2 of avg_guess_prob. Throws Error unless arity is 2.
double avg_cond_min_entropy(const JointDist& j);

// Conditional distribution of the first component of an arity-2 joint given
// the second equals `value`.
Dist condition(const JointDist& j, std::size_t index, const BitString& value);

// Distance from d to the nearest distribution on the same domain with every
// point probability at most `cap`. Requires cap * 2^domain_len >= 1.
Rational distance_to_cap(const Dist& d, const Rational& cap);
// Same with cap = 2^-k.
Rational distance_to_min_entropy(const Dist& d, int k);

// Distribution of f(X).
Dist Map(const Dist& d, std::size_t out_len, const std::function<BitString(const BitString&)>& f);

}  // namespace nmc

#endif  // NMC_DIST_H_
