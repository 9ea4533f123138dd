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

#ifndef NMC_CONDENSER_VERIFY_H_
#define NMC_CONDENSER_VERIFY_H_

#include <cstdint>
#include <vector>

#include "nmc/fn_table.h"
#include "nmc/rational.h"
#include "nmc/sources.h"

namespace nmc {

// Non-negative fraction with 64-bit parts, compared exactly.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;
  Rational ToRational() const;
  friend bool operator<(const Frac& a, const Frac& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
  friend bool operator<=(const Frac& a, const Frac& b) { return !(b < a); }
  friend bool operator==(const Frac& a, const Frac& b) { return !(a < b) && !(b < a); }
};

// Smallest e >= 0 with Pr[value > e] <= e, for a finite list of
// (value, probability) pairs whose probabilities sum to 1.
Frac SmallestSelfBoundedEps(std::vector<std::pair<Frac, Frac>> items);
Rational SmallestSelfBoundedEps(const std::vector<std::pair<Rational, Rational>>& items);

// The condenser definition nests two error events. For seeds (y, y') the
// inner error e(y, y') is the smallest e such that, over z' drawn from
// nmCond(X, y'), the probability that nmCond(X, y) | z' is more than e away
// from every (m, k') source is at most e. Given an adversary, eps_star is the
// smallest e with Pr_y[e(y, A(y)) > e] <= e; eps_seed is the mass of seeds
// above eps_star and eps_inner the largest e(y, A(y)) at or below it.
struct NmCondTriple {
  Rational eps_star = 0;
  Rational eps_seed = 0;
  Rational eps_inner = 0;
  friend bool operator<(const NmCondTriple& a, const NmCondTriple& b) {
    if (a.eps_star != b.eps_star) return a.eps_star < b.eps_star;
    if (a.eps_seed != b.eps_seed) return a.eps_seed < b.eps_seed;
    return a.eps_inner < b.eps_inner;
  }
};

struct NmCondCase {
  NmCondTriple worst;
  std::size_t witness_source = 0;
  AdversaryTable witness_adversary;
  // Average conditional min-entropies of the two output parts given the
  // tampered output, at the witness: H~(V1 | Z') and H~(V2 | Z').
  double v1_entropy = 0;
  double v2_entropy = 0;
};

struct NmCondReport {
  NmCondCase all;          // every fixed-point-free adversary
  NmCondCase same_prefix;  // adversaries that keep the first prefix_len seed bits
  NmCondCase diff_prefix;  // adversaries that change them
  std::size_t sources_checked = 0;
};

struct NmCondOptions {
  std::size_t kprime = 1;
  std::size_t prefix_len = 0;  // |y1|; 0 disables the case split
  std::size_t v1_len = 0;      // width of the first output part, for entropy reporting
};

// Inner errors e(y, y') for one source; index y * 2^d + y'.
std::vector<Frac> InnerErrors(const FnTable& t, const WeightedSource& src, std::size_t kprime);
std::vector<Rational> InnerErrorsReference(const FnTable& t, const WeightedSource& src, std::size_t kprime);

// The triple for one source and one adversary.
NmCondTriple CondenserTriple(const std::vector<Frac>& inner, std::size_t d, const AdversaryTable& a);

// Worst case over the family and all fixed-point-free adversaries. Since the
// adversary picks A(y) independently per seed and eps_star is monotone in
// every e(y, A(y)), the worst adversary takes the per-seed maximum (ties to
// the smallest y').
NmCondReport verify_nm_condenser(const FnTable& t, const std::vector<WeightedSource>& family,
                                 const NmCondOptions& opt);

}  // namespace nmc

#endif  // NMC_CONDENSER_VERIFY_H_
