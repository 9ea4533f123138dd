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

#include "nmc/lemmas.h"

#include "nmc/seeds.h"

namespace nmc {
namespace {

Rational Prob(const std::map<BitString, Rational>& m, const BitString& w) {
  auto it = m.find(w);
  return it == m.end() ? Rational(0) : it->second;
}

// Per-w mass and largest joint probability max_x Pr[X=x, W=w].
struct WStats {
  std::map<BitString, Rational> mass;
  std::map<BitString, Rational> top;
};

WStats Stats(const JointDist& j) {
  WStats s;
  for (const auto& [t, p] : j.support()) {
    s.mass[t[1]] += p;
    Rational& top = s.top[t[1]];
    if (p > top) top = p;
  }
  return s;
}

}  // namespace

JointDist RandomTinyJoint(std::uint64_t seed, std::size_t x_bits, std::size_t w_bits) {
  BitRng rng(seed);
  const std::size_t nx = std::size_t{1} << x_bits;
  const std::size_t nw = std::size_t{1} << w_bits;
  std::vector<std::uint64_t> weight(nx * nw);
  std::uint64_t total = 0;
  for (auto& w : weight) {
    // About a third of the cells stay empty so supports vary.
    w = rng.Below(3) == 0 ? 0 : 1 + rng.Below(8);
    total += w;
  }
  if (total == 0) {
    weight[0] = 1;
    total = 1;
  }
  JointDist j({x_bits, w_bits});
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t w = 0; w < nw; ++w) {
      if (weight[x * nw + w] == 0) continue;
      Rational p(weight[x * nw + w], total);
      p.canonicalize();
      j.Add({BitString::FromU64(x, x_bits), BitString::FromU64(w, w_bits)}, p);
    }
  }
  return j;
}

LemmaResult CheckConditioningTail(const JointDist& j) {
  LemmaResult r{"conditioning-tail", 0, 0};
  const WStats st = Stats(j);
  const Rational guess = avg_guess_prob(j);  // 2^-H~(X|W)
  for (int s = 1; s <= 3; ++s) {
    // H(X|W=w) >= H~ - s  <=>  top(w)/mass(w) <= 2^s * guess
    Rational good = 0;
    for (const auto& [w, m] : st.mass) {
      if (Prob(st.top, w) <= Pow2(s) * guess * m) good += m;
    }
    ++r.instances;
    if (good < 1 - Pow2(-s)) ++r.violations;
  }
  return r;
}

LemmaResult CheckBoundedLeakage(const JointDist& j) {
  LemmaResult r{"bounded-leakage", 1, 0};
  const int l = static_cast<int>(j.lengths()[1]);
  // H~(X|W) >= H(X) - l  <=>  guess <= maxP(X) * 2^l
  if (avg_guess_prob(j) > j.MarginalDist(0).MaxProb() * Pow2(l)) ++r.violations;
  return r;
}

LemmaResult CheckWorstCaseConditioning(const JointDist& j) {
  LemmaResult r{"worst-case-conditioning", 0, 0};
  const WStats st = Stats(j);
  const Rational px = j.MarginalDist(0).MaxProb();
  const int range_bits = static_cast<int>(j.lengths()[1]);
  for (int e = 1; e <= 3; ++e) {
    // H(X|W=w) >= H(X) - range_bits - e  <=>  top/mass <= px * 2^(range_bits + e)
    Rational good = 0;
    for (const auto& [w, m] : st.mass) {
      if (Prob(st.top, w) <= px * Pow2(range_bits + e) * m) good += m;
    }
    ++r.instances;
    if (good < 1 - Pow2(-e)) ++r.violations;
  }
  return r;
}

LemmaResult CheckCloseConditioning(const JointDist& j) {
  LemmaResult r{"close-conditioning", 0, 0};
  const Dist x = j.MarginalDist(0);
  const Dist w = j.MarginalDist(1);
  const int x_bits = static_cast<int>(j.lengths()[0]);
  const int range_bits = static_cast<int>(j.lengths()[1]);
  for (int k = 1; k <= x_bits; ++k) {
    const Rational eps = distance_to_min_entropy(x, k);
    for (int e = 1; e <= 3; ++e) {
      const Rational eps2 = Pow2(-e);
      const int target = k - range_bits - e;
      Rational good = 0;
      for (const auto& [wv, m] : w.support()) {
        const Dist c = condition(j, 1, wv);
        const Rational dist = target <= 0 ? Rational(0) : distance_to_min_entropy(c, target);
        if (dist <= eps2) good += m;
      }
      ++r.instances;
      if (good < 1 - eps2 - eps / eps2) ++r.violations;
    }
  }
  return r;
}

std::vector<LemmaResult> RunLemmaSuite(std::size_t count, std::uint64_t seed) {
  std::vector<LemmaResult> total = {{"conditioning-tail", 0, 0},
                                    {"bounded-leakage", 0, 0},
                                    {"worst-case-conditioning", 0, 0},
                                    {"close-conditioning", 0, 0}};
  for (std::size_t i = 0; i < count; ++i) {
    BitRng rng(DeriveSeed(seed, "lemma-joint", i));
    const std::size_t x_bits = 1 + rng.Below(3);
    const std::size_t w_bits = 1 + rng.Below(2);
    const JointDist j = RandomTinyJoint(rng.Next(), x_bits, w_bits);
    const LemmaResult parts[] = {CheckConditioningTail(j), CheckBoundedLeakage(j), CheckWorstCaseConditioning(j),
                                 CheckCloseConditioning(j)};
    for (std::size_t p = 0; p < 4; ++p) {
      total[p].instances += parts[p].instances;
      total[p].violations += parts[p].violations;
    }
  }
  return total;
}

}  // namespace nmc
