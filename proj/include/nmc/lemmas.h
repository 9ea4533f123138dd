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

#ifndef NMC_LEMMAS_H_
#define NMC_LEMMAS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "nmc/dist.h"

namespace nmc {

// Exhaustive property checks of the standard min-entropy lemmas on explicit
// joint distributions (X, W). All comparisons are exact: every threshold is
// rewritten as an inequality between rationals.

struct LemmaResult {
  std::string name;
  std::size_t instances = 0;  // (joint, parameter) pairs evaluated
  std::size_t violations = 0;
};

// Random joint on {0,1}^x_bits x {0,1}^w_bits with small integer weights.
JointDist RandomTinyJoint(std::uint64_t seed, std::size_t x_bits, std::size_t w_bits);

// Pr_w[H(X|W=w) >= H~(X|W) - s] >= 1 - 2^-s, for s = 1, 2, 3.
LemmaResult CheckConditioningTail(const JointDist& j);
// H~(X|W) >= H(X) - l when W takes at most 2^l values (l = w_bits).
LemmaResult CheckBoundedLeakage(const JointDist& j);
// Pr_w[H(X|W=w) >= H(X) - log|W range| - log(1/eps)] >= 1 - eps, for
// eps = 1/2, 1/4, 1/8.
LemmaResult CheckWorstCaseConditioning(const JointDist& j);
// With X eps-close to min-entropy k (eps the exact distance, k = 1..|X|):
// Pr_w[X|W=w is eps'-close to min-entropy k - log|W range| - log(1/eps')]
// >= 1 - eps' - eps/eps', for eps' = 1/2, 1/4, 1/8.
LemmaResult CheckCloseConditioning(const JointDist& j);

// Runs all four checks on `count` seeded random joints.
std::vector<LemmaResult> RunLemmaSuite(std::size_t count, std::uint64_t seed);

}  // namespace nmc

#endif  // NMC_LEMMAS_H_
