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

#ifndef NMC_PROFILE_H_
#define NMC_PROFILE_H_

#include <string>
#include <vector>

#include <json.hpp>

#include "nmc/rational.h"

namespace nmc {

enum class Mode { kPaper, kDesk };

// Which construction a profile parameterizes.
enum class Algorithm { kLookahead, kNmCond, kNmCondLinear, kAka, kAka2 };

std::string AlgorithmName(Algorithm a);
Algorithm ParseAlgorithm(const std::string& s);

// Every length of the condensers and protocols, in bits. Unused fields stay 0.
//
//   shared:   n, k, s (security), ell, d (|y1|), t (look-ahead rows),
//             row_len (look-ahead row / seed length), s0_len
//   nmcond:   y1_len, y2_len, w_len, v1_len (nmExt output)
//   nmcond2:  C, n_prime (condenser row), m_prime (per-row nmExt output),
//             d_prime (= y2_len), nm2_len, v_unit (the V-row unit s = 2 ell)
//   aka:      y1_len, y2_len, y3_len, r1_len, t1_len, tag_len, w_len
//   aka2:     d1 (= lambda_m), lambda_m, edit_r, lambda_c, L, d2, yi2_len,
//             yi3_len, tv_len (T_i and V_i), wi_len, mac_v, r_key_len,
//             w_len (final W')
//   key_len:  final key length; 0 selects the default
//             max(1, k - leakage - 2s).
struct ParameterProfile {
  std::string name;
  Algorithm algorithm = Algorithm::kNmCond;
  Mode mode = Mode::kDesk;

  std::size_t n = 0, k = 0, s = 0, ell = 0, d = 0, t = 0, row_len = 0, s0_len = 0;
  std::size_t y1_len = 0, y2_len = 0, y3_len = 0, w_len = 0, v1_len = 0;
  std::size_t C = 0, n_prime = 0, m_prime = 0, d_prime = 0, nm2_len = 0, v_unit = 0;
  std::size_t r1_len = 0, t1_len = 0, tag_len = 0;
  std::size_t d1 = 0, lambda_m = 0, edit_r = 0, lambda_c = 0, L = 0, d2 = 0, yi2_len = 0, yi3_len = 0;
  std::size_t tv_len = 0, wi_len = 0, mac_v = 0, r_key_len = 0;
  std::size_t key_len = 0;

  nlohmann::json ToJson() const;
  // Unknown keys are rejected so typos cannot silently zero a field.
  static ParameterProfile FromJson(const nlohmann::json& j);
  static ParameterProfile Load(const std::string& path);

  Rational rho() const;  // lambda_m / lambda_c
  Rational e() const;    // declared edit-code distance fraction r / lambda_c

  // Bits of X-dependent transcript fields, per field.
  std::vector<std::pair<std::string, std::size_t>> LeakageLedger() const;
  std::size_t LeakageTotal() const;
  std::size_t FinalKeyLen() const;
};

struct Violation {
  std::string clause;  // the inequality or relation that failed
  std::string detail;  // the values involved
};

// Empty iff every constraint for the profile's mode holds. Desk mode checks
// the structural relations the code needs; paper mode also checks the stated
// magnitude relations.
std::vector<Violation> validate_profile(const ParameterProfile& p);
// Throws Error naming the first violated clause.
void RequireValid(const ParameterProfile& p);
// Clauses the desk instantiations need to run the profile (field widths,
// block divisibility, available condensers). validate_profile includes them
// in desk mode; paper-mode profiles are checked against them separately.
std::vector<Violation> ExecutabilityViolations(const ParameterProfile& p);

// Named parts of a condenser output, in output order.
struct LayoutPart {
  std::string name;
  std::size_t len = 0;
};
struct Layout {
  std::vector<LayoutPart> parts;
  std::size_t total() const;
  nlohmann::json ToJson() const;
};
// nmcond: v1, then v2[1..2|y1|]; nmcond2: nm2, then v[1..C].
Layout CondenserLayout(const ParameterProfile& p);

}  // namespace nmc

#endif  // NMC_PROFILE_H_
