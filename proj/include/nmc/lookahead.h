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

#ifndef NMC_LOOKAHEAD_H_
#define NMC_LOOKAHEAD_H_

#include <vector>

#include <json.hpp>

#include "nmc/bitstring.h"

namespace nmc {

// One run of alternating extraction:
//   R_0 = Raz(S_0, X), S_i = Ext_q(Q, R_{i-1}), R_i = Ext_w(X, S_i)
// and in the variant with auxiliary sources V_i = Ext_v(Xbar_i, S_i) with
// 2^{t-i} s bits. Raz is two_source_ip, Ext_q/Ext_w/Ext_v are ext_hash.
// Rows are stored 0-based in the vectors: s_rows[i] = S_i, r_rows[i] = R_i,
// v_rows[i-1] = V_i.
struct AltExtTrace {
  std::size_t t = 0;
  std::size_t d = 0;
  std::size_t q_padding = 0;  // zero bits appended to q so that |q| >= d
  std::vector<BitString> s_rows;
  std::vector<BitString> r_rows;
  std::vector<BitString> v_rows;

  const BitString& S(std::size_t i) const { return s_rows.at(i); }
  const BitString& R(std::size_t i) const { return r_rows.at(i); }
  const BitString& V(std::size_t i) const { return v_rows.at(i - 1); }

  nlohmann::json ToJson() const;
  static AltExtTrace FromJson(const nlohmann::json& j);
  friend bool operator==(const AltExtTrace&, const AltExtTrace&) = default;
};

// Requires d >= 1, |s0| a positive multiple of d, and d <= |x|.
AltExtTrace alt_extract(const BitString& x, const BitString& q, const BitString& s0, std::size_t t,
                        std::size_t d);

// Throws Error("row count mismatch") unless |xbar| == t; each xbar_i must
// have at least 2^{t-i} s bits.
AltExtTrace alt_extract_v(const BitString& x, const std::vector<BitString>& xbar, const BitString& q,
                          const BitString& s0, std::size_t t, std::size_t s, std::size_t d);

// R_1..R_t.
std::vector<BitString> la_ext(const BitString& x, const BitString& q, const BitString& s0, std::size_t t,
                              std::size_t d);

}  // namespace nmc

#endif  // NMC_LOOKAHEAD_H_
