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

#ifndef NMC_CONDENSER_H_
#define NMC_CONDENSER_H_

#include <vector>

#include "nmc/bitstring.h"
#include "nmc/fn_table.h"
#include "nmc/profile.h"

namespace nmc {

// v1 is the non-malleable-extractor part; v2 holds the look-ahead MAC rows
// (nm_cond) or the V rows (nm_cond_linear). z = v1 || v2[0] || v2[1] ...
struct CondenserOutput {
  BitString v1;
  std::vector<BitString> v2;
  BitString z;
  Layout layout;
};

// y = (y1, y2) with |y1| = y1_len, |y2| = y2_len.
//   w = Ext(x, y1) with w_len bits
//   r = laExt(x, (q = y2, s0 = first s0_len bits of y2))
//   z = (nm(w, y2), laMAC_r(y1))
// The nm seed y2 is truncated or zero-padded to |w|. Throws Error naming
// the violated clause for an invalid or non-executable profile.
CondenserOutput nm_cond(const BitString& x, const BitString& y, const ParameterProfile& p);

// y = (y1, y2) with |y1| = y1_len, |y2| = d'.
//   (x_1..x_C) = Cond(x); w = Ext(x, y1) with w_len bits
//   xbar_i = nmExt(x_i, y1) with m' bits
//   v = V_1..V_C of alternating extraction on (x, xbar) with q = y2,
//       s0 = first s0_len bits of y2, rows of row_len bits, V unit 2 ell
//   z = (nm2(w, y2), v)
CondenserOutput nm_cond_linear(const BitString& x, const BitString& y, const ParameterProfile& p);

// The condenser tabulated over all (x, y), for the exhaustive verifier.
FnTable NmCondTable(const ParameterProfile& p);

}  // namespace nmc

#endif  // NMC_CONDENSER_H_
