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

#include "nmc/condenser.h"

#include "nmc/lookahead.h"
#include "nmc/primitives.h"
#include "nmc/somewhere.h"
#include "nmc/topheavy.h"

namespace nmc {
namespace {

void RequireRunnable(const ParameterProfile& p, Algorithm alg) {
  if (p.algorithm != alg) throw Error("profile '" + p.name + "' is not a " + AlgorithmName(alg) + " profile");
  RequireValid(p);
  auto exec = ExecutabilityViolations(p);
  if (!exec.empty()) {
    throw Error("profile '" + p.name + "' is not executable by the desk instantiations: " + exec.front().clause +
                " (" + exec.front().detail + ")");
  }
}

CondenserOutput Assemble(BitString v1, std::vector<BitString> v2, const ParameterProfile& p) {
  CondenserOutput out;
  out.z = v1;
  for (const auto& r : v2) out.z = out.z.Concat(r);
  out.v1 = std::move(v1);
  out.v2 = std::move(v2);
  out.layout = CondenserLayout(p);
  if (out.z.size() != out.layout.total()) throw Error("condenser output does not match its layout");
  return out;
}

}  // namespace

CondenserOutput nm_cond(const BitString& x, const BitString& y, const ParameterProfile& p) {
  RequireRunnable(p, Algorithm::kNmCond);
  if (x.size() != p.n) throw Error("source length does not match the profile");
  if (y.size() != p.y1_len + p.y2_len) throw Error("seed length does not match |y1| + |y2|");
  const BitString y1 = y.Slice(0, p.y1_len);
  const BitString y2 = y.Slice(p.y1_len, p.y2_len);
  const BitString w = ext_hash(x, y1, p.w_len);
  const auto r = la_ext(x, y2, y2.Slice(0, p.s0_len), p.t, p.row_len);
  return Assemble(nm_ip(w, y2.Resized(w.size()), p.v1_len), la_mac(r, y1), p);
}

CondenserOutput nm_cond_linear(const BitString& x, const BitString& y, const ParameterProfile& p) {
  RequireRunnable(p, Algorithm::kNmCondLinear);
  if (x.size() != p.n) throw Error("source length does not match the profile");
  if (y.size() != p.y1_len + p.y2_len) throw Error("seed length does not match d + d'");
  const BitString y1 = y.Slice(0, p.y1_len);
  const BitString y2 = y.Slice(p.y1_len, p.y2_len);
  const auto rows = somewhere_condense(x, p.C, p.n_prime);
  const BitString w = ext_hash(x, y1, p.w_len);
  std::vector<BitString> xbar;
  for (const auto& xi : rows) xbar.push_back(nm_ip(xi, y1.Resized(xi.size()), p.m_prime));
  AltExtTrace tr = alt_extract_v(x, xbar, y2, y2.Slice(0, p.s0_len), p.C, p.v_unit, p.row_len);
  return Assemble(nm_ip(w, y2.Resized(w.size()), p.nm2_len), tr.v_rows, p);
}

FnTable NmCondTable(const ParameterProfile& p) {
  const std::size_t d = p.y1_len + p.y2_len;
  const std::size_t m = CondenserLayout(p).total();
  if (p.algorithm == Algorithm::kNmCond) {
    return FnTable::Build(p.n, d, m, [&p](const BitString& x, const BitString& y) { return nm_cond(x, y, p).z; });
  }
  return FnTable::Build(p.n, d, m,
                        [&p](const BitString& x, const BitString& y) { return nm_cond_linear(x, y, p).z; });
}

}  // namespace nmc
