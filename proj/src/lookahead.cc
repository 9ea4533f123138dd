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

#include "nmc/lookahead.h"

#include "nmc/primitives.h"

namespace nmc {
namespace {

using nlohmann::json;

json HexRows(const std::vector<BitString>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back({{"len", r.size()}, {"hex", r.ToHex()}});
  return a;
}

std::vector<BitString> ParseRows(const json& a) {
  std::vector<BitString> out;
  for (const auto& r : a) out.push_back(BitString::FromHex(r.at("hex").get<std::string>(), r.at("len").get<std::size_t>()));
  return out;
}

AltExtTrace Run(const BitString& x, const std::vector<BitString>* xbar, const BitString& q, const BitString& s0,
                std::size_t t, std::size_t s, std::size_t d) {
  if (d == 0) throw Error("row length d must be positive");
  if (s0.empty() || s0.size() % d != 0) throw Error("|s0| must be a positive multiple of d");
  if (d > x.size()) throw Error("row length exceeds source length");
  AltExtTrace tr;
  tr.t = t;
  tr.d = d;
  BitString qq = q;
  if (qq.size() < d) {
    tr.q_padding = d - qq.size();
    qq = qq.Resized(d);
  }
  tr.s_rows.reserve(t + 1);
  tr.r_rows.reserve(t + 1);
  if (xbar != nullptr) tr.v_rows.reserve(t);
  tr.s_rows.push_back(s0);
  tr.r_rows.push_back(two_source_ip(s0, x, d));
  for (std::size_t i = 1; i <= t; ++i) {
    BitString si = ext_hash(qq, tr.r_rows.back(), d);
    tr.r_rows.push_back(ext_hash(x, si, d));
    if (xbar != nullptr) {
      const std::size_t len = (std::size_t{1} << (t - i)) * s;
      tr.v_rows.push_back(ext_hash((*xbar)[i - 1], si, len));
    }
    tr.s_rows.push_back(std::move(si));
  }
  return tr;
}

}  // namespace

json AltExtTrace::ToJson() const {
  return {{"t", t}, {"d", d}, {"q_padding", q_padding}, {"S", HexRows(s_rows)}, {"R", HexRows(r_rows)},
          {"V", HexRows(v_rows)}};
}

AltExtTrace AltExtTrace::FromJson(const json& j) {
  AltExtTrace tr;
  tr.t = j.at("t").get<std::size_t>();
  tr.d = j.at("d").get<std::size_t>();
  tr.q_padding = j.at("q_padding").get<std::size_t>();
  tr.s_rows = ParseRows(j.at("S"));
  tr.r_rows = ParseRows(j.at("R"));
  tr.v_rows = ParseRows(j.at("V"));
  return tr;
}

AltExtTrace alt_extract(const BitString& x, const BitString& q, const BitString& s0, std::size_t t,
                        std::size_t d) {
  return Run(x, nullptr, q, s0, t, 0, d);
}

AltExtTrace alt_extract_v(const BitString& x, const std::vector<BitString>& xbar, const BitString& q,
                          const BitString& s0, std::size_t t, std::size_t s, std::size_t d) {
  if (xbar.size() != t) throw Error("row count mismatch");
  if (t >= 32) throw Error("too many rows");
  return Run(x, &xbar, q, s0, t, s, d);
}

std::vector<BitString> la_ext(const BitString& x, const BitString& q, const BitString& s0, std::size_t t,
                              std::size_t d) {
  AltExtTrace tr = alt_extract(x, q, s0, t, d);
  return {tr.r_rows.begin() + 1, tr.r_rows.end()};
}

}  // namespace nmc
