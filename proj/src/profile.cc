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

#include "nmc/profile.h"

#include <fstream>
#include <set>

#include "nmc/bitstring.h"

namespace nmc {
namespace {

using nlohmann::json;
using Field = std::size_t ParameterProfile::*;

const std::pair<const char*, Field> kFields[] = {
    {"n", &ParameterProfile::n},
    {"k", &ParameterProfile::k},
    {"s", &ParameterProfile::s},
    {"ell", &ParameterProfile::ell},
    {"d", &ParameterProfile::d},
    {"t", &ParameterProfile::t},
    {"row_len", &ParameterProfile::row_len},
    {"s0_len", &ParameterProfile::s0_len},
    {"y1_len", &ParameterProfile::y1_len},
    {"y2_len", &ParameterProfile::y2_len},
    {"y3_len", &ParameterProfile::y3_len},
    {"w_len", &ParameterProfile::w_len},
    {"v1_len", &ParameterProfile::v1_len},
    {"C", &ParameterProfile::C},
    {"n_prime", &ParameterProfile::n_prime},
    {"m_prime", &ParameterProfile::m_prime},
    {"d_prime", &ParameterProfile::d_prime},
    {"nm2_len", &ParameterProfile::nm2_len},
    {"v_unit", &ParameterProfile::v_unit},
    {"r1_len", &ParameterProfile::r1_len},
    {"t1_len", &ParameterProfile::t1_len},
    {"tag_len", &ParameterProfile::tag_len},
    {"d1", &ParameterProfile::d1},
    {"lambda_m", &ParameterProfile::lambda_m},
    {"edit_r", &ParameterProfile::edit_r},
    {"lambda_c", &ParameterProfile::lambda_c},
    {"L", &ParameterProfile::L},
    {"d2", &ParameterProfile::d2},
    {"yi2_len", &ParameterProfile::yi2_len},
    {"yi3_len", &ParameterProfile::yi3_len},
    {"tv_len", &ParameterProfile::tv_len},
    {"wi_len", &ParameterProfile::wi_len},
    {"mac_v", &ParameterProfile::mac_v},
    {"r_key_len", &ParameterProfile::r_key_len},
    {"key_len", &ParameterProfile::key_len},
};

const std::pair<Algorithm, const char*> kAlgorithms[] = {
    {Algorithm::kLookahead, "lookahead"}, {Algorithm::kNmCond, "nmcond"},  {Algorithm::kNmCondLinear, "nmcond2"},
    {Algorithm::kAka, "aka"},             {Algorithm::kAka2, "aka2"},
};

class Checker {
 public:
  void Eq(const std::string& clause, std::size_t lhs, std::size_t rhs) {
    if (lhs != rhs) Add(clause, std::to_string(lhs) + " != " + std::to_string(rhs));
  }
  void Ge(const std::string& clause, std::size_t lhs, std::size_t rhs) {
    if (lhs < rhs) Add(clause, std::to_string(lhs) + " < " + std::to_string(rhs));
  }
  void Gt(const std::string& clause, std::size_t lhs, std::size_t rhs) {
    if (lhs <= rhs) Add(clause, std::to_string(lhs) + " <= " + std::to_string(rhs));
  }
  void Divides(const std::string& clause, std::size_t a, std::size_t b) {
    if (a == 0 || b % a != 0) Add(clause, std::to_string(a) + " does not divide " + std::to_string(b));
  }
  void Add(const std::string& clause, const std::string& detail) { out.push_back({clause, detail}); }
  std::vector<Violation> out;
};

std::size_t Pow2(std::size_t e) { return std::size_t{1} << e; }

void LookaheadClauses(const ParameterProfile& p, Checker& c) {
  c.Ge("row length >= 1", p.row_len, 1);
  c.Ge("|q| >= |s0|", p.y2_len, p.s0_len);
  c.Divides("row length divides |s0|", p.row_len, p.s0_len);
  c.Ge("n >= row length", p.n, p.row_len);
}

void NmCondClauses(const ParameterProfile& p, Checker& c) {
  c.Eq("t = 4|y1|", p.t, 4 * p.y1_len);
  c.Gt("|v1| > |v2|", p.v1_len, 2 * p.y1_len * p.row_len);
  LookaheadClauses(p, c);
  if (p.mode == Mode::kPaper) {
    const std::size_t d = p.d;
    c.Ge("k >= 60 d^2", p.k, 60 * d * d);
    c.Eq("|y1| = d", p.y1_len, d);
    c.Eq("|y2| = 12 d^2", p.y2_len, 12 * d * d);
    c.Eq("|w| = 20 d^2", p.w_len, 20 * d * d);
    c.Eq("|nm(w, y2)| = 8 d^2", p.v1_len, 8 * d * d);
    c.Eq("|s0| = 40 d", p.s0_len, 40 * d);
    c.Eq("row length = d", p.row_len, d);
    c.Gt("d > 5 ell", d, 5 * p.ell);
  }
}

void NmCondExec(const ParameterProfile& p, Checker& c) {
  c.Ge("n >= |w|", p.n, p.w_len);
  c.Divides("|v1| divides |w|", p.v1_len, p.w_len);
  c.Ge("|v1| <= 32 (field table)", 32, p.v1_len);
}

void NmCond2Clauses(const ParameterProfile& p, Checker& c) {
  c.Ge("C >= 1", p.C, 1);
  c.Eq("t = C", p.t, p.C);
  c.Eq("|y2| = d'", p.y2_len, p.d_prime);
  c.Eq("V unit s = 2 ell", p.v_unit, 2 * p.ell);
  LookaheadClauses(p, c);
  if (p.mode == Mode::kPaper) {
    const std::size_t d = p.d, ell = p.ell, C = p.C;
    c.Eq("|y1| = d", p.y1_len, d);
    c.Eq("d' = 4Cd + 61d + 14 ell", p.d_prime, 4 * C * d + 61 * d + 14 * ell);
    c.Eq("|w| = 2^C (10 ell)", p.w_len, Pow2(C) * 10 * ell);
    c.Eq("|nm2(w, y2)| = 2^C (4 ell)", p.nm2_len, Pow2(C) * 4 * ell);
    c.Eq("m' = 6 * 2^C ell", p.m_prime, 6 * Pow2(C) * ell);
    c.Eq("|s0| = 30d + 6 ell", p.s0_len, 30 * d + 6 * ell);
  }
}

void NmCond2Exec(const ParameterProfile& p, Checker& c) {
  c.Ge("n >= |w|", p.n, p.w_len);
  c.Divides("|nm2| divides |w|", p.nm2_len, p.w_len);
  c.Ge("|nm2| <= 32 (field table)", 32, p.nm2_len);
  c.Divides("m' divides n'", p.m_prime, p.n_prime);
  c.Ge("m' <= 32 (field table)", 32, p.m_prime);
  if (p.C >= 1) c.Ge("m' >= 2^{C-1} s", p.m_prime, Pow2(p.C - 1) * p.v_unit);
  if (!(p.C == 1 && p.n_prime == p.n) && p.C * p.n_prime != p.n) {
    c.Add("registered somewhere condenser for (n, C, n')", "C * n' != n");
  }
}

void AkaClauses(const ParameterProfile& p, Checker& c) {
  c.Eq("t = 4|y1|", p.t, 4 * p.y1_len);
  c.Eq("|R1| = 4s", p.r1_len, 4 * p.s);
  c.Eq("|T1| = s", p.t1_len, p.s);
  c.Eq("tag length v = 2s", p.tag_len, 2 * p.s);
  c.Ge("|y3| >= |Z| = 2|y1| * row length", p.y3_len, 2 * p.y1_len * p.row_len);
  c.Divides("|T1| divides |y3|", p.t1_len, p.y3_len);
  LookaheadClauses(p, c);
  if (p.mode == Mode::kPaper) {
    const std::size_t d = p.d;
    c.Gt("d > 202 s", d, 202 * p.s);
    c.Ge("k >= 15 d^2", p.k, 15 * d * d);
    c.Eq("|y1| = d", p.y1_len, d);
    c.Eq("|y2| = 12 d^2", p.y2_len, 12 * d * d);
    c.Eq("|y3| = 50 d^2", p.y3_len, 50 * d * d);
    c.Eq("|W'| = d", p.w_len, d);
    c.Eq("|s0| = 40 d", p.s0_len, 40 * d);
    c.Eq("row length = d", p.row_len, d);
  }
}

void AkaExec(const ParameterProfile& p, Checker& c) {
  c.Ge("n >= |R1|", p.n, p.r1_len);
  c.Ge("tag length <= 32 (field table)", 32, p.tag_len);
  c.Ge("tag length >= 1", p.tag_len, 1);
  c.Ge("|W'| >= 1", p.w_len, 1);
  c.Ge("n >= final key length", p.n, p.FinalKeyLen());
}

void Aka2Clauses(const ParameterProfile& p, Checker& c) {
  c.Eq("lambda_c = lambda_m / rho", p.lambda_c, p.lambda_m * (p.edit_r + 2));
  c.Eq("L * d2 = lambda_c", p.L * p.d2, p.lambda_c);
  c.Eq("t = 4 d2", p.t, 4 * p.d2);
  c.Eq("d1 = lambda_m", p.d1, p.lambda_m);
  c.Eq("MAC key length = 2v", p.r_key_len, 2 * p.mac_v);
  c.Ge("|Y_i3| >= |Z_i| = 2 d2 * row length", p.yi3_len, 2 * p.d2 * p.row_len);
  c.Divides("|T_i| divides |Y_i3|", p.tv_len, p.yi3_len);
  c.Ge("row length >= 1", p.row_len, 1);
  c.Ge("|Y_i2| >= |s0|", p.yi2_len, p.s0_len);
  c.Divides("row length divides |s0|", p.row_len, p.s0_len);
  c.Ge("n >= row length", p.n, p.row_len);
  if (p.mode == Mode::kPaper) {
    const std::size_t d2 = p.d2, lc = p.lambda_c;
    c.Ge("k >= d1/rho + 2s + 15 d2^2", p.k, lc + 2 * p.s + 15 * d2 * d2);
    c.Gt("d1 > 2s", p.d1, 2 * p.s);
    c.Gt("d2 > 404 ell", d2, 404 * p.ell);
    c.Eq("tag length v = 2 d1/rho", p.mac_v, 2 * lc);
    c.Eq("MAC key length = 4 d1/rho", p.r_key_len, 4 * lc);
    c.Eq("|Y_i2| = 12 d2^2", p.yi2_len, 12 * d2 * d2);
    c.Eq("|Y_i3| = 50 d2^2", p.yi3_len, 50 * d2 * d2);
    c.Eq("|T_i| = |V_i| = 2 ell", p.tv_len, 2 * p.ell);
    c.Eq("|s0| = 40 d2", p.s0_len, 40 * d2);
    c.Eq("row length = d2", p.row_len, d2);
    c.Eq("|W_i'| = d2", p.wi_len, d2);
    c.Eq("|W'| = d1", p.w_len, p.d1);
  }
}

void Aka2Exec(const ParameterProfile& p, Checker& c) {
  c.Ge("MAC tag length <= 32 (field table)", 32, p.mac_v);
  c.Ge("MAC tag length >= 1", p.mac_v, 1);
  c.Ge("n >= MAC key length", p.n, p.r_key_len);
  c.Ge("n >= final key length", p.n, p.FinalKeyLen());
  c.Ge("n >= |T_i|", p.n, p.tv_len);
  c.Ge("|T_i| >= 1", p.tv_len, 1);
  c.Ge("|W_i'| >= 1", p.wi_len, 1);
  c.Ge("|W'| >= 1", p.w_len, 1);
  c.Ge("lambda_m <= 10 (edit code certification)", 10, p.lambda_m);
}

std::vector<Violation> Collect(const ParameterProfile& p, bool exec) {
  Checker c;
  switch (p.algorithm) {
    case Algorithm::kLookahead:
      LookaheadClauses(p, c);
      if (p.mode == Mode::kPaper) {
        c.Eq("t = 4d", p.t, 4 * p.row_len);
        c.Eq("|s0| = 40d", p.s0_len, 40 * p.row_len);
        c.Ge("k >= 12 d^2", p.k, 12 * p.row_len * p.row_len);
        c.Ge("|q| >= 11 d^2", p.y2_len, 11 * p.row_len * p.row_len);
      }
      break;
    case Algorithm::kNmCond:
      NmCondClauses(p, c);
      if (exec) NmCondExec(p, c);
      break;
    case Algorithm::kNmCondLinear:
      NmCond2Clauses(p, c);
      if (exec) NmCond2Exec(p, c);
      break;
    case Algorithm::kAka:
      AkaClauses(p, c);
      if (exec) AkaExec(p, c);
      break;
    case Algorithm::kAka2:
      Aka2Clauses(p, c);
      if (exec) Aka2Exec(p, c);
      break;
  }
  return c.out;
}

}  // namespace

std::string AlgorithmName(Algorithm a) {
  for (const auto& [alg, name] : kAlgorithms) {
    if (alg == a) return name;
  }
  throw Error("unknown algorithm");
}

Algorithm ParseAlgorithm(const std::string& s) {
  for (const auto& [alg, name] : kAlgorithms) {
    if (s == name) return alg;
  }
  throw Error("unknown algorithm '" + s + "'");
}

json ParameterProfile::ToJson() const {
  json j = {{"schema_version", 1},
            {"name", name},
            {"algorithm", AlgorithmName(algorithm)},
            {"mode", mode == Mode::kPaper ? "paper" : "desk"}};
  for (const auto& [key, field] : kFields) {
    if (this->*field != 0) j[key] = this->*field;
  }
  return j;
}

ParameterProfile ParameterProfile::FromJson(const json& j) {
  ParameterProfile p;
  std::set<std::string> known = {"schema_version", "name", "algorithm", "mode", "comment"};
  p.name = j.at("name").get<std::string>();
  p.algorithm = ParseAlgorithm(j.at("algorithm").get<std::string>());
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "paper") {
    p.mode = Mode::kPaper;
  } else if (mode == "desk") {
    p.mode = Mode::kDesk;
  } else {
    throw Error("mode must be 'paper' or 'desk'");
  }
  for (const auto& [key, field] : kFields) {
    known.insert(key);
    if (j.contains(key)) p.*field = j.at(key).get<std::size_t>();
  }
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) throw Error("unknown profile field '" + item.key() + "'");
  }
  return p;
}

ParameterProfile ParameterProfile::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read profile '" + path + "'");
  try {
    return FromJson(json::parse(in));
  } catch (const json::exception& e) {
    throw Error("malformed profile '" + path + "': " + e.what());
  }
}

Rational ParameterProfile::rho() const {
  if (lambda_c == 0) return 0;
  Rational r(lambda_m, lambda_c);
  r.canonicalize();
  return r;
}

Rational ParameterProfile::e() const {
  if (lambda_c == 0) return 0;
  Rational r(edit_r, lambda_c);
  r.canonicalize();
  return r;
}

std::vector<std::pair<std::string, std::size_t>> ParameterProfile::LeakageLedger() const {
  switch (algorithm) {
    case Algorithm::kAka:
      return {{"R1 (MAC key)", r1_len}, {"T1", t1_len}, {"T2", tag_len}};
    case Algorithm::kAka2:
      return {{"T_i (all phases)", L * tv_len}, {"V_i (all phases)", L * tv_len}, {"R (MAC key)", r_key_len}};
    default:
      return {};
  }
}

std::size_t ParameterProfile::LeakageTotal() const {
  std::size_t total = 0;
  for (const auto& [name, bits] : LeakageLedger()) total += bits;
  return total;
}

std::size_t ParameterProfile::FinalKeyLen() const {
  if (key_len != 0) return key_len;
  const long long v = static_cast<long long>(k) - static_cast<long long>(LeakageTotal()) - 2 * static_cast<long long>(s);
  return v < 1 ? 1 : static_cast<std::size_t>(v);
}

std::vector<Violation> validate_profile(const ParameterProfile& p) { return Collect(p, p.mode == Mode::kDesk); }

void RequireValid(const ParameterProfile& p) {
  auto v = validate_profile(p);
  if (!v.empty()) throw Error("profile '" + p.name + "' violates " + v.front().clause + " (" + v.front().detail + ")");
}

std::vector<Violation> ExecutabilityViolations(const ParameterProfile& p) {
  std::vector<Violation> all = Collect(p, true);
  std::vector<Violation> structural = Collect(p, false);
  std::vector<Violation> out;
  for (std::size_t i = structural.size(); i < all.size(); ++i) out.push_back(all[i]);
  return out;
}

std::size_t Layout::total() const {
  std::size_t t = 0;
  for (const auto& p : parts) t += p.len;
  return t;
}

json Layout::ToJson() const {
  json a = json::array();
  for (const auto& p : parts) a.push_back({{"name", p.name}, {"len", p.len}});
  return {{"parts", a}, {"total", total()}};
}

Layout CondenserLayout(const ParameterProfile& p) {
  Layout l;
  if (p.algorithm == Algorithm::kNmCond) {
    l.parts.push_back({"v1", p.v1_len});
    for (std::size_t i = 1; i <= 2 * p.y1_len; ++i) l.parts.push_back({"v2[" + std::to_string(i) + "]", p.row_len});
  } else if (p.algorithm == Algorithm::kNmCondLinear) {
    l.parts.push_back({"nm2", p.nm2_len});
    for (std::size_t i = 1; i <= p.C; ++i) {
      l.parts.push_back({"v[" + std::to_string(i) + "]", Pow2(p.C - i) * p.v_unit});
    }
  } else {
    throw Error("layout is defined for condenser profiles only");
  }
  return l;
}

}  // namespace nmc
