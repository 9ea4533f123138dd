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

#include "nmc/registry.h"

#include <fstream>
#include <sstream>

#include "nmc/edit_code.h"
#include "nmc/fn_table.h"
#include "nmc/mac.h"
#include "nmc/oracle.h"
#include "nmc/primitives.h"
#include "nmc/seeds.h"
#include "nmc/somewhere.h"
#include "nmc/sources.h"

namespace nmc {
namespace {

using nlohmann::json;

const std::pair<PrimitiveKind, const char*> kKindNames[] = {
    {PrimitiveKind::kStrongExt, "strong_ext"},   {PrimitiveKind::kTwoSourceExt, "two_source_ext"},
    {PrimitiveKind::kNmExt, "nm_ext"},           {PrimitiveKind::kMac, "mac"},
    {PrimitiveKind::kSomewhereCond, "somewhere_cond"}, {PrimitiveKind::kEditCode, "edit_code"},
};

std::string SupportString(const std::vector<std::uint32_t>& pts, std::size_t n) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ",";
    os << BitString::FromU64(pts[i], n).ToString();
  }
  os << "}";
  return os.str();
}

std::string TableString(const AdversaryTable& a, std::size_t d) {
  std::ostringstream os;
  os << "A=[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << BitString::FromU64(a[i], d).ToString();
  }
  os << "]";
  return os.str();
}

void RequireInputs(const PrimitiveId& p, std::size_t count) {
  if (p.input_lengths.size() != count) throw Error("primitive '" + p.name + "' has the wrong number of inputs");
}

}  // namespace

std::string KindName(PrimitiveKind k) {
  for (const auto& [kind, name] : kKindNames) {
    if (kind == k) return name;
  }
  throw Error("unknown primitive kind");
}

PrimitiveKind ParseKind(const std::string& s) {
  for (const auto& [kind, name] : kKindNames) {
    if (s == name) return kind;
  }
  throw Error("unknown primitive kind '" + s + "'");
}

json PrimitiveId::ToJson() const {
  json j = {{"name", name},
            {"kind", KindName(kind)},
            {"input_lengths", input_lengths},
            {"output_len", output_len},
            {"claimed_k", claimed_k},
            {"claimed_k2", claimed_k2},
            {"rows", rows},
            {"param_r", param_r},
            {"claimed_eps", ToString(claimed_eps)},
            {"family_cap", family_cap},
            {"family_samples", family_samples},
            {"adversary_cap", adversary_cap},
            {"adversary_samples", adversary_samples},
            {"seed", SeedToHex(seed)}};
  return j;
}

PrimitiveId PrimitiveId::FromJson(const json& j) {
  PrimitiveId p;
  p.name = j.at("name").get<std::string>();
  p.kind = ParseKind(j.at("kind").get<std::string>());
  p.input_lengths = j.at("input_lengths").get<std::vector<std::size_t>>();
  p.output_len = j.at("output_len").get<std::size_t>();
  p.claimed_k = j.value("claimed_k", std::size_t{0});
  p.claimed_k2 = j.value("claimed_k2", std::size_t{0});
  p.rows = j.value("rows", std::size_t{0});
  p.param_r = j.value("param_r", std::size_t{0});
  p.claimed_eps = ParseRational(j.at("claimed_eps").get<std::string>());
  p.family_cap = j.value("family_cap", std::size_t{500});
  p.family_samples = j.value("family_samples", std::size_t{0});
  p.adversary_cap = j.value("adversary_cap", std::uint64_t{100000});
  p.adversary_samples = j.value("adversary_samples", std::size_t{0});
  p.seed = ParseSeedHex(j.value("seed", std::string("1")));
  return p;
}

json Certification::ToJson() const {
  return {{"name", name},         {"kind", kind},         {"passed", passed},
          {"measured", ToString(measured)}, {"claimed", ToString(claimed)}, {"witness", witness},
          {"instances", instances}};
}

Certification Certification::FromJson(const json& j) {
  Certification c;
  c.name = j.at("name").get<std::string>();
  c.kind = j.at("kind").get<std::string>();
  c.passed = j.at("passed").get<bool>();
  c.measured = ParseRational(j.at("measured").get<std::string>());
  c.claimed = ParseRational(j.at("claimed").get<std::string>());
  c.witness = j.at("witness").get<std::string>();
  c.instances = j.at("instances").get<std::size_t>();
  return c;
}

Certification CertifyPrimitive(const PrimitiveId& p) {
  Certification c;
  c.name = p.name;
  c.kind = KindName(p.kind);
  c.claimed = p.claimed_eps;
  const std::size_t m = p.output_len;
  switch (p.kind) {
    case PrimitiveKind::kStrongExt: {
      RequireInputs(p, 2);
      const std::size_t n = p.input_lengths[0], d = p.input_lengths[1];
      FnTable t = FnTable::Build(n, d, m, [m](const BitString& x, const BitString& y) { return ext_hash(x, y, m); });
      FlatFamily fam = MakeFlatFamily(n, p.claimed_k, p.family_cap, p.family_samples, p.seed);
      ExtractorReport r = verify_strong_extractor(t, fam.sources, p.claimed_k);
      c.measured = r.worst_distance;
      c.instances = r.sources_checked;
      c.witness = "X=" + SupportString(fam.sources[r.witness_source].points, n);
      c.passed = c.measured <= c.claimed;
      break;
    }
    case PrimitiveKind::kTwoSourceExt: {
      RequireInputs(p, 2);
      const std::size_t n1 = p.input_lengths[0], n2 = p.input_lengths[1];
      FnTable t = FnTable::Build(n1, n2, m,
                                 [m](const BitString& x, const BitString& y) { return two_source_ip(x, y, m); });
      FlatFamily fam = MakeFlatFamily(n1, p.claimed_k, p.family_cap, p.family_samples, p.seed);
      TwoSourceReport r = verify_two_source(t, fam.sources, p.claimed_k2);
      c.measured = r.worst_distance;
      c.instances = fam.sources.size();
      c.witness = "X=" + SupportString(fam.sources[r.witness_x].points, n1) + " Y=" + SupportString(r.witness_y, n2);
      c.passed = c.measured <= c.claimed;
      break;
    }
    case PrimitiveKind::kNmExt: {
      RequireInputs(p, 2);
      const std::size_t n = p.input_lengths[0], d = p.input_lengths[1];
      FnTable t = FnTable::Build(n, d, m, [m](const BitString& x, const BitString& y) { return nm_ip(x, y, m); });
      FlatFamily fam = MakeFlatFamily(n, p.claimed_k, p.family_cap, p.family_samples, p.seed);
      auto advs = EnumerateAdversaries(d, p.adversary_cap, p.adversary_samples, DeriveSeed(p.seed, "adversaries"));
      NmExtReport r = verify_nm_extractor(t, fam.sources, advs);
      c.measured = r.worst_distance;
      c.instances = fam.sources.size() * advs.size();
      c.witness = "X=" + SupportString(fam.sources[r.witness_source].points, n) + " " +
                  TableString(r.witness_adversary, d);
      c.passed = c.measured <= c.claimed;
      break;
    }
    case PrimitiveKind::kMac: {
      RequireInputs(p, 2);
      const std::size_t v = m;
      if (p.input_lengths[0] != 2 * v || v == 0 || p.input_lengths[1] % v != 0) {
        throw Error("mac signature must be [2v, chunks*v] -> v");
      }
      const std::size_t chunks = p.input_lengths[1] / v;
      c.measured = mac_forgery_advantage(v, chunks);
      c.instances = std::size_t{1} << (2 * v);
      c.witness = "uniform key, " + std::to_string(chunks) + " chunks";
      c.passed = c.measured <= c.claimed;
      break;
    }
    case PrimitiveKind::kSomewhereCond: {
      RequireInputs(p, 1);
      const SomewhereCondenser& cond = LookupSomewhereCondenser(p.input_lengths[0], p.rows, m);
      SomewhereCertificate cert = CertifySomewhere(cond, p.claimed_k, p.claimed_k2);
      c.measured = cert.eps;
      c.instances = cert.sources;
      c.witness = cond.name + " X=" + SupportString(cert.witness, cond.n);
      c.passed = c.measured <= c.claimed;
      break;
    }
    case PrimitiveKind::kEditCode: {
      RequireInputs(p, 1);
      EditCode code{p.input_lengths[0], p.param_r};
      if (code.lambda_c() != m) throw Error("edit code output length must be lambda_m * (r + 2)");
      EditCertificate cert = CertifyEditCode(code);
      c.measured = cert.e;
      c.instances = cert.pairs;
      c.witness = cert.witness_a.ToString() + " vs " + cert.witness_b.ToString();
      c.passed = c.measured >= c.claimed;
      break;
    }
  }
  return c;
}

Registry Registry::FromJson(const json& j) {
  Registry r;
  for (const auto& e : j.at("primitives")) {
    PrimitiveId p = PrimitiveId::FromJson(e);
    if (r.index_.count(p.name)) throw Error("duplicate primitive '" + p.name + "'");
    r.index_[p.name] = r.entries_.size();
    r.entries_.push_back(std::move(p));
  }
  return r;
}

Registry Registry::LoadManifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read registry manifest '" + path + "'");
  json j;
  try {
    in >> j;
    return FromJson(j);
  } catch (const json::exception& e) {
    throw Error("malformed registry manifest: " + std::string(e.what()));
  }
}

json Registry::ToJson() const {
  json arr = json::array();
  for (const auto& p : entries_) arr.push_back(p.ToJson());
  return {{"schema_version", 1}, {"primitives", arr}};
}

const PrimitiveId& Registry::Get(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error("unknown primitive '" + name + "'");
  return entries_[it->second];
}

void Registry::CheckCall(const std::string& name, const std::vector<std::size_t>& input_lengths,
                         std::size_t output_len) const {
  const PrimitiveId& p = Get(name);
  if (input_lengths != p.input_lengths || output_len != p.output_len) {
    throw Error("signature violation: call does not match '" + name + "'");
  }
}

BitString Registry::Call(const std::string& name, const std::vector<BitString>& inputs) const {
  const PrimitiveId& p = Get(name);
  std::vector<std::size_t> lens;
  for (const auto& b : inputs) lens.push_back(b.size());
  CheckCall(name, lens, p.output_len);
  switch (p.kind) {
    case PrimitiveKind::kStrongExt:
      return ext_hash(inputs[0], inputs[1], p.output_len);
    case PrimitiveKind::kTwoSourceExt:
      return two_source_ip(inputs[0], inputs[1], p.output_len);
    case PrimitiveKind::kNmExt:
      return nm_ip(inputs[0], inputs[1], p.output_len);
    case PrimitiveKind::kMac:
      return mac_tag(inputs[0], inputs[1], p.output_len);
    case PrimitiveKind::kEditCode:
      return edit_encode(EditCode{p.input_lengths[0], p.param_r}, inputs[0]);
    case PrimitiveKind::kSomewhereCond:
      return Concat(somewhere_condense(inputs[0], p.rows, p.output_len));
  }
  throw Error("unreachable");
}

std::vector<Certification> Registry::CertifyAll() const {
  std::vector<Certification> out;
  for (const auto& p : entries_) out.push_back(CertifyPrimitive(p));
  return out;
}

}  // namespace nmc
