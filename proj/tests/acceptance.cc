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
// Acceptance runner: one PASS/FAIL line per criterion, each with its
// runtime budget. Exits 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "nmc/adversary.h"
#include "nmc/aka_multi.h"
#include "nmc/condenser.h"
#include "nmc/condenser_verify.h"
#include "nmc/edit_code.h"
#include "nmc/fn_table.h"
#include "nmc/lemmas.h"
#include "nmc/mac.h"
#include "nmc/oracle.h"
#include "nmc/primitives.h"
#include "nmc/profile.h"
#include "nmc/protocol.h"
#include "nmc/registry.h"
#include "nmc/seeds.h"
#include "nmc/sources.h"
#include "nmc/topheavy.h"

namespace nmc {
namespace {

using nlohmann::json;

const std::string kData = NMC_DATA_DIR;

ParameterProfile Load(const std::string& name) { return ParameterProfile::Load(kData + "/profiles/" + name + ".json"); }

json LoadJson(const std::string& rel) {
  std::ifstream in(kData + "/" + rel);
  return json::parse(in);
}

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void Criterion(int id, const std::string& name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("error: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs <= budget_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, budget_s);
  std::cout << (pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << o.detail << " (" << timing
            << (in_time ? "" : ", over budget") << ")" << std::endl;
}

Outcome TopHeavy() {
  std::uint64_t failures_seen = 0, pairs8 = 0;
  for (std::size_t m = 1; m <= 8; ++m) {
    const TopHeavySweep s = CheckPairwiseTopHeavy(m);
    failures_seen += s.failures;
    if (m == 8) pairs8 = s.pairs;
  }
  return {failures_seen == 0 && pairs8 == 65280,
          std::to_string(pairs8) + " ordered pairs at m=8, " + std::to_string(failures_seen) + " failures"};
}

Outcome MacBound() {
  std::ostringstream d;
  bool ok = true;
  for (std::size_t v : {2, 3}) {
    for (std::size_t c = 1; c <= 4; ++c) {
      const Rational adv = mac_forgery_advantage(v, c);
      const Rational bound(static_cast<long>(c), 1L << v);
      ok = ok && adv <= bound;
      d << "v" << v << "c" << c << " " << ToString(adv) << "<=" << ToString(bound) << " ";
    }
  }
  return {ok, d.str()};
}

Outcome MacConditionalBound() {
  std::ostringstream d;
  bool ok = true;
  for (std::size_t v : {2, 3}) {
    const std::uint32_t space = 1u << (2 * v);
    // Lower half and a seeded random half of the key space.
    std::vector<std::uint32_t> low;
    for (std::uint32_t k = 0; k < space / 2; ++k) low.push_back(k);
    std::vector<std::uint32_t> rnd = RandomSubset(2 * v, space / 2, 1);
    for (const auto* keys : {&low, &rnd}) {
      const KeyLeakDist dist = KeyLeakDist::FlatOn(*keys);
      for (std::size_t c = 1; c <= 4; ++c) {
        const Rational adv = mac_forgery_advantage(v, c, dist);
        const Rational bound = MacForgeryBound(v, c, dist);
        ok = ok && adv <= bound;
        if (c == 4) d << "v" << v << (keys == &low ? " low" : " rnd") << " c4 " << ToString(adv) << "<=" << ToString(bound) << " ";
      }
    }
  }
  return {ok, d.str()};
}

Outcome StrongExtractor() {
  const Registry reg = Registry::LoadManifest(kData + "/registry.json");
  PrimitiveId id = reg.Get("hash-ext");
  if (id.input_lengths[0] != 8 || id.claimed_k != 6 || id.output_len != 2 || id.family_cap != 500) {
    return {false, "registry entry hash-ext does not have n=8 k=6 m=2 cap=500"};
  }
  const Certification c = CertifyPrimitive(id);
  const Rational bound(1, 8);  // 2^((m-k)/2 - 1)
  return {c.measured <= bound, "worst distance " + ToString(c.measured) + " <= 1/8 over " +
                                   std::to_string(c.instances) + " flat 6-sources"};
}

Outcome NmExtractor() {
  const json base = LoadJson("baselines/nm-ext.json");
  const FnTable t = FnTable::Build(2, 2, 1, [](const BitString& x, const BitString& y) { return nm_ip(x, y, 1); });
  const auto advs = EnumerateAdversaries(2, 1000, 0, 1);
  const FlatFamily fam = MakeFlatFamily(2, base.at("k").get<std::size_t>(), 500, 0, 1);
  const NmExtReport r = verify_nm_extractor(t, fam.sources, advs);
  const std::string want = base.at("worst_distance").get<std::string>();
  return {advs.size() == 81 && r.adversaries_checked == 81 && ToString(r.worst_distance) == want,
          std::to_string(r.adversaries_checked) + " adversaries, worst " + ToString(r.worst_distance) +
              ", baseline " + want};
}

Outcome CondenserShape() {
  const ParameterProfile a = Load("nmcond-paper");
  const std::size_t d = a.y1_len;
  const Layout la = CondenserLayout(a);
  bool ok = la.parts.size() == 1 + 2 * d && la.parts[0].len == 8 * d * d;
  for (std::size_t i = 1; i < la.parts.size(); ++i) ok = ok && la.parts[i].len == d;
  ok = ok && la.total() == 8 * d * d + 2 * d * d;
  const ParameterProfile b = Load("nmcond2-paper");
  const Layout lb = CondenserLayout(b);
  const std::size_t pc = std::size_t{1} << b.C;
  const bool ok2 = lb.parts[0].len == pc * 4 * b.ell && lb.total() == pc * 4 * b.ell + (pc - 1) * 2 * b.ell;
  return {ok && ok2, "nm_cond " + std::to_string(la.total()) + " bits (d=" + std::to_string(d) +
                         "), nm_cond_linear " + std::to_string(lb.total()) + " bits (C=" + std::to_string(b.C) +
                         ", ell=" + std::to_string(b.ell) + ")"};
}

Outcome CondenserNonMalleability() {
  const ParameterProfile p = Load("nmcond-micro");
  const json base = LoadJson("baselines/nmcond-micro.json");
  const json& q = base.at("query");
  const FlatFamily fam = MakeFlatFamily(p.n, q.at("k").get<std::size_t>(), q.at("cap").get<std::size_t>(),
                                        q.at("samples").get<std::size_t>(), ParseSeedHex(q.at("seed").get<std::string>()));
  NmCondOptions o;
  o.kprime = q.at("kprime").get<std::size_t>();
  o.prefix_len = p.y1_len;
  o.v1_len = p.v1_len;
  const NmCondReport r = verify_nm_condenser(NmCondTable(p), fam.sources, o);
  bool ok = r.sources_checked == base.at("sources_checked").get<std::size_t>();
  for (const auto& [name, c] : {std::pair{"all", r.all}, {"same_prefix", r.same_prefix}, {"diff_prefix", r.diff_prefix}}) {
    ok = ok && ToString(c.worst.eps_seed) == base.at(name).at("eps_seed").get<std::string>() &&
         ToString(c.worst.eps_inner) == base.at(name).at("eps_inner").get<std::string>();
  }
  return {ok, "(eps_seed, eps_inner) = (" + ToString(r.all.worst.eps_seed) + ", " + ToString(r.all.worst.eps_inner) +
                  ") over " + std::to_string(r.sources_checked) + " sources"};
}

Outcome ProtocolCorrectness() {
  std::size_t agree1 = 0, agree2 = 0;
  const ParameterProfile p1 = Load("aka-desk");
  const ParameterProfile p2 = Load("aka2-desk");
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const Tapes t1 = DeriveTapes(0x5eed, i, AkaAliceTapeLen(p1), AkaBobTapeLen(p1));
    agree1 += RunAkaHonest(BitRng(t1.source_seed).Bits(p1.n), t1, p1, "r").Agree();
    const Tapes t2 = DeriveTapes(0x5eed, i, Aka2AliceTapeLen(p2), Aka2BobTapeLen(p2));
    agree2 += RunAka2Honest(BitRng(t2.source_seed).Bits(p2.n), t2, p2, "r").Agree();
  }
  return {agree1 == 1000 && agree2 == 1000,
          "two-round " + std::to_string(agree1) + "/1000, multi-round " + std::to_string(agree2) + "/1000 agree"};
}

Outcome AttackSuites() {
  std::ostringstream d;
  bool ok = true;
  for (const auto& [cfg_name, algo] : {std::pair{"aka-micro-suite", Algorithm::kAka}, {"aka2-micro-suite", Algorithm::kAka2}}) {
    const json cfg = LoadJson(std::string("configs/") + cfg_name + ".json");
    const ParameterProfile p = Load(algo == Algorithm::kAka ? "aka-micro" : "aka2-micro");
    const SourceSpec src = SourceSpec::FromJson(cfg.at("source"));
    const json base = LoadJson(algo == Algorithm::kAka ? "baselines/aka-micro.json" : "baselines/aka2-micro.json");
    std::size_t matched = 0, total = 0;
    for (const auto& s : BuiltinScripts(algo)) {
      ++total;
      const AttackReport r = run_with_adversary(p, src, s, {});
      const json& b = base.at("baselines").at(s.id);
      const bool m = ToString(r.success) == b.at("success").get<std::string>() &&
                     ToString(r.e_q) == b.at("e_q").get<std::string>() && r.product_holds();
      if (!m) d << s.id << " differs; ";
      matched += m;
    }
    ok = ok && matched == total;
    d << p.name << " " << matched << "/" << total << " match with product identity; ";
  }
  return {ok, d.str()};
}

Outcome Leakage() {
  const ParameterProfile a = Load("aka-paper");
  const ParameterProfile b = Load("aka2-paper");
  const std::size_t bound = 5 * b.lambda_c;  // 5 d1 / rho with rho = lambda_m / lambda_c, d1 = lambda_m
  const bool ok = a.LeakageTotal() == 4 * a.s + a.s + 2 * a.s && b.LeakageTotal() <= bound &&
                  b.d1 == b.lambda_m;
  return {ok, "two-round " + std::to_string(a.LeakageTotal()) + " = 7s bits, multi-round " +
                  std::to_string(b.LeakageTotal()) + " <= " + std::to_string(bound) + " bits"};
}

Outcome EditCodeDistance() {
  const Registry reg = Registry::LoadManifest(kData + "/registry.json");
  const PrimitiveId& id = reg.Get("marker-code");
  const Certification reg_cert = CertifyPrimitive(id);
  std::ostringstream d;
  bool ok = reg_cert.passed;
  d << "registered e " << ToString(id.claimed_eps) << " certified " << ToString(reg_cert.measured) << "; ";
  for (std::size_t lm = 1; lm <= 8; ++lm) {
    const EditCode code{lm, id.param_r};
    const EditCertificate c = CertifyEditCode(code);
    // Independent serial pass: every pair must be at least e * lambda_c apart.
    const EditCertificate s = CertifyEditCodeSerial(code);
    const bool good = Rational(static_cast<long>(s.min_distance)) >= c.e * static_cast<unsigned long>(code.lambda_c());
    ok = ok && good && s.min_distance == c.min_distance && IsInjective(code);
    d << "lm" << lm << ":" << c.min_distance << " ";
  }
  return {ok, d.str()};
}

Outcome Lemmas() {
  std::size_t violations = 0, instances = 0;
  std::ostringstream d;
  for (const LemmaResult& r : RunLemmaSuite(200, 1)) {
    violations += r.violations;
    instances += r.instances;
    d << r.name << " " << r.violations << "/" << r.instances << "; ";
  }
  return {violations == 0 && instances > 0, d.str()};
}

}  // namespace
}  // namespace nmc

int main() {
  using namespace nmc;
  Criterion(1, "top-heavy exhaustion m=1..8", 5, TopHeavy);
  Criterion(2, "MAC forgery bound ceil(d/v) 2^-v", 60, MacBound);
  Criterion(3, "MAC bound with a half-space key", 60, MacConditionalBound);
  Criterion(4, "strong extractor certification n=8 k=6 m=2", 120, StrongExtractor);
  Criterion(5, "non-malleable extractor sweep n=d=2 m=1", 30, NmExtractor);
  Criterion(6, "condenser output layouts", 1, CondenserShape);
  Criterion(7, "condenser non-malleability at micro scale", 300, CondenserNonMalleability);
  Criterion(8, "honest protocol runs", 60, ProtocolCorrectness);
  Criterion(9, "attack suite regressions", 300, AttackSuites);
  Criterion(10, "leakage ledger", 1, Leakage);
  Criterion(11, "edit code distance", 120, EditCodeDistance);
  Criterion(12, "min-entropy lemma suites on 200 joints", 120, Lemmas);
  return failures == 0 ? 0 : 1;
}
