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

#include "nmc/cli.h"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "nmc/aka_multi.h"
#include "nmc/condenser.h"
#include "nmc/lemmas.h"
#include "nmc/lookahead.h"
#include "nmc/mac.h"
#include "nmc/protocol.h"
#include "nmc/registry.h"
#include "nmc/seeds.h"

namespace nmc {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

json ReadJsonFile(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

ExperimentConfig LoadConfig(const CliOptions& opt) {
  if (opt.config.empty()) throw UsageError("--config is required");
  return ExperimentConfig::Load(opt.config);
}

BitString DrawX(const SourceSpec& src, BitRng& rng) {
  if (src.kind == SourceKind::kUniform) return rng.Bits(src.n);
  if (src.kind == SourceKind::kFlat) return src.points[rng.Below(src.points.size())];
  // Explicit: invert the CDF on a 2^62 grid of the common denominator.
  mpz_class lcm = 1;
  for (const auto& q : src.probs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  if (!lcm.fits_ulong_p()) throw Error("source denominators too large to sample");
  std::uint64_t r = rng.Below(lcm.get_ui());
  for (std::size_t i = 0; i < src.points.size(); ++i) {
    const std::uint64_t w = mpz_class(src.probs[i].get_num() * (lcm / src.probs[i].get_den())).get_ui();
    if (r < w) return src.points[i];
    r -= w;
  }
  return src.points.back();
}

std::string Pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

// Certifies every registry entry; returns the certifications.
std::vector<Certification> CertifyRegistry(const ExperimentConfig& cfg) {
  if (!cfg.has("registry")) throw UsageError("config has no registry manifest");
  Registry reg;
  try {
    reg = Registry::LoadManifest(cfg.Path("registry").string());
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return reg.CertifyAll();
}

int RunHonest(const ExperimentConfig& cfg, const CliOptions& opt, const ParameterProfile& p, std::ostream& out) {
  const fs::path dir = cfg.OutDir(opt);
  const std::uint64_t master = cfg.Seed(opt);
  const std::size_t runs = cfg.raw.value("runs", std::size_t{1});
  const SourceSpec src = cfg.Source(p.n);
  const bool aka = p.algorithm == Algorithm::kAka;
  if (!aka && p.algorithm != Algorithm::kAka2) {
    // Condenser and look-ahead profiles: one output record per run.
    std::string lines;
    for (std::size_t i = 0; i < runs; ++i) {
      const std::uint64_t run = DeriveSeed(master, "run", i);
      BitRng xr(DeriveSeed(run, "source"));
      BitRng yr(DeriveSeed(run, "seed"));
      const BitString x = DrawX(src, xr);
      json rec = {{"schema_version", 1}, {"run_id", SeedToHex(master) + "-" + std::to_string(i)}, {"x", x.ToHex()}};
      if (p.algorithm == Algorithm::kLookahead) {
        const BitString q = yr.Bits(p.y2_len);
        const auto rows = la_ext(x, q, q.Slice(0, p.s0_len), p.t, p.row_len);
        rec["q"] = q.ToHex();
        rec["rows"] = json::array();
        for (const auto& r : rows) rec["rows"].push_back(r.ToString());
      } else {
        const BitString y = yr.Bits(p.y1_len + p.y2_len);
        const CondenserOutput o =
            p.algorithm == Algorithm::kNmCond ? nm_cond(x, y, p) : nm_cond_linear(x, y, p);
        rec["y"] = y.ToHex();
        rec["z"] = o.z.ToHex();
        rec["z_len"] = o.z.size();
        rec["layout"] = o.layout.ToJson();
      }
      lines += rec.dump() + "\n";
    }
    WriteFileAtomic(dir / "outputs.jsonl", lines);
    out << "wrote " << runs << " output records to " << (dir / "outputs.jsonl").string() << "\n";
    return kExitOk;
  }
  std::string jsonl;
  std::size_t agree = 0, alice_rejects = 0, bob_rejects = 0;
  const std::size_t alen = aka ? AkaAliceTapeLen(p) : Aka2AliceTapeLen(p);
  const std::size_t blen = aka ? AkaBobTapeLen(p) : Aka2BobTapeLen(p);
  for (std::size_t i = 0; i < runs; ++i) {
    const Tapes tapes = DeriveTapes(master, i, alen, blen);
    BitRng xr(tapes.source_seed);
    const BitString x = DrawX(src, xr);
    const std::string id = SeedToHex(master) + "-" + std::to_string(i);
    const Transcript tr = aka ? RunAkaHonest(x, tapes, p, id) : RunAka2Honest(x, tapes, p, id);
    jsonl += tr.ToJsonl();
    agree += tr.Agree();
    alice_rejects += tr.alice.rejected;
    bob_rejects += tr.bob.rejected;
  }
  json summary = {{"schema_version", 1},
                  {"profile", p.name},
                  {"seed", SeedToHex(master)},
                  {"runs", runs},
                  {"agree", agree},
                  {"alice_rejects", alice_rejects},
                  {"bob_rejects", bob_rejects},
                  {"key_len", p.FinalKeyLen()},
                  {"outcome", agree == runs ? "agree" : "disagree"}};
  WriteFileAtomic(dir / "transcript.jsonl", jsonl);
  WriteFileAtomic(dir / "outcome.json", summary.dump(2) + "\n");
  out << "outcome " << summary["outcome"].get<std::string>() << ": " << agree << "/" << runs
      << " runs agree, key length " << p.FinalKeyLen() << "\n";
  return agree == runs ? kExitOk : kExitViolation;
}

AdversaryScript ResolveScript(const json& j, const ParameterProfile& p) {
  if (j.is_object()) return AdversaryScript::FromJson(j);
  const std::string id = j.get<std::string>();
  for (const auto& s : BuiltinScripts(p.algorithm)) {
    if (s.id == id) return s;
  }
  throw UsageError("unknown script '" + id + "'");
}

std::vector<AdversaryScript> ResolveScripts(const ExperimentConfig& cfg, const ParameterProfile& p) {
  if (!cfg.has("scripts")) throw UsageError("config has no scripts");
  const json& s = cfg.raw.at("scripts");
  if (s.is_string() && s.get<std::string>() == "builtin") return BuiltinScripts(p.algorithm);
  if (s.is_string()) return LoadScripts(cfg.Path("scripts").string());
  if (!s.is_array()) throw UsageError("scripts must be \"builtin\", a path or an array");
  std::vector<AdversaryScript> out;
  for (const auto& item : s) out.push_back(ResolveScript(item, p));
  return out;
}

std::string RenderAttackTable(const std::vector<AttackReport>& reports, const std::vector<std::string>& status) {
  std::ostringstream os;
  os << Pad("script", 24) << Pad("mode", 8) << Pad("success", 14) << Pad("y_change", 14) << Pad("E_q", 14)
     << Pad("product", 9) << "baseline\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    os << Pad(r.strategy, 24) << Pad(r.exact ? "exact" : "sampled", 8) << Pad(ToString(r.success), 14)
       << Pad(ToString(r.y_change), 14) << Pad(ToString(r.e_q), 14) << Pad(r.product_holds() ? "holds" : "FAILS", 9)
       << (i < status.size() ? status[i] : "-") << "\n";
  }
  return os.str();
}

json LemmaResultsJson(const std::vector<LemmaResult>& rs) {
  json arr = json::array();
  for (const auto& r : rs) arr.push_back({{"name", r.name}, {"instances", r.instances}, {"violations", r.violations}});
  return arr;
}

std::string AdversaryToString(const AdversaryTable& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s;
}

json CaseJson(const NmCondCase& c) {
  return {{"eps_star", ToString(c.worst.eps_star)},
          {"eps_seed", ToString(c.worst.eps_seed)},
          {"eps_inner", ToString(c.worst.eps_inner)},
          {"witness_source", c.witness_source},
          {"witness_adversary", AdversaryToString(c.witness_adversary)},
          {"v1_entropy", c.v1_entropy + 0.0},
          {"v2_entropy", c.v2_entropy + 0.0}};
}

}  // namespace

ExperimentConfig ExperimentConfig::Load(const std::string& path) {
  const fs::path p(path);
  return FromJson(ReadJsonFile(p), p.parent_path());
}

ExperimentConfig ExperimentConfig::FromJson(json j, fs::path base_dir) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  static const std::vector<std::string> kKeys = {"schema_version", "comment", "profile", "registry", "baselines",
                                                 "source",         "seed",    "runs",    "script",   "scripts",
                                                 "exact",          "trials",  "out",     "query"};
  for (const auto& item : j.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), item.key()) == kKeys.end()) {
      throw UsageError("unknown config key '" + item.key() + "'");
    }
  }
  ExperimentConfig c;
  c.raw = std::move(j);
  c.base_dir = std::move(base_dir);
  return c;
}

fs::path ExperimentConfig::Path(const std::string& key) const {
  if (!raw.contains(key) || !raw.at(key).is_string()) throw UsageError("config key '" + key + "' must be a path");
  fs::path p(raw.at(key).get<std::string>());
  return (p.is_absolute() ? p : base_dir / p).lexically_normal();
}

ParameterProfile ExperimentConfig::Profile() const {
  if (!has("profile")) throw UsageError("config has no profile");
  try {
    return ParameterProfile::Load(Path("profile").string());
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

SourceSpec ExperimentConfig::Source(std::size_t n) const {
  if (!has("source")) {
    SourceSpec s;
    s.kind = SourceKind::kUniform;
    s.n = n;
    return s;
  }
  SourceSpec s = SourceSpec::FromJson(raw.at("source"));
  if (s.n != n) throw UsageError("source length " + std::to_string(s.n) + " does not match n = " + std::to_string(n));
  return s;
}

std::uint64_t ExperimentConfig::Seed(const CliOptions& opt) const {
  if (opt.seed_hex) return ParseSeedHex(*opt.seed_hex);
  if (has("seed")) return ParseSeedHex(raw.at("seed").get<std::string>());
  return 0;
}

fs::path ExperimentConfig::OutDir(const CliOptions& opt) const {
  if (opt.out_dir) return fs::path(*opt.out_dir);
  if (has("out")) return Path("out");
  return fs::path("nmc-out");
}

AttackOptions ExperimentConfig::Attack(const CliOptions& opt) const {
  AttackOptions a;
  a.seed = Seed(opt);
  a.exact = raw.value("exact", !raw.contains("trials"));
  a.trials = raw.value("trials", std::uint64_t{0});
  if (opt.exact) a.exact = true;
  if (opt.trials) {
    a.exact = false;
    a.trials = *opt.trials;
  }
  if (!a.exact && a.trials == 0) throw UsageError("sampling mode needs --trials N");
  return a;
}

void WriteFileAtomic(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    if (!o) throw Error("cannot write " + tmp.string());
    o << text;
    if (!o) throw Error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

void RequireRunnable(const ParameterProfile& p) {
  const auto v = validate_profile(p);
  if (!v.empty()) throw UsageError("profile '" + p.name + "' violates " + v.front().clause + " (" + v.front().detail + ")");
  const auto ex = ExecutabilityViolations(p);
  if (!ex.empty()) {
    throw UsageError("profile '" + p.name + "' is not executable by the desk instantiations: " + ex.front().clause);
  }
}

json NmCondReportToJson(const NmCondReport& r) {
  return {{"schema_version", 1},
          {"sources_checked", r.sources_checked},
          {"all", CaseJson(r.all)},
          {"same_prefix", CaseJson(r.same_prefix)},
          {"diff_prefix", CaseJson(r.diff_prefix)}};
}

json BaselineEntry(const AttackReport& r) {
  return {{"success", ToString(r.success)},   {"y_change", ToString(r.y_change)},
          {"alice_accept", ToString(r.alice_accept)}, {"bob_accept", ToString(r.bob_accept)},
          {"e_q", ToString(r.e_q)}};
}

std::vector<std::string> CompareBaseline(const AttackReport& r, const json& baselines) {
  if (!baselines.contains(r.strategy)) return {"missing"};
  const json now = BaselineEntry(r);
  std::vector<std::string> diff;
  for (const auto& [field, value] : baselines.at(r.strategy).items()) {
    if (!now.contains(field)) {
      diff.push_back(field + " (unknown field)");
    } else if (ParseRational(value.get<std::string>()) != ParseRational(now.at(field).get<std::string>())) {
      diff.push_back(field + " " + now.at(field).get<std::string>() + " != " + value.get<std::string>());
    }
  }
  return diff;
}

int cmd_certify(const CliOptions& opt, std::ostream& out, std::ostream& err) {
  const ExperimentConfig cfg = LoadConfig(opt);
  const auto certs = CertifyRegistry(cfg);
  const fs::path dir = cfg.OutDir(opt);
  json all = json::array();
  bool ok = true;
  for (const auto& c : certs) {
    WriteFileAtomic(dir / ("certify-" + c.name + ".json"), c.ToJson().dump(2) + "\n");
    all.push_back(c.ToJson());
    out << Pad(c.name, 24) << Pad(c.kind, 16) << (c.passed ? "PASS " : "FAIL ") << "measured " << ToString(c.measured)
        << " claimed " << ToString(c.claimed) << "\n";
    if (!c.passed) {
      ok = false;
      err << "contract violated by " << c.name << ": " << c.witness << "\n";
    }
  }
  WriteFileAtomic(dir / "certifications.json", json{{"schema_version", 1}, {"certifications", all}}.dump(2) + "\n");
  return ok ? kExitOk : kExitViolation;
}

int cmd_run(const CliOptions& opt, std::ostream& out, std::ostream& err) {
  const ExperimentConfig cfg = LoadConfig(opt);
  const ParameterProfile p = cfg.Profile();
  RequireRunnable(p);
  for (const auto& c : CertifyRegistry(cfg)) {
    if (!c.passed) {
      err << "refusing to run: primitive " << c.name << " is not certified (" << c.witness << ")\n";
      return kExitViolation;
    }
  }
  if (!cfg.has("script")) return RunHonest(cfg, opt, p, out);
  if (p.algorithm != Algorithm::kAka && p.algorithm != Algorithm::kAka2) {
    throw UsageError("attack scripts need a protocol profile");
  }
  const AdversaryScript script = ResolveScript(cfg.raw.at("script"), p);
  const AttackReport rep = run_with_adversary(p, cfg.Source(p.n), script, cfg.Attack(opt));
  const fs::path path = cfg.OutDir(opt) / ("attack-" + script.id + ".json");
  WriteFileAtomic(path, rep.ToJson().dump(2) + "\n");
  out << "attack report " << path.string() << "\n" << RenderAttackTable({rep}, {});
  return rep.product_holds() ? kExitOk : kExitViolation;
}

int cmd_attack_suite(const CliOptions& opt, std::ostream& out, std::ostream& err) {
  const ExperimentConfig cfg = LoadConfig(opt);
  const ParameterProfile p = cfg.Profile();
  RequireRunnable(p);
  const auto scripts = ResolveScripts(cfg, p);
  const AttackOptions mode = cfg.Attack(opt);
  json baselines = json::object();
  if (cfg.has("baselines") && !(opt.record_baselines && !fs::exists(cfg.Path("baselines")))) {
    const json b = ReadJsonFile(cfg.Path("baselines"));
    baselines = b.at("baselines");
    if (b.contains("profile") && b.at("profile").get<std::string>() != p.name) {
      throw UsageError("baselines are for profile '" + b.at("profile").get<std::string>() + "'");
    }
  }
  const fs::path dir = cfg.OutDir(opt);
  std::vector<AttackReport> reports;
  std::vector<std::string> status;
  json recorded = json::object();
  bool ok = true;
  for (const auto& s : scripts) {
    AttackReport r = run_with_adversary(p, cfg.Source(p.n), s, mode);
    WriteFileAtomic(dir / ("attack-" + s.id + ".json"), r.ToJson().dump(2) + "\n");
    recorded[s.id] = BaselineEntry(r);
    if (!r.product_holds()) {
      ok = false;
      err << "product identity fails for " << s.id << "\n";
    }
    const auto diff = CompareBaseline(r, baselines);
    if (diff.size() == 1 && diff[0] == "missing") {
      status.push_back("missing");
      if (opt.strict_baselines) {
        ok = false;
        err << "missing baseline for " << s.id << "\n";
      }
    } else if (!diff.empty()) {
      ok = false;
      std::string d;
      for (const auto& x : diff) d += (d.empty() ? "" : "; ") + x;
      status.push_back("DRIFT");
      err << "baseline drift in " << s.id << ": " << d << "\n";
    } else {
      status.push_back("match");
    }
    reports.push_back(std::move(r));
  }
  json suite = json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    suite.push_back({{"strategy", reports[i].strategy}, {"baseline", status[i]}, {"report", reports[i].ToJson()}});
  }
  WriteFileAtomic(dir / "suite.json",
                  json{{"schema_version", 1}, {"profile", p.name}, {"reports", suite}}.dump(2) + "\n");
  if (opt.record_baselines) {
    json b = {{"schema_version", 1}, {"profile", p.name}, {"baselines", recorded}};
    if (cfg.has("source")) b["source"] = cfg.raw.at("source");
    WriteFileAtomic(dir / "baselines.json", b.dump(2) + "\n");
  }
  out << RenderAttackTable(reports, status);
  return ok ? kExitOk : kExitViolation;
}

int cmd_oracle(const CliOptions& opt, std::ostream& out, std::ostream& /*err*/) {
  const ExperimentConfig cfg = LoadConfig(opt);
  if (!cfg.has("query")) throw UsageError("config has no query");
  const json& q = cfg.raw.at("query");
  const std::string kind = q.at("kind").get<std::string>();
  json result = {{"schema_version", 1}, {"query", q}};
  int code = kExitOk;
  if (kind == "min_entropy") {
    const SourceSpec s = SourceSpec::FromJson(q.at("source"));
    result["min_entropy"] = s.MinEntropy();
    result["max_prob"] = ToString(s.ToDist().MaxProb());
  } else if (kind == "certify") {
    const Certification c = CertifyPrimitive(PrimitiveId::FromJson(q.at("primitive")));
    result["certification"] = c.ToJson();
    if (!c.passed) code = kExitViolation;
  } else if (kind == "mac_forgery") {
    const std::size_t v = q.at("v").get<std::size_t>();
    const std::size_t chunks = q.at("chunks").get<std::size_t>();
    const Rational adv = mac_forgery_advantage(v, chunks);
    const Rational bound = MacForgeryBound(v, chunks, KeyLeakDist::Uniform(v));
    result["advantage"] = ToString(adv);
    result["bound"] = ToString(bound);
    if (adv > bound) code = kExitViolation;
  } else if (kind == "lemmas") {
    const auto rs = RunLemmaSuite(q.value("count", std::size_t{200}), ParseSeedHex(q.value("seed", std::string("1"))));
    result["lemmas"] = LemmaResultsJson(rs);
    for (const auto& r : rs) {
      if (r.violations) code = kExitViolation;
    }
  } else if (kind == "nm_condenser") {
    const ParameterProfile p = cfg.Profile();
    RequireRunnable(p);
    const FlatFamily fam = MakeFlatFamily(p.n, q.at("k").get<std::size_t>(), q.value("cap", std::size_t{500}),
                                          q.value("samples", std::size_t{0}),
                                          ParseSeedHex(q.value("seed", std::string("1"))));
    NmCondOptions o;
    o.kprime = q.at("kprime").get<std::size_t>();
    o.prefix_len = p.y1_len;
    o.v1_len = p.v1_len;
    result["family"] = fam.description;
    result["report"] = NmCondReportToJson(verify_nm_condenser(NmCondTable(p), fam.sources, o));
  } else {
    throw UsageError("unknown oracle query '" + kind + "'");
  }
  WriteFileAtomic(cfg.OutDir(opt) / "oracle.json", result.dump(2) + "\n");
  out << result.dump(2) << "\n";
  return code;
}

int cmd_report(const CliOptions& opt, std::ostream& out, std::ostream& /*err*/) {
  if (opt.inputs.empty()) throw UsageError("report needs at least one JSON file");
  for (const auto& path : opt.inputs) {
    const json j = ReadJsonFile(path);
    out << "== " << path << "\n";
    if (j.contains("certifications")) {
      for (const auto& cj : j.at("certifications")) {
        const Certification c = Certification::FromJson(cj);
        out << Pad(c.name, 24) << Pad(c.kind, 16) << (c.passed ? "PASS " : "FAIL ") << "measured "
            << ToString(c.measured) << " claimed " << ToString(c.claimed) << "\n";
      }
    } else if (j.contains("reports")) {
      std::vector<AttackReport> rs;
      std::vector<std::string> st;
      for (const auto& e : j.at("reports")) {
        rs.push_back(AttackReport::FromJson(e.at("report")));
        st.push_back(e.value("baseline", "-"));
      }
      out << RenderAttackTable(rs, st);
    } else if (j.contains("strategy")) {
      const AttackReport r = AttackReport::FromJson(j);
      out << RenderAttackTable({r}, {});
      for (const auto& e : challenge_ledger(r).entries) {
        out << "  " << Pad(e.label, 28) << Pad(std::string(1, e.op), 3) << Pad(e.forced ? "forced" : "unforced", 10)
            << ToString(e.conditional) << (r.exact ? "" : " (approximate)") << "\n";
      }
    } else if (j.contains("outcome")) {
      out << "outcome " << j.at("outcome").get<std::string>() << ": " << j.at("agree") << "/" << j.at("runs")
          << " runs agree\n";
    } else {
      out << j.dump(2) << "\n";
    }
  }
  return kExitOk;
}

int RunCli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-malleable condenser and privacy amplification toolkit"};
  app.require_subcommand(1);
  CliOptions opt;
  std::string seed;
  std::uint64_t trials = 0;
  std::string out_dir;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "experiment config (JSON)");
    sub->add_option("--seed", seed, "master seed (hex)");
    auto* ex = sub->add_flag("--exact", opt.exact, "exact enumeration");
    sub->add_option("--trials", trials, "sampled trials")->excludes(ex);
    sub->add_option("--out", out_dir, "output directory");
    sub->add_flag("--strict-baselines", opt.strict_baselines, "fail on missing baselines");
  };
  auto* certify = app.add_subcommand("certify", "certify the registered primitives");
  auto* run = app.add_subcommand("run", "run a condenser or protocol");
  auto* suite = app.add_subcommand("attack-suite", "run adversary scripts against baselines");
  auto* oracle = app.add_subcommand("oracle", "ad-hoc exact oracle queries");
  auto* report = app.add_subcommand("report", "render JSON reports as tables");
  for (auto* s : {certify, run, suite, oracle}) add_common(s);
  suite->add_flag("--record-baselines", opt.record_baselines, "write baselines.json from this run");
  report->add_option("files", opt.inputs, "report files")->required();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!seed.empty()) opt.seed_hex = seed;
  if (trials > 0) opt.trials = trials;
  if (!out_dir.empty()) opt.out_dir = out_dir;
  try {
    if (*certify) return cmd_certify(opt, out, err);
    if (*run) return cmd_run(opt, out, err);
    if (*suite) return cmd_attack_suite(opt, out, err);
    if (*oracle) return cmd_oracle(opt, out, err);
    return cmd_report(opt, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace nmc
