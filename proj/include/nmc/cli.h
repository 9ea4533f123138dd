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

#ifndef NMC_CLI_H_
#define NMC_CLI_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nmc/adversary.h"
#include "nmc/condenser_verify.h"
#include "nmc/profile.h"
#include "nmc/sources.h"

namespace nmc {

// Stable across commands.
enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2 };

// Thrown for configuration and usage problems; maps to kExitUsage.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Command-line overrides shared by every subcommand.
struct CliOptions {
  std::string config;
  std::optional<std::string> seed_hex;
  bool exact = false;
  std::optional<std::uint64_t> trials;
  std::optional<std::string> out_dir;
  bool strict_baselines = false;
  bool record_baselines = false;  // attack-suite: also write baselines.json
  std::vector<std::string> inputs;  // report: files to render
};

// A JSON experiment description. Relative paths resolve against the
// directory holding the config file.
//   profile, registry, baselines: paths
//   source: SourceSpec JSON (default: uniform on n bits)
//   seed: hex master seed; runs: honest run count
//   script: id of a built-in script or an inline script object (run)
//   scripts: "builtin", a script file path, or an inline array (attack-suite)
//   exact / trials: attack mode; out: output directory
//   query: oracle query object
struct ExperimentConfig {
  std::filesystem::path base_dir;
  nlohmann::json raw;

  static ExperimentConfig Load(const std::string& path);
  static ExperimentConfig FromJson(nlohmann::json j, std::filesystem::path base_dir);

  bool has(const std::string& key) const { return raw.contains(key); }
  std::filesystem::path Path(const std::string& key) const;
  ParameterProfile Profile() const;
  SourceSpec Source(std::size_t n) const;
  std::uint64_t Seed(const CliOptions& opt) const;
  std::filesystem::path OutDir(const CliOptions& opt) const;
  AttackOptions Attack(const CliOptions& opt) const;
};

// Writes `text` to `path` through a temporary file and a rename.
void WriteFileAtomic(const std::filesystem::path& path, const std::string& text);

// Profile must validate in its own mode and be executable.
void RequireRunnable(const ParameterProfile& p);

nlohmann::json NmCondReportToJson(const NmCondReport& r);

// Baseline comparison for one attack report. Returns the mismatching
// fields, or "missing" when the baselines hold no entry for the script.
std::vector<std::string> CompareBaseline(const AttackReport& r, const nlohmann::json& baselines);
nlohmann::json BaselineEntry(const AttackReport& r);

int cmd_certify(const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_run(const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_attack_suite(const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_oracle(const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_report(const CliOptions& opt, std::ostream& out, std::ostream& err);

// Parses argv with CLI11 and dispatches. Returns the exit code.
int RunCli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace nmc

#endif  // NMC_CLI_H_
