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

#ifndef NMC_ADVERSARY_H_
#define NMC_ADVERSARY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nmc/bitstring.h"
#include "nmc/fn_table.h"
#include "nmc/profile.h"
#include "nmc/rational.h"
#include "nmc/schedule.h"
#include "nmc/sources.h"

namespace nmc {

// A deterministic channel strategy.
//
// flips: XOR masks given as bit positions per field. For the two-round
// protocol the fields are Y1, Y2, Y3 (first message) and W, T1, T2 (reply).
// For the multi-round protocol they are Y (the seed Bob receives), M (the
// codeword Eve steers Bob towards: Edit(Y xor mask_Y) xor mask_M) and W (the
// final W delivered to Alice).
//
// ops: block operations of the multi-round protocol (see ParseOps); empty
// means every block is relayed.
//
// best_guess: whenever Eve must supply a value she cannot copy, she sends the
// most likely correct value given her view (exact mode only). Otherwise she
// sends the relayed or a fixed value.
struct AdversaryScript {
  std::string id;
  std::string description;
  Algorithm protocol = Algorithm::kAka;
  std::map<std::string, std::vector<std::size_t>> flips;
  std::string ops;
  bool best_guess = false;

  bool passive() const;
  nlohmann::json ToJson() const;
  static AdversaryScript FromJson(const nlohmann::json& j);
};

std::vector<AdversaryScript> LoadScripts(const std::string& path);
nlohmann::json ScriptsToJson(const std::vector<AdversaryScript>& scripts);

// The built-in library. Bit positions fit every executable profile.
std::vector<AdversaryScript> BuiltinScripts(Algorithm protocol);

// Throws Error if a flip position exceeds its field or the schedule is not
// realizable for the profile.
void ValidateScript(const AdversaryScript& s, const ParameterProfile& p);

// A check Eve has to pass by supplying a value she could not copy.
struct LedgerEntry {
  std::string label;  // e.g. "alice T check, phase 1"
  char op = '-';      // D, I or A for scheduled blocks, '-' otherwise
  std::size_t phase = 0;
  bool forced = true;    // false for an A immediately followed by I
  std::uint64_t reached = 0;  // weight of runs that passed every earlier entry
  std::uint64_t passed = 0;   // ... and this one
  Rational conditional;       // passed / reached (1 when reached == 0)
};

struct AttackReport {
  static constexpr int kSchemaVersion = 1;
  std::string strategy;
  std::string description;
  std::string protocol;
  std::string profile;
  bool exact = true;
  std::uint64_t runs = 0;   // worlds or trials
  std::uint64_t total_weight = 0;
  std::size_t passes = 0;   // replay passes in exact mode
  std::string success_event = "both accept and R_A != R_B";
  Rational success;
  Rational y_change;        // both accept and Bob's seed differs from Alice's
  Rational alice_accept;
  Rational bob_accept;
  Rational both_accept;
  std::vector<LedgerEntry> ledger;
  Rational e_q;             // every ledger check passed, counted directly
  Rational ledger_product;  // product of the conditionals
  std::optional<Rational> purify_distance;  // exact mode only
  std::optional<ScheduleClass> schedule;

  bool product_holds() const { return e_q == ledger_product; }
  nlohmann::json ToJson() const;
  static AttackReport FromJson(const nlohmann::json& j);
};

// Exact-mode enumeration limit on (x, Alice tape, Bob tape) tuples.
inline constexpr std::uint64_t kMaxExactWorlds = std::uint64_t{1} << 22;

struct AttackOptions {
  bool exact = true;
  std::uint64_t trials = 0;  // sampling mode
  std::uint64_t seed = 0;    // sampling mode master seed
  bool serial = false;       // disable OpenMP
};

AttackReport run_with_adversary(const ParameterProfile& p, const SourceSpec& source, const AdversaryScript& script,
                                const AttackOptions& opt);

struct ChallengeLedger {
  bool approximate = false;  // sampling reports
  std::vector<LedgerEntry> entries;
};
ChallengeLedger challenge_ledger(const AttackReport& report);

// The seed map y -> y xor mask of a script, as a table on {0,1}^d. The mask
// collects the Y flips, the Y1 flips and the Y2 flips offset by y1_len.
AdversaryTable SeedTamperTable(const AdversaryScript& s, std::size_t d, std::size_t y1_len = 0);
// Throws the fixed-point error of RequireFixedPointFree for scripts that
// leave some seed unchanged.
AdversaryTable RequireSeedTamper(const AdversaryScript& s, std::size_t d, std::size_t y1_len = 0);

}  // namespace nmc

#endif  // NMC_ADVERSARY_H_
