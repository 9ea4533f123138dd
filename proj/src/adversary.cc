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

#include "nmc/adversary.h"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "nmc/aka_multi.h"
#include "nmc/protocol.h"
#include "nmc/seeds.h"

namespace nmc {
namespace {

using nlohmann::json;

const std::vector<std::size_t>& FlipsOf(const AdversaryScript& s, const std::string& field) {
  static const std::vector<std::size_t> kNone;
  auto it = s.flips.find(field);
  return it == s.flips.end() ? kNone : it->second;
}

BitString Mask(std::size_t len, const std::vector<std::size_t>& positions, const std::string& field) {
  BitString m(len);
  for (std::size_t pos : positions) {
    if (pos >= len) {
      throw Error("flip position " + std::to_string(pos) + " outside field " + field + " of " +
                  std::to_string(len) + " bits");
    }
    m.Set(pos, !m.Get(pos));
  }
  return m;
}

Message ApplyFlips(const Message& m, const AdversaryScript& s) {
  Message out = m;
  for (auto& [name, value] : out.fields) value = value.Xor(Mask(value.size(), FlipsOf(s, name), name));
  return out;
}

std::vector<std::string> AllowedFields(Algorithm a) {
  if (a == Algorithm::kAka) return {"Y1", "Y2", "Y3", "W", "T1", "T2"};
  return {"Y", "M", "W"};
}

struct WorldSource {
  std::vector<BitString> xs;
  std::vector<std::uint64_t> weights;
  std::uint64_t total = 0;
  bool uniform = false;  // xs unset; x ranges over {0,1}^n
  std::size_t n = 0;

  std::uint64_t size() const { return uniform ? (std::uint64_t{1} << n) : xs.size(); }
  BitString X(std::uint64_t i) const { return uniform ? BitString::FromU64(i, n) : xs[i]; }
  std::uint64_t W(std::uint64_t i) const { return uniform ? 1 : weights[i]; }
};

WorldSource MakeWorldSource(const SourceSpec& spec, bool enumerate) {
  WorldSource ws;
  ws.n = spec.n;
  if (spec.kind == SourceKind::kUniform) {
    if (enumerate && spec.n > 40) throw Error("uniform source too large to enumerate; use sampling with --trials");
    ws.uniform = true;
    ws.total = spec.n >= 64 ? 0 : (std::uint64_t{1} << std::min<std::size_t>(spec.n, 63));
    return ws;
  }
  if (spec.points.empty()) throw Error("source has no support points");
  ws.xs = spec.points;
  if (spec.kind == SourceKind::kFlat) {
    ws.weights.assign(ws.xs.size(), 1);
  } else {
    if (spec.probs.size() != spec.points.size()) throw Error("source probabilities do not match its points");
    mpz_class lcm = 1;
    for (const auto& q : spec.probs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    for (const auto& q : spec.probs) {
      const mpz_class w = q.get_num() * (lcm / q.get_den());
      if (!w.fits_ulong_p()) throw Error("source weights exceed 64 bits");
      ws.weights.push_back(w.get_ui());
    }
  }
  for (const auto& x : ws.xs) {
    if (x.size() != spec.n) throw Error("source point length does not match n");
  }
  ws.total = std::accumulate(ws.weights.begin(), ws.weights.end(), std::uint64_t{0});
  return ws;
}

struct StopWorld {};

using GuessTable = std::unordered_map<std::string, BitString>;

// Observations (view, value, weight), grouped by sorting.
struct Observation {
  std::string view;
  BitString value;
  std::uint64_t weight = 0;
};

// Sorts by (view, value) and merges equal pairs.
void Compact(std::vector<Observation>& obs) {
  std::sort(obs.begin(), obs.end(), [](const Observation& a, const Observation& b) {
    if (a.view != b.view) return a.view < b.view;
    return a.value < b.value;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    if (out > 0 && obs[out - 1].view == obs[i].view && obs[out - 1].value == obs[i].value) {
      obs[out - 1].weight += obs[i].weight;
    } else {
      if (out != i) obs[out] = std::move(obs[i]);
      ++out;
    }
  }
  obs.resize(out);
}

struct Recorder {
  std::vector<Observation> obs;

  void Add(const std::string& view, const BitString& truth, std::uint64_t w) { obs.push_back({view, truth, w}); }
  // Most likely value per view, ties to the smallest string.
  static GuessTable Build(std::vector<Observation>& all) {
    Compact(all);
    GuessTable table;
    for (std::size_t i = 0; i < all.size();) {
      std::size_t best = i;
      std::size_t j = i;
      for (; j < all.size() && all[j].view == all[i].view; ++j) {
        if (all[j].weight > all[best].weight) best = j;
      }
      table.emplace(std::move(all[i].view), all[best].value);
      i = j;
    }
    return table;
  }
};

class Eve {
 public:
  Eve(bool guessing, const std::vector<GuessTable>* tables, Recorder* rec, std::uint64_t weight)
      : guessing_(guessing), tables_(tables), rec_(rec), weight_(weight) {}

  // Appends the message in a packed form that is injective per schema.
  void See(const Message& m) {
    view_ += static_cast<char>(m.dir == Direction::kAliceToBob ? 'a' : 'b');
    view_ += static_cast<char>(m.phase);
    for (const auto& [name, v] : m.fields) {
      view_ += name;
      const std::uint32_t len = static_cast<std::uint32_t>(v.size());
      view_.append(reinterpret_cast<const char*>(&len), sizeof len);
      for (std::uint64_t w : v.words()) view_.append(reinterpret_cast<const char*>(&w), sizeof w);
    }
  }

  BitString Guess(const std::function<BitString()>& truth, const BitString& fallback) {
    if (!guessing_) return fallback;
    const std::size_t k = next_++;
    if (k < tables_->size()) {
      auto it = (*tables_)[k].find(view_);
      if (it == (*tables_)[k].end()) throw Error("internal: replay diverged from the recorded view");
      return it->second;
    }
    rec_->Add(view_, truth(), weight_);
    throw StopWorld{};
  }

  const std::string& view() const { return view_; }

 private:
  bool guessing_;
  const std::vector<GuessTable>* tables_;
  Recorder* rec_;
  std::uint64_t weight_;
  std::size_t next_ = 0;
  std::string view_;
};

struct Ledger {
  std::vector<LedgerEntry> meta;
  std::vector<bool> passed;
  void Add(std::string label, char op, std::size_t phase, bool forced, bool ok) {
    LedgerEntry e;
    e.label = std::move(label);
    e.op = op;
    e.phase = phase;
    e.forced = forced;
    meta.push_back(std::move(e));
    passed.push_back(ok);
  }
};

struct RunOutcome {
  PartyOutcome alice;
  PartyOutcome bob;
  bool y_changed = false;
};

RunOutcome RunAka(const BitString& x, const BitString& at, const BitString& bt, const ParameterProfile& p,
                  const AdversaryScript& s, Eve& eve, Ledger& led) {
  RunOutcome out;
  auto [st, m1] = aka2round_alice_round1(x, at, p);
  eve.See(m1);
  const Message d1 = ApplyFlips(m1, s);
  out.y_changed = !(d1 == m1);
  BobResult b = aka2round_bob(x, d1, bt, p);
  out.bob = b.outcome;
  if (!b.reply) {
    out.alice = PartyOutcome::Reject();
    return out;
  }
  eve.See(*b.reply);
  Message d2 = ApplyFlips(*b.reply, s);
  if (!s.passive()) {
    const BitString w = d2.Get("W");
    const auto expected = AkaExpectedTags(st, w, p);
    if (s.best_guess) {
      const BitString fallback = Concat(d2.Get("T1"), d2.Get("T2"));
      const BitString g = eve.Guess([&] { return Concat(expected.first, expected.second); }, fallback);
      d2.fields = {{"W", w}, {"T1", g.Slice(0, p.t1_len)}, {"T2", g.Slice(p.t1_len, p.tag_len)}};
    }
    led.Add("alice T1 check", '-', 2, true, d2.Get("T1") == expected.first);
    led.Add("alice T2 check", '-', 2, true, d2.Get("T2") == expected.second);
  }
  out.alice = aka2round_alice_round2(st, d2, p);
  return out;
}

struct Halted {};

RunOutcome RunAka2(const BitString& x, const BitString& at, const BitString& bt, const ParameterProfile& p,
                   const AdversaryScript& s, Eve& eve, Ledger& led) {
  RunOutcome out;
  out.alice = PartyOutcome::Reject();
  out.bob = PartyOutcome::Reject();
  Aka2Alice alice(x, at, p);
  Aka2Bob bob(x, bt, p);
  const std::vector<BlockGroup> groups =
      s.ops.empty() ? std::vector<BlockGroup>(p.L, BlockGroup{}) : ParseOps(s.ops);

  Message a_msg = alice.Start();
  eve.See(a_msg);
  const BitString y = a_msg.Get("Y");
  const BitString y_sent = y.Xor(Mask(p.d1, FlipsOf(s, "Y"), "Y"));
  const BitString target = Aka2Code(p).Encode(y_sent).Xor(Mask(p.lambda_c, FlipsOf(s, "M"), "M"));
  out.y_changed = y_sent != y;
  Message block_msg = a_msg;  // Alice's latest message carrying a block
  // Whether the W last given to Alice is Bob's latest W. This depends only on
  // the schedule, so every run records the same ledger entries.
  bool w_synced = false;
  std::optional<BitString> last_bob_t;

  // V for Bob's next check: Alice's current V when it was computed from
  // Bob's latest W, otherwise a guess.
  auto supply_v = [&](char op, std::size_t j) -> BitString {
    const bool has_v = std::any_of(a_msg.fields.begin(), a_msg.fields.end(),
                                   [](const auto& f) { return f.first == "V"; });
    if (has_v && w_synced) return a_msg.Get("V");
    const BitString truth = bob.ExpectedV();
    const BitString v = eve.Guess([&] { return truth; }, has_v ? a_msg.Get("V") : BitString(p.tv_len));
    led.Add("bob V check, phase " + std::to_string(j), op, j, true, v == truth);
    return v;
  };

  auto deliver = [&](char op, const BitString& block) -> Message {
    const std::size_t j = bob.expected_phase();
    if (j > p.L) throw Error("script delivers more than L blocks to Bob");
    Message m{Direction::kAliceToBob, j, {}};
    if (j == 1) {
      m.fields.push_back({"Y", y_sent});
    } else {
      m.fields.push_back({"V", supply_v(op, j)});
    }
    m.fields.push_back({"M", block});
    m.fields.push_back({"Y2", block_msg.Get("Y2")});
    m.fields.push_back({"Y3", block_msg.Get("Y3")});
    StepResult r = bob.Step(m);
    if (!r.message) throw Halted{};
    w_synced = false;
    eve.See(*r.message);
    last_bob_t = r.message->Get("T");
    return *r.message;
  };

  try {
    for (std::size_t g = 1; g <= groups.size(); ++g) {
      const BlockGroup& grp = groups[g - 1];
      std::optional<Message> head_reply;
      const std::size_t j0 = bob.expected_phase();
      if (grp.head == BlockOp::kPass) head_reply = deliver('P', a_msg.Get("M"));
      if (grp.head == BlockOp::kAlter) head_reply = deliver('A', target.Slice((j0 - 1) * p.d2, p.d2));
      auto insert_all = [&] {
        for (std::size_t i = 0; i < grp.inserts; ++i) {
          const std::size_t j = bob.expected_phase();
          if (j > p.L) throw Error("script delivers more than L blocks to Bob");
          deliver('I', target.Slice((j - 1) * p.d2, p.d2));
        }
      };
      // A deleted block never reaches Bob before Eve answers Alice, so its
      // inserts follow the answer.
      if (grp.head != BlockOp::kDelete) insert_all();
      const BitString w = bob.last_w().empty() ? BitString(p.wi_len) : bob.last_w();
      BitString t;
      if (grp.head == BlockOp::kPass) {
        t = head_reply->Get("T");
      } else {
        const BitString truth = alice.ExpectedT();
        t = eve.Guess([&] { return truth; }, last_bob_t.value_or(BitString(p.tv_len)));
        const bool forced = !(grp.head == BlockOp::kAlter && grp.inserts > 0);
        led.Add("alice T check, phase " + std::to_string(g), OpChar(grp.head), g, forced, t == truth);
      }
      StepResult r = alice.Step(Message{Direction::kBobToAlice, g, {{"W", w}, {"T", t}}});
      if (!r.message) throw Halted{};
      w_synced = !bob.last_w().empty();
      a_msg = *r.message;
      eve.See(a_msg);
      if (a_msg.fields.size() > 1) block_msg = a_msg;
      if (grp.head == BlockOp::kDelete) insert_all();
    }
    const std::size_t jf = bob.expected_phase();
    if (jf != p.L + 1) throw Error("script delivers fewer than L blocks to Bob");
    Message fin{Direction::kAliceToBob, jf, {{"V", supply_v('-', jf)}}};
    StepResult r = bob.Step(fin);
    if (!r.message) throw Halted{};
    out.bob = *r.outcome;
    eve.See(*r.message);
    const BitString w_sent = r.message->Get("W");
    const BitString w = w_sent.Xor(Mask(p.w_len, FlipsOf(s, "W"), "W"));
    BitString t = r.message->Get("T");
    if (out.y_changed || w != w_sent) {
      const BitString truth = alice.ExpectedFinalTag(w);
      t = eve.Guess([&] { return truth; }, t);
      led.Add("alice final MAC check", '-', jf, true, t == truth);
    }
    StepResult a = alice.Step(Message{Direction::kBobToAlice, jf, {{"W", w}, {"T", t}}});
    out.alice = *a.outcome;
  } catch (const Halted&) {
  }
  // A party that has not finished when the run halts outputs reject.
  if (!bob.done()) out.bob = PartyOutcome::Reject();
  if (!alice.done()) out.alice = PartyOutcome::Reject();
  return out;
}

struct Agg {
  std::uint64_t total = 0;
  std::uint64_t success = 0;
  std::uint64_t y_change = 0;
  std::uint64_t alice_acc = 0;
  std::uint64_t bob_acc = 0;
  std::uint64_t both = 0;
  std::vector<LedgerEntry> meta;
  std::vector<std::uint64_t> prefix_hist;  // by number of leading passed entries
  std::vector<std::uint64_t> all_passed;   // by ledger length, runs passing every entry
  bool purify = false;
  std::vector<Observation> keys;  // (final view, R_A, weight) of runs where Alice accepts

  static void Grow(std::vector<std::uint64_t>& v, std::size_t n) {
    if (v.size() < n) v.resize(n, 0);
  }

  void MergeMeta(const std::vector<LedgerEntry>& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i < meta.size()) {
        if (meta[i].label != m[i].label || meta[i].op != m[i].op || meta[i].forced != m[i].forced) {
          throw Error("internal: ledger entries differ between runs at index " + std::to_string(i));
        }
      } else {
        meta.push_back(m[i]);
      }
    }
  }

  void Add(const RunOutcome& o, const Ledger& led, const std::string& view, std::uint64_t w) {
    total += w;
    const bool both_ok = !o.alice.rejected && !o.bob.rejected;
    if (!o.alice.rejected) alice_acc += w;
    if (!o.bob.rejected) bob_acc += w;
    if (both_ok) both += w;
    if (both_ok && o.alice.key != o.bob.key) success += w;
    if (both_ok && o.y_changed) y_change += w;
    MergeMeta(led.meta);
    std::size_t prefix = 0;
    while (prefix < led.passed.size() && led.passed[prefix]) ++prefix;
    Grow(prefix_hist, prefix + 1);
    prefix_hist[prefix] += w;
    if (prefix == led.passed.size()) {
      Grow(all_passed, prefix + 1);
      all_passed[prefix] += w;
    }
    if (purify && !o.alice.rejected) keys.push_back({view, o.alice.key, w});
  }

  void Merge(const Agg& o) {
    total += o.total;
    success += o.success;
    y_change += o.y_change;
    alice_acc += o.alice_acc;
    bob_acc += o.bob_acc;
    both += o.both;
    MergeMeta(o.meta);
    Grow(prefix_hist, o.prefix_hist.size());
    for (std::size_t i = 0; i < o.prefix_hist.size(); ++i) prefix_hist[i] += o.prefix_hist[i];
    Grow(all_passed, o.all_passed.size());
    for (std::size_t i = 0; i < o.all_passed.size(); ++i) all_passed[i] += o.all_passed[i];
    keys.insert(keys.end(), o.keys.begin(), o.keys.end());
  }
};

Rational Ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return Rational(1);
  Rational r(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  r.canonicalize();
  return r;
}

// Distance between (R_A, view) and (purify(R_A), view): per view v with
// accepted mass A_v, sum over keys r of |P(v, r) - A_v / 2^len|, halved.
Rational PurifyDistance(Agg& agg, std::size_t key_len) {
  Compact(agg.keys);
  const mpz_class space = mpz_class(1) << static_cast<unsigned>(key_len);
  mpz_class sum = 0;
  for (std::size_t i = 0; i < agg.keys.size();) {
    std::size_t j = i;
    mpz_class acc = 0;
    for (; j < agg.keys.size() && agg.keys[j].view == agg.keys[i].view; ++j) {
      acc += mpz_class(std::to_string(agg.keys[j].weight));
    }
    for (std::size_t k = i; k < j; ++k) {
      const mpz_class diff = mpz_class(std::to_string(agg.keys[k].weight)) * space - acc;
      sum += abs(diff);
    }
    sum += (space - static_cast<unsigned long>(j - i)) * acc;
    i = j;
  }
  Rational r(sum, 2 * mpz_class(std::to_string(agg.total)) * space);
  r.canonicalize();
  return r;
}

void Finish(const Agg& agg, AttackReport& rep) {
  rep.total_weight = agg.total;
  rep.success = Ratio(agg.success, agg.total);
  rep.y_change = Ratio(agg.y_change, agg.total);
  rep.alice_accept = Ratio(agg.alice_acc, agg.total);
  rep.bob_accept = Ratio(agg.bob_acc, agg.total);
  rep.both_accept = Ratio(agg.both, agg.total);
  const std::size_t q = agg.meta.size();
  // Weight of runs that passed at least k leading entries.
  std::vector<std::uint64_t> at_least(q + 2, 0);
  for (std::size_t k = agg.prefix_hist.size(); k-- > 0;) at_least[k] += agg.prefix_hist[k];
  for (std::size_t k = q + 1; k-- > 0;) at_least[k] += at_least[k + 1];
  rep.ledger = agg.meta;
  rep.ledger_product = 1;
  for (std::size_t k = 0; k < q; ++k) {
    rep.ledger[k].reached = at_least[k];
    rep.ledger[k].passed = at_least[k + 1];
    rep.ledger[k].conditional = Ratio(at_least[k + 1], at_least[k]);
    rep.ledger_product *= rep.ledger[k].conditional;
  }
  rep.e_q = Ratio(q < agg.all_passed.size() ? agg.all_passed[q] : 0, agg.total);
}

// Runs `fn(i, agg)` over [0, count), merging per-thread aggregates.
template <typename Fn>
void ParallelRuns(std::uint64_t count, bool serial, Agg& agg, Fn fn) {
  std::string error;
  const int threads = serial ? 1 : omp_get_max_threads();
  std::vector<Agg> locals(threads);
  for (auto& l : locals) l.purify = agg.purify;
#pragma omp parallel for schedule(dynamic, 256) num_threads(threads)
  for (std::uint64_t i = 0; i < count; ++i) {
    try {
      fn(i, locals[omp_get_thread_num()]);
    } catch (const std::exception& e) {
#pragma omp critical(nmc_adversary_error)
      if (error.empty()) error = e.what();
    }
  }
  if (!error.empty()) throw Error(error);
  for (const auto& l : locals) agg.Merge(l);
}

RunOutcome RunOne(const BitString& x, const BitString& at, const BitString& bt, const ParameterProfile& p,
                  const AdversaryScript& s, Eve& eve, Ledger& led) {
  return p.algorithm == Algorithm::kAka ? RunAka(x, at, bt, p, s, eve, led) : RunAka2(x, at, bt, p, s, eve, led);
}

}  // namespace

bool AdversaryScript::passive() const {
  const bool relays = ops.find_first_not_of("P ,\t\n") == std::string::npos;
  const bool no_flips =
      std::all_of(flips.begin(), flips.end(), [](const auto& kv) { return kv.second.empty(); });
  return relays && no_flips;
}

json AdversaryScript::ToJson() const {
  json j;
  j["id"] = id;
  j["description"] = description;
  j["protocol"] = AlgorithmName(protocol);
  j["flips"] = json::object();
  for (const auto& [k, v] : flips) j["flips"][k] = v;
  if (!ops.empty()) j["ops"] = ops;
  j["best_guess"] = best_guess;
  return j;
}

AdversaryScript AdversaryScript::FromJson(const json& j) {
  static const std::vector<std::string> kKeys = {"id", "description", "protocol", "flips", "ops", "best_guess"};
  if (!j.is_object()) throw Error("script must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), k) == kKeys.end()) throw Error("unknown script key '" + k + "'");
  }
  AdversaryScript s;
  s.id = j.at("id").get<std::string>();
  s.description = j.value("description", "");
  s.protocol = ParseAlgorithm(j.at("protocol").get<std::string>());
  if (s.protocol != Algorithm::kAka && s.protocol != Algorithm::kAka2) {
    throw Error("script '" + s.id + "' targets a non-protocol algorithm");
  }
  if (j.contains("flips")) {
    const auto allowed = AllowedFields(s.protocol);
    for (const auto& [k, v] : j.at("flips").items()) {
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
        throw Error("script '" + s.id + "' flips unknown field '" + k + "'");
      }
      s.flips[k] = v.get<std::vector<std::size_t>>();
    }
  }
  s.ops = j.value("ops", "");
  if (!s.ops.empty() && s.protocol != Algorithm::kAka2) throw Error("block operations need the aka2 protocol");
  if (!s.ops.empty()) ParseOps(s.ops);
  s.best_guess = j.value("best_guess", false);
  return s;
}

std::vector<AdversaryScript> LoadScripts(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read script file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("malformed script file " + path + ": " + e.what());
  }
  const json& arr = j.is_object() ? j.at("scripts") : j;
  std::vector<AdversaryScript> out;
  for (const auto& s : arr) out.push_back(AdversaryScript::FromJson(s));
  return out;
}

json ScriptsToJson(const std::vector<AdversaryScript>& scripts) {
  json arr = json::array();
  for (const auto& s : scripts) arr.push_back(s.ToJson());
  return json{{"schema_version", 1}, {"scripts", arr}};
}

std::vector<AdversaryScript> BuiltinScripts(Algorithm protocol) {
  std::vector<AdversaryScript> v;
  auto add = [&](std::string id, std::string desc, std::map<std::string, std::vector<std::size_t>> flips,
                 std::string ops, bool guess) {
    v.push_back({std::move(id), std::move(desc), protocol, std::move(flips), std::move(ops), guess});
  };
  if (protocol == Algorithm::kAka) {
    add("aka-passive", "relay every message", {}, "", false);
    add("aka-w-keep-tags", "flip W[0] and keep Bob's tags", {{"W", {0}}}, "", false);
    add("aka-w-guess", "flip W[0] and send the most likely tags", {{"W", {0}}}, "", true);
    add("aka-y1-guess", "flip Y1[0] and send the most likely tags", {{"Y1", {0}}}, "", true);
    add("aka-y2-guess", "flip Y2[0], keep Y1, send the most likely tags", {{"Y2", {0}}}, "", true);
    add("aka-t2-flip", "flip T2[0]", {{"T2", {0}}}, "", false);
  } else if (protocol == Algorithm::kAka2) {
    add("aka2-passive", "relay every block", {}, "P P", false);
    add("aka2-alter-first", "alter codeword bit 0 in block 1 and relay Bob's tag", {{"M", {0}}}, "A P", false);
    add("aka2-alter-last", "alter the first bit of block 2 and relay Bob's tag", {{"M", {2}}}, "P A", false);
    add("aka2-alter-last-guess", "alter the first bit of block 2 and send the most likely tag", {{"M", {2}}},
        "P A", true);
    add("aka2-change-y", "flip Y[0] and steer Bob to its codeword", {{"Y", {0}}}, "A P", true);
    add("aka2-delete-insert", "delete block 1, insert its replacement", {}, "D I P", true);
    add("aka2-delete-insert-y", "delete block 1, insert a block of the flipped seed", {{"Y", {0}}}, "D I P", true);
    add("aka2-alter-insert", "alter block 1, insert block 2, delete block 2", {{"Y", {0}}}, "A I D", true);
    add("aka2-final-w", "flip the final W[0] and send the most likely tag", {{"W", {0}}}, "P P", true);
  } else {
    throw Error("no built-in scripts for a non-protocol algorithm");
  }
  return v;
}

void ValidateScript(const AdversaryScript& s, const ParameterProfile& p) {
  if (s.protocol != p.algorithm) {
    throw Error("script '" + s.id + "' targets " + AlgorithmName(s.protocol) + " but the profile is " +
                AlgorithmName(p.algorithm));
  }
  std::map<std::string, std::size_t> lens;
  if (p.algorithm == Algorithm::kAka) {
    lens = {{"Y1", p.y1_len}, {"Y2", p.y2_len}, {"Y3", p.y3_len},
            {"W", p.w_len},   {"T1", p.t1_len}, {"T2", p.tag_len}};
  } else {
    lens = {{"Y", p.d1}, {"M", p.lambda_c}, {"W", p.w_len}};
    if (!s.ops.empty()) {
      const auto groups = ParseOps(s.ops);
      classify_schedule(groups, !FlipsOf(s, "Y").empty(), p.e(), p.L);
    }
  }
  for (const auto& [field, pos] : s.flips) {
    auto it = lens.find(field);
    if (it == lens.end()) throw Error("script '" + s.id + "' flips unknown field '" + field + "'");
    Mask(it->second, pos, field);
  }
}

json AttackReport::ToJson() const {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["strategy"] = strategy;
  j["description"] = description;
  j["protocol"] = protocol;
  j["profile"] = profile;
  j["exact"] = exact;
  j["runs"] = runs;
  j["total_weight"] = total_weight;
  j["passes"] = passes;
  j["success_event"] = success_event;
  j["success"] = ToString(success);
  j["y_change"] = ToString(y_change);
  j["alice_accept"] = ToString(alice_accept);
  j["bob_accept"] = ToString(bob_accept);
  j["both_accept"] = ToString(both_accept);
  j["e_q"] = ToString(e_q);
  j["ledger_product"] = ToString(ledger_product);
  j["product_holds"] = product_holds();
  json led = json::array();
  for (const auto& e : ledger) {
    led.push_back({{"label", e.label},
                   {"op", std::string(1, e.op)},
                   {"phase", e.phase},
                   {"forced", e.forced},
                   {"reached", e.reached},
                   {"passed", e.passed},
                   {"conditional", ToString(e.conditional)}});
  }
  j["ledger"] = led;
  if (purify_distance) j["purify_distance"] = ToString(*purify_distance);
  if (schedule) {
    j["schedule"] = {{"canonical", schedule->canonical()},
                     {"a", schedule->a},
                     {"b", schedule->b},
                     {"c", schedule->c},
                     {"d", schedule->d},
                     {"forced", schedule->forced},
                     {"changes_y", schedule->changes_y},
                     {"bound_ops", schedule->bound_ops},
                     {"bound_blocks", schedule->bound_blocks}};
  }
  return j;
}

AttackReport AttackReport::FromJson(const json& j) {
  if (j.value("schema_version", 0) != kSchemaVersion) throw Error("unsupported attack report schema");
  AttackReport r;
  r.strategy = j.at("strategy").get<std::string>();
  r.description = j.value("description", "");
  r.protocol = j.at("protocol").get<std::string>();
  r.profile = j.at("profile").get<std::string>();
  r.exact = j.at("exact").get<bool>();
  r.runs = j.at("runs").get<std::uint64_t>();
  r.total_weight = j.at("total_weight").get<std::uint64_t>();
  r.passes = j.at("passes").get<std::size_t>();
  r.success_event = j.at("success_event").get<std::string>();
  r.success = ParseRational(j.at("success").get<std::string>());
  r.y_change = ParseRational(j.at("y_change").get<std::string>());
  r.alice_accept = ParseRational(j.at("alice_accept").get<std::string>());
  r.bob_accept = ParseRational(j.at("bob_accept").get<std::string>());
  r.both_accept = ParseRational(j.at("both_accept").get<std::string>());
  r.e_q = ParseRational(j.at("e_q").get<std::string>());
  r.ledger_product = ParseRational(j.at("ledger_product").get<std::string>());
  for (const auto& e : j.at("ledger")) {
    LedgerEntry le;
    le.label = e.at("label").get<std::string>();
    le.op = e.at("op").get<std::string>().at(0);
    le.phase = e.at("phase").get<std::size_t>();
    le.forced = e.at("forced").get<bool>();
    le.reached = e.at("reached").get<std::uint64_t>();
    le.passed = e.at("passed").get<std::uint64_t>();
    le.conditional = ParseRational(e.at("conditional").get<std::string>());
    r.ledger.push_back(std::move(le));
  }
  if (j.contains("purify_distance")) r.purify_distance = ParseRational(j.at("purify_distance").get<std::string>());
  if (j.contains("schedule")) {
    const auto& s = j.at("schedule");
    ScheduleClass sc;
    for (char ch : s.at("canonical").get<std::string>()) {
      sc.ops.push_back(ch == 'D' ? BlockOp::kDelete : ch == 'I' ? BlockOp::kInsert : BlockOp::kAlter);
    }
    sc.a = s.at("a").get<std::size_t>();
    sc.b = s.at("b").get<std::size_t>();
    sc.c = s.at("c").get<std::size_t>();
    sc.d = s.at("d").get<std::size_t>();
    sc.forced = s.at("forced").get<std::size_t>();
    sc.changes_y = s.at("changes_y").get<bool>();
    sc.bound_ops = s.at("bound_ops").get<std::size_t>();
    sc.bound_blocks = s.at("bound_blocks").get<std::size_t>();
    r.schedule = sc;
  }
  return r;
}

ChallengeLedger challenge_ledger(const AttackReport& report) { return {!report.exact, report.ledger}; }

AttackReport run_with_adversary(const ParameterProfile& p, const SourceSpec& source, const AdversaryScript& script,
                                const AttackOptions& opt) {
  RequireValid(p);
  ValidateScript(script, p);
  if (source.n != p.n) throw Error("source length does not match the profile");
  const bool aka = p.algorithm == Algorithm::kAka;
  const std::size_t alen = aka ? AkaAliceTapeLen(p) : Aka2AliceTapeLen(p);
  const std::size_t blen = aka ? AkaBobTapeLen(p) : Aka2BobTapeLen(p);

  AttackReport rep;
  rep.strategy = script.id;
  rep.description = script.description;
  rep.protocol = AlgorithmName(p.algorithm);
  rep.profile = p.name;
  rep.exact = opt.exact;
  if (!aka) {
    rep.schedule = classify_schedule(
        script.ops.empty() ? FormatOps(std::vector<BlockGroup>(p.L, BlockGroup{})) : script.ops,
        !FlipsOf(script, "Y").empty(), p.e(), p.L);
  }

  Agg agg;
  if (opt.exact) {
    const WorldSource ws = MakeWorldSource(source, true);
    const std::uint64_t xs = ws.size();
    const std::size_t tape_bits = alen + blen;
    if (tape_bits >= 40 || xs > kMaxExactWorlds || (xs << tape_bits) > kMaxExactWorlds) {
      throw Error("exact enumeration too large (" + std::to_string(xs) + " sources x 2^" +
                  std::to_string(tape_bits) + " tapes, limit 2^22 runs); use sampling with --trials");
    }
    const std::uint64_t worlds = xs << tape_bits;
    rep.runs = worlds;
    agg.purify = true;
    std::vector<GuessTable> tables;
    std::vector<std::uint8_t> active(worlds, 1);
    for (std::size_t pass = 0;; ++pass) {
      const int threads = opt.serial ? 1 : omp_get_max_threads();
      std::vector<Recorder> recs(threads);
      ParallelRuns(worlds, opt.serial, agg, [&](std::uint64_t i, Agg& local) {
        if (!active[i]) return;
        const std::uint64_t xi = i >> tape_bits;
        const BitString x = ws.X(xi);
        const BitString at = BitString::FromU64((i >> blen) & ((std::uint64_t{1} << alen) - 1), alen);
        const BitString bt = BitString::FromU64(i & ((std::uint64_t{1} << blen) - 1), blen);
        Eve eve(script.best_guess, &tables, &recs[omp_get_thread_num()], ws.W(xi));
        Ledger led;
        try {
          const RunOutcome o = RunOne(x, at, bt, p, script, eve, led);
          local.Add(o, led, eve.view(), ws.W(xi));
          active[i] = 0;
        } catch (const StopWorld&) {
        }
      });
      std::vector<Observation> merged;
      for (auto& r : recs) {
        merged.insert(merged.end(), std::make_move_iterator(r.obs.begin()), std::make_move_iterator(r.obs.end()));
      }
      if (merged.empty()) {
        rep.passes = pass + 1;
        break;
      }
      tables.push_back(Recorder::Build(merged));
    }
    Finish(agg, rep);
    rep.purify_distance = PurifyDistance(agg, p.FinalKeyLen());
  } else {
    if (opt.trials == 0) throw Error("sampling mode needs a positive trial count");
    const WorldSource ws = MakeWorldSource(source, false);
    rep.runs = opt.trials;
    ParallelRuns(opt.trials, opt.serial, agg, [&](std::uint64_t i, Agg& local) {
      const Tapes tapes = DeriveTapes(opt.seed, i, alen, blen);
      BitRng rng(tapes.source_seed);
      BitString x;
      if (ws.uniform) {
        x = rng.Bits(ws.n);
      } else {
        std::uint64_t r = rng.Below(ws.total);
        std::size_t k = 0;
        while (r >= ws.weights[k]) r -= ws.weights[k++];
        x = ws.xs[k];
      }
      Eve eve(false, nullptr, nullptr, 1);
      Ledger led;
      const RunOutcome o = RunOne(x, tapes.alice, tapes.bob, p, script, eve, led);
      local.Add(o, led, eve.view(), 1);
    });
    Finish(agg, rep);
  }
  return rep;
}

AdversaryTable SeedTamperTable(const AdversaryScript& s, std::size_t d, std::size_t y1_len) {
  BitString mask(d);
  auto flip = [&](std::size_t pos, const std::string& field) {
    if (pos >= d) throw Error("flip position " + std::to_string(pos) + " of " + field + " outside the seed");
    mask.Set(pos, !mask.Get(pos));
  };
  for (std::size_t pos : FlipsOf(s, "Y")) flip(pos, "Y");
  for (std::size_t pos : FlipsOf(s, "Y1")) flip(pos, "Y1");
  for (std::size_t pos : FlipsOf(s, "Y2")) flip(y1_len + pos, "Y2");
  if (d > 26) throw Error("seed too long for a tamper table");
  const std::uint32_t m = static_cast<std::uint32_t>(mask.ToU64());
  AdversaryTable t(std::size_t{1} << d);
  for (std::uint32_t y = 0; y < t.size(); ++y) t[y] = y ^ m;
  return t;
}

AdversaryTable RequireSeedTamper(const AdversaryScript& s, std::size_t d, std::size_t y1_len) {
  AdversaryTable t = SeedTamperTable(s, d, y1_len);
  RequireFixedPointFree(t);
  return t;
}

}  // namespace nmc
