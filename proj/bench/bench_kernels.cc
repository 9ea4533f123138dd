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
// Serial references against the OpenMP kernels. Arg 0 runs the serial
// reference, arg 1 the kernel on one thread, arg 2 the kernel on every
// available thread.

#include <benchmark/benchmark.h>

#include <omp.h>

#include <string>

#include "nmc/adversary.h"
#include "nmc/edit_code.h"
#include "nmc/fn_table.h"
#include "nmc/oracle.h"
#include "nmc/primitives.h"
#include "nmc/profile.h"
#include "nmc/sources.h"
#include "nmc/topheavy.h"

namespace nmc {
namespace {

// Sets the OpenMP thread count for the kernel variants.
void Threads(const benchmark::State& state) {
  omp_set_num_threads(state.range(0) == 1 ? 1 : omp_get_num_procs());
}

#define NMC_VARIANTS Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)

void BM_StrongExtractor(benchmark::State& state) {
  const FnTable t = FnTable::Build(8, 9, 2, [](const BitString& x, const BitString& y) { return ext_hash(x, y, 2); });
  const FlatFamily fam = MakeFlatFamily(8, 6, 100, 0, 1);
  Threads(state);
  for (auto _ : state) {
    const ExtractorReport r =
        state.range(0) == 0 ? verify_strong_extractor_serial(t, fam.sources, 6) : verify_strong_extractor(t, fam.sources, 6);
    benchmark::DoNotOptimize(r.worst_distance);
  }
}
BENCHMARK(BM_StrongExtractor)->NMC_VARIANTS;

void BM_NmExtractor(benchmark::State& state) {
  const FnTable t = FnTable::Build(3, 3, 1, [](const BitString& x, const BitString& y) { return nm_ip(x, y, 1); });
  const FlatFamily fam = MakeFlatFamily(3, 2, 500, 0, 1);
  const auto advs = EnumerateAdversaries(3, 1000, 0, 1);
  Threads(state);
  for (auto _ : state) {
    const NmExtReport r = state.range(0) == 0 ? verify_nm_extractor_serial(t, fam.sources, advs)
                                              : verify_nm_extractor(t, fam.sources, advs);
    benchmark::DoNotOptimize(r.worst_distance);
  }
}
BENCHMARK(BM_NmExtractor)->NMC_VARIANTS;

void BM_TopHeavy(benchmark::State& state) {
  Threads(state);
  for (auto _ : state) {
    const TopHeavySweep s = state.range(0) == 0 ? CheckPairwiseTopHeavySerial(8) : CheckPairwiseTopHeavy(8);
    benchmark::DoNotOptimize(s.failures);
  }
}
BENCHMARK(BM_TopHeavy)->NMC_VARIANTS;

void BM_EditCertify(benchmark::State& state) {
  const EditCode code{8, 2};
  Threads(state);
  for (auto _ : state) {
    const EditCertificate c = state.range(0) == 0 ? CertifyEditCodeSerial(code) : CertifyEditCode(code);
    benchmark::DoNotOptimize(c.min_distance);
  }
}
BENCHMARK(BM_EditCertify)->NMC_VARIANTS;

void BM_AttackExact(benchmark::State& state) {
  const ParameterProfile p = ParameterProfile::Load(std::string(NMC_DATA_DIR) + "/profiles/aka-micro.json");
  const SourceSpec src = SourceSpec::FromJson({{"kind", "flat"}, {"n", 6}, {"size", 8}, {"seed", "1"}});
  AdversaryScript script;
  for (const auto& s : BuiltinScripts(Algorithm::kAka)) {
    if (s.id == "aka-w-guess") script = s;
  }
  AttackOptions opt;
  opt.serial = state.range(0) == 0;
  Threads(state);
  for (auto _ : state) {
    const AttackReport r = run_with_adversary(p, src, script, opt);
    benchmark::DoNotOptimize(r.e_q);
  }
}
BENCHMARK(BM_AttackExact)->NMC_VARIANTS;

}  // namespace
}  // namespace nmc

BENCHMARK_MAIN();
