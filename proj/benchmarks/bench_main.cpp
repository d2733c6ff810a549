// SPDX-License-Identifier: Apache-2.0
//
// ndtlab: delivery-time analysis for cache-aided broadcast-relay networks
// Copyright (C) 2026 The ndtlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "ndtlab/bounds.hpp"
#include "ndtlab/linksim.hpp"
#include "ndtlab/regions.hpp"
#include "ndtlab/scheduler.hpp"

namespace {

using ndtlab::Rational;

ndtlab::CornerConfig corner(int K, int M, int t) {
  return ndtlab::CornerConfig(ndtlab::make_config(K, M, Rational(t, M), Rational(1, 2)));
}

void BM_OneShot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto cfg = corner(n, n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(ndt_one_shot(cfg));
}
BENCHMARK(BM_OneShot)->Arg(4)->Arg(16)->Arg(32);

void BM_LowerBound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto cfg = ndtlab::make_config(n, n, Rational(1, 2), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(ndt_lower_bound(cfg));
}
BENCHMARK(BM_LowerBound)->Arg(4)->Arg(16)->Arg(32);

void BM_Envelope(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const ndtlab::AchievableEnvelope env(n, n, Rational(1, 2));
    benchmark::DoNotOptimize(env(Rational(1, 3)));
  }
}
BENCHMARK(BM_Envelope)->Arg(4)->Arg(16);

void BM_RegionMap(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ndtlab::region_map(2, Rational(1, 100), 20));
}
BENCHMARK(BM_RegionMap)->Unit(benchmark::kMillisecond);

void BM_BuildAndVerifySchedule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto cfg = corner(n, n, n / 2);
  const auto demand = ndtlab::worst_case_demand(cfg.base());
  for (auto _ : state) {
    const auto schedule = ndtlab::build_schedule(cfg, demand);
    benchmark::DoNotOptimize(ndtlab::verify_schedule(schedule, cfg));
  }
}
BENCHMARK(BM_BuildAndVerifySchedule)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_LinkTrials(benchmark::State& state) {
  ndtlab::SimulationSettings s;
  s.trials = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ndtlab::estimate_exponents(s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LinkTrials)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
