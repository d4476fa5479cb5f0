/*
 * Copyright 2026 The Wiretap LP Authors
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


#include <benchmark/benchmark.h>

#include "wiretap/baselines.h"
#include "wiretap/equivocation.h"
#include "wiretap/lp_limit.h"
#include "wiretap/ni_code.h"

namespace wiretap {
namespace {

// Total equivocation of the (1, n - 1) Ni table at one p.
void BM_TotalEquivocation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CodeTable table = StandardTable({1, n - 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(TotalEquivocation(table, 0.1));
  }
}
BENCHMARK(BM_TotalEquivocation)->DenseRange(4, 12, 2);

// One LP solve for each five-bit form.
void BM_SolveLp(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const LpInstance instance = BuildLp(5, 1 << l, 0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveLp(instance).objective);
  }
  state.counters["rows"] = static_cast<double>(instance.size());
}
BENCHMARK(BM_SolveLp)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_SampleBinning(benchmark::State& state) {
  BinningSampler sampler({{2, static_cast<int>(state.range(0))}, 1, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler.Next());
  }
}
BENCHMARK(BM_SampleBinning)->DenseRange(3, 9, 3);

void BM_StandardTable(benchmark::State& state) {
  const FormId form{3, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(StandardTable(form));
  }
}
BENCHMARK(BM_StandardTable)->DenseRange(2, 14, 4);

}  // namespace
}  // namespace wiretap

BENCHMARK_MAIN();
