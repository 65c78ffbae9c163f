// Copyright 2026 The twjac Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial versus parallel timings of the hot kernels.

#include <benchmark/benchmark.h>

#include "twjac/counting.hpp"
#include "twjac/cuspidal.hpp"
#include "twjac/groups.hpp"
#include "twjac/jacquet.hpp"
#include "twjac/modelrep.hpp"

using namespace twjac;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::kParallel : Exec::kSerial; }

void BM_JacquetCensus(benchmark::State& state) {
  const auto t = FieldTower::make(2, 1, 6);
  const Classifier classify(t);
  const TwistSpec a = TwistSpec::corner(3);
  const MatF m = MatF::identity(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacquet_census(classify, a, m, exec_of(state)));
  }
}
BENCHMARK(BM_JacquetCensus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RankTraceCensus(benchmark::State& state) {
  const auto t = FieldTower::make(2, 1, 1);
  const MatF a = e11_matrix(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(counting::rank_trace_census(t, a, exec_of(state)));
  }
}
BENCHMARK(BM_RankTraceCensus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MainTheorem(benchmark::State& state) {
  const auto t = FieldTower::make(3, 1, 4);
  const ModelRep model(t, 2);
  const Classifier classify(t);
  const auto theta = RegularCharacter::make(t, regular_characters(t).front());
  for (auto _ : state) {
    const auto censuses = m_psi_censuses(model, classify, exec_of(state));
    benchmark::DoNotOptimize(main_theorem_check(model, theta, censuses));
  }
}
BENCHMARK(BM_MainTheorem)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
