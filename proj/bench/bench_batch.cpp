// Copyright (c) 2026 The dfsurf Authors. All Rights Reserved.
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

#include <benchmark/benchmark.h>

#include <map>
#include <vector>

#include "dfsurf/batch.hpp"
#include "support/fixtures.hpp"

namespace {

const std::vector<dfsurf::LabelledTree>& corpus(std::size_t n) {
  static std::map<std::size_t, std::vector<dfsurf::LabelledTree>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    dfsurf::testing::TreeGen gen(5);
    it = cache.emplace(n, gen.corpus(n)).first;
  }
  return it->second;
}

void BM_CrossCheckSerial(benchmark::State& state) {
  const auto& trees = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dfsurf::crossCheckCorpusSerial(trees));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CrossCheckParallel(benchmark::State& state) {
  const auto& trees = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dfsurf::crossCheckCorpusParallel(trees));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

dfsurf::EquationSystem combSystem() {
  return dfsurf::emitCombEquations({{{{1, 0, -1}, 1}, {{2, -2}, 0}, {{3, 1}, 0}}}).system;
}

void BM_VerifyRelationsSerial(benchmark::State& state) {
  const auto s = combSystem();
  for (auto _ : state) benchmark::DoNotOptimize(dfsurf::verifyRelations(s));
}

void BM_VerifyRelationsParallel(benchmark::State& state) {
  const auto s = combSystem();
  for (auto _ : state) benchmark::DoNotOptimize(dfsurf::verifyRelationsParallel(s));
}

}  // namespace

BENCHMARK(BM_CrossCheckSerial)->Arg(100)->Arg(400);
BENCHMARK(BM_CrossCheckParallel)->Arg(100)->Arg(400);
BENCHMARK(BM_VerifyRelationsSerial);
BENCHMARK(BM_VerifyRelationsParallel);

BENCHMARK_MAIN();
