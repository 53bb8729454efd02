// Copyright 2026 The trotterbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "trotterbench/fermionic_partition.hpp"
#include "trotterbench/qubit_map.hpp"
#include "trotterbench/qubit_partition.hpp"

namespace tb = trotterbench;

namespace {

tb::MolecularTensors fixture(const char* name) {
  return tb::load_fcidump(std::string(TROTTERBENCH_FIXTURE_DIR) + "/" + name + ".fcidump");
}

void BM_JordanWignerLiH(benchmark::State& state) {
  const auto t = fixture("LiH");
  for (auto _ : state) benchmark::DoNotOptimize(tb::map_to_qubits(t, tb::Mapping::JordanWigner));
}
BENCHMARK(BM_JordanWignerLiH)->Unit(benchmark::kMillisecond);

void BM_BravyiKitaevLiH(benchmark::State& state) {
  const auto t = fixture("LiH");
  for (auto _ : state) benchmark::DoNotOptimize(tb::map_to_qubits(t, tb::Mapping::BravyiKitaev));
}
BENCHMARK(BM_BravyiKitaevLiH)->Unit(benchmark::kMillisecond);

void BM_LowRankLiH(benchmark::State& state) {
  const auto t = fixture("LiH");
  for (auto _ : state) benchmark::DoNotOptimize(tb::lr_decompose(t, 1e-6));
}
BENCHMARK(BM_LowRankLiH)->Unit(benchmark::kMillisecond);

void BM_GreedyFullRankH2(benchmark::State& state) {
  const auto t = fixture("H2");
  for (auto _ : state) benchmark::DoNotOptimize(tb::gfro_decompose(t, 1e-6, 20));
}
BENCHMARK(BM_GreedyFullRankH2)->Unit(benchmark::kMillisecond);

void BM_SortedInsertionLiH(benchmark::State& state) {
  const auto h = tb::map_to_qubits(fixture("LiH"), tb::Mapping::BravyiKitaev);
  for (auto _ : state) benchmark::DoNotOptimize(tb::group_si(h));
}
BENCHMARK(BM_SortedInsertionLiH)->Unit(benchmark::kMillisecond);

void BM_LargestFirstLiH(benchmark::State& state) {
  const auto h = tb::map_to_qubits(fixture("LiH"), tb::Mapping::BravyiKitaev);
  for (auto _ : state) benchmark::DoNotOptimize(tb::group_lf(h));
}
BENCHMARK(BM_LargestFirstLiH)->Unit(benchmark::kMillisecond);

}  // namespace
