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
#include "trotterbench/metrics.hpp"
#include "trotterbench/qubit_map.hpp"
#include "trotterbench/qubit_partition.hpp"

namespace tb = trotterbench;

namespace {

std::vector<tb::SparseOp> lih_si_fragments(std::size_t count) {
  const auto t = tb::load_fcidump(std::string(TROTTERBENCH_FIXTURE_DIR) + "/LiH.fcidump");
  const auto groups = tb::group_si(tb::map_to_qubits(t, tb::Mapping::BravyiKitaev)).fragments();
  std::vector<tb::SparseOp> out;
  for (std::size_t i = 0; i < std::min(count, groups.size()); ++i) out.push_back(tb::to_sparse(groups[i]));
  return out;
}

void BM_ToSparseLiH(benchmark::State& state) {
  const auto t = tb::load_fcidump(std::string(TROTTERBENCH_FIXTURE_DIR) + "/LiH.fcidump");
  const auto h = tb::map_to_qubits(t, tb::Mapping::JordanWigner);
  for (auto _ : state) benchmark::DoNotOptimize(tb::to_sparse(h));
}
BENCHMARK(BM_ToSparseLiH)->Unit(benchmark::kMillisecond);

void BM_CommutatorNormLiHPair(benchmark::State& state) {
  const auto ops = lih_si_fragments(2);
  for (auto _ : state) {
    tb::FragmentSet set(ops);
    benchmark::DoNotOptimize(set.commutator_norm(0, 1));
  }
}
BENCHMARK(BM_CommutatorNormLiHPair)->Unit(benchmark::kMillisecond);

void BM_AlphaLiH(benchmark::State& state) {
  const auto ops = lih_si_fragments(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tb::alpha(ops));
}
BENCHMARK(BM_AlphaLiH)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_TGateCount(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tb::tgate_count(12.1, 630.0, 1e-3));
}
BENCHMARK(BM_TGateCount)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
