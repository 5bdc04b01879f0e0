// Copyright 2026 The qtedge Authors
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

#include <cstdint>

#include <benchmark/benchmark.h>

#include "qtedge/bosonic.hpp"
#include "qtedge/fock.hpp"
#include "qtedge/ising.hpp"
#include "qtedge/matrix_exp.hpp"
#include "qtedge/spectral.hpp"

namespace {

using namespace qtedge;

void BM_IsingProduct(benchmark::State& state) {
  ising::IsingParams p;
  p.n_sites = std::int64_t{1} << state.range(0);
  p.g0 = 1.199;
  p.g1 = 1.2;
  p.t = 0.05;
  for (auto _ : state) benchmark::DoNotOptimize(ising::ising_log_fidelity_exact(p));
  state.SetItemsProcessed(state.iterations() * p.n_sites / 2);
}
BENCHMARK(BM_IsingProduct)->Arg(10)->Arg(16)->Arg(20);

void BM_Expm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd a = 3.0 * Eigen::MatrixXd::Random(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::expm(a));
}
BENCHMARK(BM_Expm)->Arg(2)->Arg(4)->Arg(16);

void BM_OpoEngine(benchmark::State& state) {
  const auto p = bosonic::OpoParams::from_criticality(0.8, 1.25, 1.6);
  for (auto _ : state) benchmark::DoNotOptimize(bosonic::opo_fidelity_engine(p));
}
BENCHMARK(BM_OpoEngine);

void BM_FisherPoint(benchmark::State& state) {
  const double g = state.range(0) / 10000.0;
  for (auto _ : state) benchmark::DoNotOptimize(spectral::normalized_fisher(g, 0.01));
}
BENCHMARK(BM_FisherPoint)->Arg(5000)->Arg(9900)->Arg(9999);

void BM_FisherThreshold(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(spectral::normalized_fisher_threshold(1e-3));
}
BENCHMARK(BM_FisherThreshold);

void BM_FockOpoOracle(benchmark::State& state) {
  const auto p = bosonic::OpoParams::from_criticality(0.8, 1.25, 1.6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::fock_opo_fidelity(p, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_FockOpoOracle)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
