// Copyright 2026 The symres Authors
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


#include <numbers>
#include <vector>

#include <benchmark/benchmark.h>

#include "symres/lcu_circuit.hpp"
#include "symres/qvap.hpp"

namespace {

using namespace symres;

void BM_HadamardGate(benchmark::State& st) {
  StateVector s = StateVector::equiprobable(static_cast<int>(st.range(0)));
  int q = 0;
  for (auto _ : st) {
    apply_gate(s, gates::h(q));
    q = (q + 1) % s.n_qubits();
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations()) * static_cast<std::int64_t>(s.dim()));
}
BENCHMARK(BM_HadamardGate)->DenseRange(8, 20, 4);

void BM_XxYyRotation(benchmark::State& st) {
  StateVector s = StateVector::equiprobable(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    apply_xx_yy_rotation(s, 0, s.n_qubits() - 1, 0.3);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
}
BENCHMARK(BM_XxYyRotation)->DenseRange(8, 20, 4);

void BM_SpinPhase(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  StateVector s = StateVector::equiprobable(n);
  const PhaseEvolution ev = st.range(1) == 0 ? PhaseEvolution::exact(Symmetry::kSpin)
                                             : PhaseEvolution::trotter(kDefaultSpinTrotterSteps);
  for (auto _ : st) {
    ev.apply(s, 0.2);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
}
BENCHMARK(BM_SpinPhase)->ArgsProduct({{6, 8, 10}, {0, 1}});

void BM_OracleApply(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto oracle = build_oracle(build_projector(number_ladder(n), static_cast<std::size_t>(n / 2)),
                                   {0.0, std::numbers::pi / 2});
  const Operator op = oracle_operator(oracle, PhaseEvolution::exact(Symmetry::kNumber));
  const StateVector s = StateVector::equiprobable(n);
  for (auto _ : st) benchmark::DoNotOptimize(op(s));
}
BENCHMARK(BM_OracleApply)->DenseRange(8, 16, 4);

void BM_HadamardTest(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const Operator ops[] = {oracle_operator(
      build_oracle(build_projector(number_ladder(n), static_cast<std::size_t>(n / 2)), {0.0, std::numbers::pi / 2}),
      PhaseEvolution::exact(Symmetry::kNumber))};
  const StateVector s = StateVector::equiprobable(n);
  for (auto _ : st) benchmark::DoNotOptimize(hadamard_test(s, ops, Part::kReal, Sampling{4096, 1}));
}
BENCHMARK(BM_HadamardTest)->DenseRange(8, 16, 4);

void BM_LcuRun(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto plan = make_lcu_plan(build_projector(number_ladder(n), static_cast<std::size_t>(n / 2)),
                                  PhaseEvolution::exact(Symmetry::kNumber), Unprepare::kEDagger);
  const StateVector s = StateVector::equiprobable(n);
  for (auto _ : st) benchmark::DoNotOptimize(run_lcu(s, plan));
}
BENCHMARK(BM_LcuRun)->DenseRange(8, 12, 2);

void BM_QvapObjective(benchmark::State& st) {
  const PairingModel model{8, 1.0, 0.5};
  ObjectiveSettings settings;
  settings.route = static_cast<ObjectiveRoute>(st.range(0));
  const QvapObjective objective(model, 4, settings);
  const std::vector<double> thetas = default_initial_thetas(8, 4);
  for (auto _ : st) benchmark::DoNotOptimize(objective(thetas));
}
BENCHMARK(BM_QvapObjective)->DenseRange(0, 3);

}  // namespace

BENCHMARK_MAIN();
