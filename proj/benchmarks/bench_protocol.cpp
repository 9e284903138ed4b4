// Copyright 2026 The nohide Authors
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

#include <numbers>

#include "nohide/circuit.hpp"
#include "nohide/nmr.hpp"
#include "nohide/pulse.hpp"
#include "nohide/tomo.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

void BM_RunProtocol(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(nohide::run_protocol(0.7, 2.1));
  }
}
BENCHMARK(BM_RunProtocol);

void BM_GridScan(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nohide::grid_scan(steps, 2 * steps - 1));
  }
}
BENCHMARK(BM_GridScan)->Arg(5)->Arg(13);

void BM_ExpandFullSequence(benchmark::State& state) {
  const nohide::SpinSystem sys = nohide::sample_spin_system();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        nohide::expand_macros(nohide::compile_full(kPi / 2.0, kPi / 2.0), sys));
  }
}
BENCHMARK(BM_ExpandFullSequence);

void BM_SimulatePhysicalFull(benchmark::State& state) {
  const nohide::SpinSystem sys = nohide::sample_spin_system();
  const nohide::PulseSequence seq =
      nohide::expand_macros(nohide::compile_full(kPi / 2.0, kPi / 2.0), sys);
  const nohide::DensityMatrix pps =
      nohide::DensityMatrix::from_pure(nohide::StateVector::basis(3, 0));
  nohide::NoiseModel noise;
  noise.calibration_sigma = 0.03;
  noise.inhomogeneity_samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nohide::simulate_physical(seq, pps, sys, noise));
  }
}
BENCHMARK(BM_SimulatePhysicalFull)->Arg(1)->Arg(50)->Arg(200);

void BM_TomographyRoundTrip(benchmark::State& state) {
  const nohide::DensityMatrix rho = nohide::expected_output(0.7, 2.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nohide::reconstruct(nohide::pauli_expectations(rho)));
  }
}
BENCHMARK(BM_TomographyRoundTrip);

}  // namespace

BENCHMARK_MAIN();
