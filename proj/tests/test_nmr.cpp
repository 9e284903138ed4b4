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

#include <algorithm>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "nohide/circuit.hpp"
#include "nohide/nmr.hpp"
#include "test_helpers.hpp"

using namespace nohide;
using test::kPi;

namespace {

DensityMatrix input_product(double theta, double phi) {
  StateVector psi = prepare_psi(theta, phi);
  ComplexVector amps = ComplexVector::Zero(8);
  amps(0) = psi.amplitude(0);
  amps(4) = psi.amplitude(1);
  return DensityMatrix::from_pure(StateVector(3, amps));
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

TEST_CASE("transverse signal of the reference input is real after calibration") {
  DensityMatrix ref = input_product(kPi / 2.0, kPi / 2.0);
  const double phase = calibrate_receiver(ref, 1);
  Complex s = transverse_signal(ref, 1, phase);
  REQUIRE_THAT(s.real(), Catch::Matchers::WithinAbs(0.5, 1e-15));
  REQUIRE_THAT(s.imag(), Catch::Matchers::WithinAbs(0.0, 1e-15));
}

TEST_CASE("longitudinal states carry no signal and fail calibration") {
  DensityMatrix rho = DensityMatrix::from_pure(StateVector::basis(3, 0));
  REQUIRE(std::abs(transverse_signal(rho, 1, 0.0)) == 0.0);
  REQUIRE_THROWS_AS(calibrate_receiver(rho, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(transverse_signal(rho, 5, 0.0), std::invalid_argument);
}

TEST_CASE("calibration examples") {
  // Magnetization along +y: rho = (I + sigma_y)/2 on one spin.
  ComplexMatrix m = (ComplexMatrix::Identity(2, 2) + pauli_y()) / 2.0;
  DensityMatrix along_y(1, m);
  const double phase = calibrate_receiver(along_y, 1);
  Complex s = transverse_signal(along_y, 1, phase);
  REQUIRE(s.real() > 0.0);
  REQUIRE_THAT(s.imag(), Catch::Matchers::WithinAbs(0.0, 1e-15));

  // Already real-positive signal: phase 0.
  ComplexMatrix mx = (ComplexMatrix::Identity(2, 2) + pauli_x()) / 2.0;
  REQUIRE_THAT(calibrate_receiver(DensityMatrix(1, mx), 1),
               Catch::Matchers::WithinAbs(0.0, 1e-15));
}

TEST_CASE("expected output's spin-3 signal follows sin(theta) sin(phi)") {
  DensityMatrix ref = input_product(kPi / 2.0, kPi / 2.0);
  const double phase = calibrate_receiver(ref, 1);
  const double ref_mag = std::abs(transverse_signal(ref, 1, phase));
  for (double theta : {0.4, 1.3, 2.7}) {
    for (double phi : {0.2, 2.0, 4.9}) {
      Complex s = transverse_signal(expected_output(theta, phi), 3, phase) / ref_mag;
      REQUIRE_THAT(s.real(), Catch::Matchers::WithinAbs(std::sin(theta) * std::sin(phi),
                                                        1e-12));
    }
  }
}

TEST_CASE("signal linearity in the density matrix") {
  std::mt19937_64 rng(41);
  DensityMatrix a = random_density(3, rng);
  DensityMatrix b = random_density(3, rng);
  const double w = 0.3;
  DensityMatrix mix(3, w * a.matrix() + (1.0 - w) * b.matrix());
  for (int spin = 1; spin <= 3; ++spin) {
    Complex expect = w * transverse_signal(a, spin, 0.4) +
                     (1.0 - w) * transverse_signal(b, spin, 0.4);
    REQUIRE(std::abs(transverse_signal(mix, spin, 0.4) - expect) < 1e-14);
  }
}

TEST_CASE("full-grid closed-form surfaces at gate level") {
  const auto records = observe_gate_grid(13, 25);
  REQUIRE(records.size() == 325 * 6);
  for (const auto& r : records) {
    const double surface = std::sin(r.theta) * std::sin(r.phi);
    REQUIRE(std::abs(r.signal) <= 1.0 + 1e-9);
    if (r.stage == Stage::Input && r.spin == 1) {
      REQUIRE_THAT(r.signal.real(), Catch::Matchers::WithinAbs(surface, 1e-12));
    } else if (r.stage == Stage::Output && r.spin == 3) {
      REQUIRE_THAT(r.signal.real(), Catch::Matchers::WithinAbs(surface, 1e-9));
    } else {
      REQUIRE(std::abs(r.signal) < 1e-12);
    }
  }
}

TEST_CASE("spectrum lines of the expected output") {
  const SpinSystem sys = sample_spin_system();
  DensityMatrix out = expected_output(kPi / 2.0, kPi / 2.0);

  auto lines3 = spectrum_lines(out, 3, sys);
  REQUIRE(lines3.size() == 4);
  int nonzero = 0;
  Complex first_amp;
  for (const auto& line : lines3) {
    if (std::abs(line.amplitude) > 1e-14) {
      if (nonzero == 0) first_amp = line.amplitude;
      ++nonzero;
      const bool sigma12 = line.partner_states == std::pair{0b000, 0b001};
      const bool sigma78 = line.partner_states == std::pair{0b110, 0b111};
      REQUIRE((sigma12 || sigma78));
      REQUIRE(std::abs(line.amplitude - first_amp) < 1e-14);  // in phase
    }
  }
  REQUIRE(nonzero == 2);

  for (int spin : {1, 2}) {
    for (const auto& line : spectrum_lines(out, spin, sys)) {
      REQUIRE(std::abs(line.amplitude) < 1e-14);
    }
  }
}

TEST_CASE("spin-3 line frequencies span the coupling combinations") {
  const SpinSystem sys = sample_spin_system();
  DensityMatrix any = DensityMatrix::maximally_mixed(3);
  auto lines = spectrum_lines(any, 3, sys);
  std::vector<double> freqs;
  for (const auto& line : lines) freqs.push_back(line.frequency_hz - sys.offsets_hz[2]);
  std::sort(freqs.begin(), freqs.end());
  std::vector<double> expected = {-(224.5 + 310.9) / 2.0, -(310.9 - 224.5) / 2.0,
                                  (310.9 - 224.5) / 2.0, (224.5 + 310.9) / 2.0};
  for (int k = 0; k < 4; ++k) {
    REQUIRE_THAT(freqs[k], Catch::Matchers::WithinAbs(expected[k], 1e-12));
  }
}

TEST_CASE("partner states differ exactly in the observed spin's bit") {
  const SpinSystem sys = sample_spin_system();
  DensityMatrix rho = DensityMatrix::maximally_mixed(3);
  for (int spin = 1; spin <= 3; ++spin) {
    for (const auto& line : spectrum_lines(rho, spin, sys)) {
      const int diff = line.partner_states.first ^ line.partner_states.second;
      REQUIRE(diff == (1 << (3 - spin)));
    }
  }
}

TEST_CASE("multiplet sum equals the total transverse signal") {
  const SpinSystem sys = sample_spin_system();
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 5; ++trial) {
    DensityMatrix rho = random_density(3, rng);
    for (int spin = 1; spin <= 3; ++spin) {
      Complex sum = 0.0;
      for (const auto& line : spectrum_lines(rho, spin, sys, 0.7)) {
        sum += line.amplitude;
      }
      REQUIRE(std::abs(sum - transverse_signal(rho, spin, 0.7)) < 1e-12);
    }
  }
}

TEST_CASE("pseudo-pure preparation") {
  REQUIRE(max_abs(pseudo_pure(1.0).matrix() -
                  DensityMatrix::from_pure(StateVector::basis(3, 0)).matrix()) == 0.0);

  DensityMatrix half = pseudo_pure(0.5);
  REQUIRE_THAT(std::abs(half.matrix().trace()), Catch::Matchers::WithinAbs(1.0, 1e-15));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(half.matrix());
  REQUIRE_THAT(solver.eigenvalues().maxCoeff(), Catch::Matchers::WithinAbs(0.5625, 1e-15));
  REQUIRE_THAT(solver.eigenvalues().minCoeff(), Catch::Matchers::WithinAbs(0.0625, 1e-15));

  REQUIRE_THROWS_AS(pseudo_pure(0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(pseudo_pure(1.5), std::invalid_argument);
}

TEST_CASE("normalized surfaces are independent of the pseudo-pure fraction") {
  const auto full = observe_gate_grid(3, 5, 1.0);
  const auto diluted = observe_gate_grid(3, 5, 0.35);
  REQUIRE(full.size() == diluted.size());
  for (std::size_t k = 0; k < full.size(); ++k) {
    REQUIRE(std::abs(full[k].signal - diluted[k].signal) < 1e-12);
  }
}

TEST_CASE("noisy pulse-level surface still correlates with the ideal one") {
  const SpinSystem sys = sample_spin_system();
  NoiseModel noise;
  noise.calibration_sigma = 0.03;
  noise.inhomogeneity_samples = 200;
  noise.seed = 4242;
  const auto records = observe_pulse_grid(5, 9, sys, noise);
  std::vector<double> measured, ideal;
  for (const auto& r : records) {
    REQUIRE(std::abs(r.signal) <= 1.0 + 1e-9);
    if (r.stage == Stage::Output && r.spin == 3) {
      measured.push_back(r.signal.real());
      ideal.push_back(std::sin(r.theta) * std::sin(r.phi));
    }
  }
  REQUIRE(measured.size() == 45);
  REQUIRE(pearson(measured, ideal) > 0.95);
}

TEST_CASE("T2 attenuation over the compiled sequence stays above the expected floor") {
  const SpinSystem sys = sample_spin_system();
  NoiseModel no_t2;
  NoiseModel with_t2;
  with_t2.t2_enabled = true;
  const double theta = kPi / 2.0, phi = kPi / 2.0;
  const PulseSequence seq = expand_macros(compile_full(theta, phi), sys);
  const DensityMatrix pps = pseudo_pure(1.0);
  const Complex s_quiet =
      transverse_signal(simulate_physical(seq, pps, sys, no_t2), 3, 0.0);
  const Complex s_damped =
      transverse_signal(simulate_physical(seq, pps, sys, with_t2), 3, 0.0);
  const double ratio = std::abs(s_damped) / std::abs(s_quiet);
  REQUIRE(ratio >= std::exp(-0.03 / 0.7));
  REQUIRE(ratio <= 1.0);
}
