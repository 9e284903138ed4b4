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

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "nohide/circuit.hpp"
#include "nohide/pulse.hpp"
#include "nohide/tomo.hpp"
#include "test_helpers.hpp"

using namespace nohide;
using test::kPi;

TEST_CASE("pauli labels and counts") {
  REQUIRE(pauli_label(1, 3) == "IIX");
  REQUIRE(pauli_label(0b111111, 3) == "ZZZ");
  REQUIRE(pauli_expectations(DensityMatrix::maximally_mixed(3)).values.size() == 63);
}

TEST_CASE("pauli expectations of reference states") {
  PauliTable mixed = pauli_expectations(DensityMatrix::maximally_mixed(3));
  for (double v : mixed.values) REQUIRE(std::abs(v) < 1e-15);

  PauliTable ground =
      pauli_expectations(DensityMatrix::from_pure(StateVector::basis(3, 0)));
  for (int k = 1; k <= 63; ++k) {
    const std::string label = pauli_label(k, 3);
    const bool z_only = label.find('X') == std::string::npos &&
                        label.find('Y') == std::string::npos;
    REQUIRE_THAT(ground.values[k - 1],
                 Catch::Matchers::WithinAbs(z_only ? 1.0 : 0.0, 1e-15));
  }
}

TEST_CASE("expected output expectations trace the Bell and psi factors") {
  PauliTable t = pauli_expectations(expected_output(kPi / 2.0, kPi / 2.0));
  auto value_of = [&](const std::string& label) {
    for (int k = 1; k <= 63; ++k) {
      if (pauli_label(k, 3) == label) return t.values[k - 1];
    }
    FAIL("label not found");
    return 0.0;
  };
  REQUIRE_THAT(value_of("XXI"), Catch::Matchers::WithinAbs(1.0, 1e-12));
  REQUIRE_THAT(value_of("ZZI"), Catch::Matchers::WithinAbs(1.0, 1e-12));
  REQUIRE_THAT(value_of("IIX"), Catch::Matchers::WithinAbs(1.0, 1e-12));
}

TEST_CASE("tomography round trip on random states") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    DensityMatrix rho = random_density(3, rng);
    DensityMatrix back = reconstruct(pauli_expectations(rho));
    REQUIRE(max_abs(back.matrix() - rho.matrix()) < 1e-12);
  }
}

TEST_CASE("expectations of a reconstruction reproduce any table") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  PauliTable table;
  table.n_qubits = 3;
  for (int k = 0; k < 63; ++k) table.values.push_back(uniform(rng));
  PauliTable back = pauli_expectations(reconstruct(table));
  for (int k = 0; k < 63; ++k) {
    REQUIRE_THAT(back.values[k], Catch::Matchers::WithinAbs(table.values[k], 1e-12));
  }
}

TEST_CASE("reconstruct edge cases") {
  PauliTable zeros;
  zeros.n_qubits = 3;
  zeros.values.assign(63, 0.0);
  REQUIRE(max_abs(reconstruct(zeros).matrix() -
                  ComplexMatrix::Identity(8, 8) / 8.0) == 0.0);

  PauliTable incomplete;
  incomplete.n_qubits = 3;
  incomplete.values.assign(10, 0.0);
  REQUIRE_THROWS_AS(reconstruct(incomplete), std::invalid_argument);
}

TEST_CASE("reconstruction of noisy expectations stays Hermitian with unit trace") {
  std::mt19937_64 rng(53);
  std::normal_distribution<double> jitter(0.0, 0.02);
  PauliTable t = pauli_expectations(expected_output(1.1, 0.6));
  for (double& v : t.values) v += jitter(rng);
  DensityMatrix rho = reconstruct(t);
  REQUIRE_THAT(std::abs(rho.matrix().trace()), Catch::Matchers::WithinAbs(1.0, 1e-12));
  REQUIRE(max_abs(rho.matrix() - rho.matrix().adjoint()) < 1e-12);
  // Positivity is only reported.
  REQUIRE(std::isfinite(rho.min_eigenvalue()));
}

TEST_CASE("deviation report arithmetic") {
  DensityMatrix a = expected_output(0.9, 1.7);
  DeviationReport same = deviation_report(a.matrix(), a.matrix());
  REQUIRE(same.avg_abs_dev == 0.0);
  REQUIRE(same.max_abs_dev == 0.0);
  REQUIRE(same.n == 8);

  ComplexMatrix perturbed = a.matrix();
  perturbed(2, 5) += 0.08;
  DeviationReport report = deviation_report(a.matrix(), perturbed);
  REQUIRE_THAT(report.avg_abs_dev, Catch::Matchers::WithinAbs(0.00125, 1e-15));
  REQUIRE_THAT(report.max_abs_dev, Catch::Matchers::WithinAbs(0.08, 1e-15));

  REQUIRE_THROWS_AS(deviation_report(a.matrix(), ComplexMatrix::Identity(4, 4)),
                    std::invalid_argument);
}

TEST_CASE("deviation report is symmetric and satisfies the triangle inequality") {
  std::mt19937_64 rng(59);
  DensityMatrix a = random_density(3, rng);
  DensityMatrix b = random_density(3, rng);
  DensityMatrix c = random_density(3, rng);
  DeviationReport ab = deviation_report(a.matrix(), b.matrix());
  DeviationReport ba = deviation_report(b.matrix(), a.matrix());
  REQUIRE(ab.avg_abs_dev == ba.avg_abs_dev);
  REQUIRE(ab.max_abs_dev == ba.max_abs_dev);

  DeviationReport ac = deviation_report(a.matrix(), c.matrix());
  DeviationReport cb = deviation_report(c.matrix(), b.matrix());
  REQUIRE(ab.avg_abs_dev <= ac.avg_abs_dev + cb.avg_abs_dev + 1e-15);
  REQUIRE(ab.max_abs_dev <= ac.max_abs_dev + cb.max_abs_dev + 1e-15);
}

TEST_CASE("split real/imaginary deviation mode") {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  ComplexMatrix b = a;
  b(0, 1) = Complex(0.03, -0.04);
  DeviationReport split = deviation_report(a, b, DeviationMode::SplitRealImag);
  REQUIRE_THAT(split.max_abs_dev, Catch::Matchers::WithinAbs(0.04, 1e-15));
  REQUIRE_THAT(split.avg_abs_dev, Catch::Matchers::WithinAbs(0.07 / 8.0, 1e-15));
  DeviationReport mod = deviation_report(a, b, DeviationMode::Modulus);
  REQUIRE_THAT(mod.max_abs_dev, Catch::Matchers::WithinAbs(0.05, 1e-15));
}

TEST_CASE("Bell marginal tomography across the grid") {
  const ComplexMatrix bell_proj =
      DensityMatrix::from_pure(bell_phi_plus()).matrix();
  for (const ProtocolRecord& rec : grid_scan(5, 9)) {
    DeviationReport report =
        deviation_report(bell_proj, rec.bell_marginal.matrix());
    REQUIRE(report.max_abs_dev < 1e-12);
  }
}

TEST_CASE("local z phase fit recovers an applied rotation") {
  std::mt19937_64 rng(61);
  DensityMatrix rho = random_density(3, rng);
  const std::vector<double> applied = {0.8, -1.9, 2.4};
  ComplexMatrix rotated = apply_local_z(rho.matrix(), applied, 3);
  // Fitting the rotated matrix against the original must undo the rotation.
  std::vector<double> fitted = fit_local_z_phases(rotated, rho.matrix(), 3);
  ComplexMatrix corrected = apply_local_z(rotated, fitted, 3);
  REQUIRE(max_abs(corrected - rho.matrix()) < 1e-12);
}

TEST_CASE("receiver calibration aligns the noiseless physical output") {
  const SpinSystem sys = sample_spin_system();
  const double theta = 0.7, phi = 2.1;
  const ComplexMatrix theory = expected_output(theta, phi).matrix();
  const PulseSequence seq = expand_macros(compile_full(theta, phi), sys);
  const DensityMatrix pps = DensityMatrix::from_pure(StateVector::basis(3, 0));
  const DensityMatrix simulated = simulate_physical(seq, pps, sys, NoiseModel{});
  const std::vector<double> zcal =
      fit_local_z_phases(simulated.matrix(), theory, 3);
  const ComplexMatrix corrected = apply_local_z(simulated.matrix(), zcal, 3);
  DeviationReport report = deviation_report(theory, corrected);
  REQUIRE(report.max_abs_dev < 1e-12);
}
