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

#include "nohide/circuit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nohide {

namespace {
constexpr double kPi = std::numbers::pi;
}

StateVector prepare_psi(double theta, double phi) {
  ComplexVector amps(2);
  amps(0) = std::cos(theta / 2.0);
  amps(1) = std::exp(Complex(0, phi - kPi / 2.0)) * std::sin(theta / 2.0);
  return StateVector(1, std::move(amps));
}

StateVector ancilla_state() {
  ComplexVector amps = ComplexVector::Constant(4, Complex(0.5));
  return StateVector(2, std::move(amps));
}

ComplexMatrix conditional_unitary(const std::vector<ConditionalBranch>& branches) {
  const int k = static_cast<int>(branches.size());
  if (k == 0) throw std::invalid_argument("conditional_unitary: no branches");
  std::vector<bool> seen(k, false);
  for (const auto& b : branches) {
    if (b.ancilla_index < 0 || b.ancilla_index >= k) {
      throw std::invalid_argument("conditional_unitary: ancilla index out of range");
    }
    if (seen[b.ancilla_index]) {
      throw std::invalid_argument("conditional_unitary: duplicate ancilla index");
    }
    seen[b.ancilla_index] = true;
    if (b.op.rows() != 2 || b.op.cols() != 2 || !is_unitary(b.op)) {
      throw std::invalid_argument("conditional_unitary: branch op not a 2x2 unitary");
    }
  }
  ComplexMatrix u = ComplexMatrix::Zero(2 * k, 2 * k);
  for (const auto& b : branches) {
    ComplexMatrix proj = ComplexMatrix::Zero(k, k);
    proj(b.ancilla_index, b.ancilla_index) = 1.0;
    u += kron(b.op, proj);
  }
  return u;
}

ComplexMatrix randomization_unitary() {
  static const ComplexMatrix u = [] {
    ComplexMatrix m = ComplexMatrix::Zero(8, 8);
    m(0, 0) = 1;
    m(1, 5) = 1;
    m(2, 6) = 1;
    m(3, 3) = 1;
    m(4, 4) = 1;
    m(5, 1) = 1;
    m(6, 2) = -1;
    m(7, 7) = -1;
    return m;
  }();
  return u;
}

ComplexMatrix cnot_matrix(int control, int target, int n_qubits) {
  if (control == target || control < 1 || target < 1 || control > n_qubits ||
      target > n_qubits) {
    throw std::invalid_argument("cnot_matrix: bad control/target");
  }
  const int dim = 1 << n_qubits;
  ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const int cbit = (i >> (n_qubits - control)) & 1;
    const int out = cbit ? i ^ (1 << (n_qubits - target)) : i;
    u(out, i) = 1.0;
  }
  return u;
}

const ComplexMatrix& hadamard() {
  static const ComplexMatrix h = [] {
    ComplexMatrix m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
  }();
  return h;
}

ComplexMatrix recovery_v23() {
  const ComplexMatrix cnot = cnot_matrix(1, 2, 2);  // control 2, target 3 in-pair
  const ComplexMatrix h2 = kron(hadamard(), pauli_id());
  return cnot * h2 * cnot;
}

ComplexMatrix recovery_unitary() { return kron(pauli_id(), recovery_v23()); }

StateVector bell_phi_plus() {
  ComplexVector amps = ComplexVector::Zero(4);
  amps(0) = amps(3) = 1.0 / std::sqrt(2.0);
  return StateVector(2, std::move(amps));
}

ProtocolRecord run_protocol(double theta, double phi) {
  const StateVector psi = prepare_psi(theta, phi);
  const StateVector anc = ancilla_state();

  ComplexVector in = ComplexVector::Zero(8);
  for (int s = 0; s < 2; ++s) {
    for (int a = 0; a < 4; ++a) {
      in(s * 4 + a) = psi.amplitude(s) * anc.amplitude(a);
    }
  }
  StateVector input(3, in);
  StateVector hidden(3, randomization_unitary() * input.amplitudes());
  StateVector output(3, recovery_unitary() * hidden.amplitudes());

  DensityMatrix hidden_rho = DensityMatrix::from_pure(hidden);
  DensityMatrix output_rho = DensityMatrix::from_pure(output);

  return ProtocolRecord{theta,
                        phi,
                        std::move(input),
                        std::move(hidden),
                        partial_trace(hidden_rho, {1}),
                        std::move(output),
                        partial_trace(output_rho, {3}),
                        partial_trace(output_rho, {1, 2})};
}

DensityMatrix kraus_randomize(const DensityMatrix& rho) {
  if (rho.n_qubits() != 1) {
    throw std::invalid_argument("kraus_randomize: expects a 1-qubit state");
  }
  const ComplexMatrix& r = rho.matrix();
  ComplexMatrix out = r + pauli_x() * r * pauli_x() + pauli_y() * r * pauli_y() +
                      pauli_z() * r * pauli_z();
  return DensityMatrix(1, out / 4.0);
}

DensityMatrix expected_output(double theta, double phi) {
  const StateVector psi = prepare_psi(theta, phi);
  const StateVector bell = bell_phi_plus();
  ComplexVector out = ComplexVector::Zero(8);
  for (int b = 0; b < 4; ++b) {
    for (int s = 0; s < 2; ++s) {
      out(b * 2 + s) = bell.amplitude(b) * psi.amplitude(s);
    }
  }
  return DensityMatrix::from_pure(StateVector(3, std::move(out)));
}

std::vector<GridPoint> make_grid(int theta_steps, int phi_steps) {
  if (theta_steps < 2 || phi_steps < 2) {
    throw std::invalid_argument("make_grid: steps must be >= 2");
  }
  std::vector<GridPoint> grid;
  grid.reserve(static_cast<std::size_t>(theta_steps) * phi_steps);
  for (int ti = 0; ti < theta_steps; ++ti) {
    // Degrees first so the grid values print exactly (15, 30, ...).
    const double theta_deg = ti * 180.0 / (theta_steps - 1);
    for (int pi = 0; pi < phi_steps; ++pi) {
      const double phi_deg = pi * 360.0 / (phi_steps - 1);
      grid.push_back(GridPoint{ti, pi, theta_deg, phi_deg,
                               theta_deg * kPi / 180.0, phi_deg * kPi / 180.0});
    }
  }
  return grid;
}

std::vector<ProtocolRecord> grid_scan(int theta_steps, int phi_steps) {
  std::vector<ProtocolRecord> records;
  for (const GridPoint& p : make_grid(theta_steps, phi_steps)) {
    records.push_back(run_protocol(p.theta, p.phi));
  }
  return records;
}

}  // namespace nohide
