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

#ifndef NOHIDE_CIRCUIT_HPP
#define NOHIDE_CIRCUIT_HPP

#include <vector>

#include "nohide/state.hpp"

namespace nohide {

// Gate-level construction of the randomize-then-recover protocol on
// 3 qubits: qubit 1 carries the input state, qubits 2 and 3 are the ancilla.

// cos(θ/2)|0⟩ + e^{i(φ−π/2)} sin(θ/2)|1⟩ — the state an RF (θ)_φ pulse
// produces from |0⟩.
StateVector prepare_psi(double theta, double phi);

// (|00⟩+|01⟩+|10⟩+|11⟩)/2 on the ancilla pair.
StateVector ancilla_state();

// The 8×8 randomization unitary, entries in {0, ±1}. Equal to the
// conditional unitary with branch operators (I, X, iY, Z) on ancilla basis
// states (00, 01, 10, 11); the Y branch carries phase π/2.
ComplexMatrix randomization_unitary();

struct ConditionalBranch {
  ComplexMatrix op;   // 2×2 unitary on the system qubit
  int ancilla_index;  // computational basis state of the ancilla
};

// Σ_k op_k ⊗ |A_k⟩⟨A_k| in big-endian order. The branches must carry
// distinct indices covering the whole ancilla basis and unitary operators.
ComplexMatrix conditional_unitary(const std::vector<ConditionalBranch>& branches);

// CNOT with given control/target (1-based) embedded in n qubits.
ComplexMatrix cnot_matrix(int control, int target, int n_qubits);

const ComplexMatrix& hadamard();

// V₂₃ = CNOT₂₃ · H(qubit 2) · CNOT₂₃, rightmost applied first. Note the
// Hadamard acts on qubit 2: with the randomization matrix above, only this
// placement sends every hidden state to |Φ⁺⟩₁₂ ⊗ |ψ⟩₃.
ComplexMatrix recovery_v23();

// I ⊗ V₂₃ on the full 3-qubit space.
ComplexMatrix recovery_unitary();

// (|00⟩+|11⟩)/√2.
StateVector bell_phi_plus();

struct ProtocolRecord {
  double theta = 0.0;
  double phi = 0.0;
  StateVector input_state;     // |ψ⟩ ⊗ |A⟩
  StateVector hidden_state;    // U · input
  DensityMatrix system_marginal;  // Tr₂₃(hidden) — must be I/2
  StateVector output_state;    // recovery · hidden
  DensityMatrix recovered_qubit;  // Tr₁₂(output)
  DensityMatrix bell_marginal;    // Tr₃(output)
};

ProtocolRecord run_protocol(double theta, double phi);

// The completely positive map ρ → (1/4) Σ_k σ_k ρ σ_k = I/2.
DensityMatrix kraus_randomize(const DensityMatrix& rho);

// |Ψ_out⟩⟨Ψ_out| with |Ψ_out⟩ = |Φ⁺⟩₁₂ ⊗ |ψ⟩₃, normalized to trace 1.
DensityMatrix expected_output(double theta, double phi);

struct GridPoint {
  int theta_index = 0;
  int phi_index = 0;
  double theta_deg = 0.0;
  double phi_deg = 0.0;
  double theta = 0.0;  // radians
  double phi = 0.0;
};

// θ over [0,π] in theta_steps values, φ over [0,2π] in phi_steps values,
// θ-major order. Throws for steps < 2. The default 13×25 is the 15° grid.
std::vector<GridPoint> make_grid(int theta_steps, int phi_steps);

std::vector<ProtocolRecord> grid_scan(int theta_steps, int phi_steps);

}  // namespace nohide

#endif  // NOHIDE_CIRCUIT_HPP
