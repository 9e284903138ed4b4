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

#ifndef NOHIDE_STATE_HPP
#define NOHIDE_STATE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "nohide/matrix.hpp"

namespace nohide {

// Basis convention (fixed project-wide): big-endian, qubit 1 is the most
// significant bit. For 3 qubits the basis order is 000, 001, ..., 111.

class StateVector {
 public:
  // Validates Σ|amplitude|² = 1 within tol.
  StateVector(int n_qubits, ComplexVector amplitudes, double tol = kAlgebraTol);

  static StateVector basis(int n_qubits, int index);

  int n_qubits() const { return n_qubits_; }
  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  Complex amplitude(int i) const { return amplitudes_(i); }

 private:
  int n_qubits_;
  ComplexVector amplitudes_;
};

class DensityMatrix {
 public:
  // Validates unit trace, Hermiticity (kAlgebraTol) and eigenvalue
  // positivity (kEigenvalueTol).
  DensityMatrix(int n_qubits, ComplexMatrix matrix);

  // Validates trace and Hermiticity only; positivity is the caller's to
  // report. Used by tomographic reconstruction of noisy data.
  static DensityMatrix from_hermitian(int n_qubits, ComplexMatrix matrix);

  static DensityMatrix from_pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

  double min_eigenvalue() const;

 private:
  DensityMatrix() = default;
  int n_qubits_ = 0;
  ComplexMatrix matrix_;
};

enum class CoherenceLabel { ZeroQuantum, SingleQuantum, DoubleQuantum, TripleQuantum };

struct CoherenceOrder {
  CoherenceLabel label = CoherenceLabel::ZeroQuantum;
  std::vector<int> flipped_spins;  // 1-based, ascending
};

// Classifies the (row, col) element of an n-qubit density matrix by the set
// of spins whose basis bit differs. Symmetric in (row, col).
CoherenceOrder coherence_order(int row, int col, int n_qubits);

// Signed total coherence order p = Σ_s m_s(row) − m_s(col), with m = +1/2
// for bit 0. Gradients destroy every element with p ≠ 0.
int total_coherence_order(int row, int col, int n_qubits);

// Reduced density matrix on `keep` (1-based qubit indices, original relative
// order). Throws std::invalid_argument for an empty or out-of-range set.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// <target|rho|target>, real, clipped to [0,1] at kEigenvalueTol.
double fidelity_pure(const StateVector& target, const DensityMatrix& rho);

StateVector random_state(int n_qubits, std::mt19937_64& rng);
DensityMatrix random_density(int n_qubits, std::mt19937_64& rng);

}  // namespace nohide

#endif  // NOHIDE_STATE_HPP
