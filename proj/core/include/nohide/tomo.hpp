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

#ifndef NOHIDE_TOMO_HPP
#define NOHIDE_TOMO_HPP

#include <string>
#include <vector>

#include "nohide/state.hpp"

namespace nohide {

// Complete Pauli readout: one real expectation per non-identity tensor
// product of {I, X, Y, Z}, indexed 1 .. 4^n - 1 with qubit 1 the most
// significant base-4 digit.
struct PauliTable {
  int n_qubits = 0;
  std::vector<double> values;  // values[k-1] holds <P_k>
};

std::string pauli_label(int index, int n_qubits);  // e.g. "XIZ"

PauliTable pauli_expectations(const DensityMatrix& rho);

// ρ = 2^{-n} (I + Σ <P> P). Exact inverse of pauli_expectations. Positivity
// of noisy inputs is reported via min_eigenvalue, not enforced.
DensityMatrix reconstruct(const PauliTable& table);

enum class DeviationMode {
  Modulus,        // |x^T - x^E| is the complex modulus
  SplitRealImag,  // real and imaginary parts counted as separate entries
};

struct DeviationReport {
  double avg_abs_dev = 0.0;
  double max_abs_dev = 0.0;
  int n = 0;  // matrix dimension used in the 1/N² normalization
};

DeviationReport deviation_report(const ComplexMatrix& theory,
                                 const ComplexMatrix& experiment,
                                 DeviationMode mode = DeviationMode::Modulus);

// Receiver-phase analog for simulated tomography: per-spin z angles that
// best align D(z) ρ D(z)† with the target, found by cyclic closed-form
// phasor updates. Fitted once on a noiseless reference, then applied to
// noisy ensembles.
std::vector<double> fit_local_z_phases(const ComplexMatrix& rho,
                                       const ComplexMatrix& target, int n_qubits);

ComplexMatrix apply_local_z(const ComplexMatrix& rho, const std::vector<double>& z,
                            int n_qubits);

}  // namespace nohide

#endif  // NOHIDE_TOMO_HPP
