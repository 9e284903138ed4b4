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

#ifndef NOHIDE_STRUCTURE_HPP
#define NOHIDE_STRUCTURE_HPP

#include <cstdint>

#include "nohide/matrix.hpp"

namespace nohide {

inline constexpr std::uint64_t kDefaultStructureSeed = 123456789;

// An isometry V from a d_in-dimensional system into system ⊗ ancilla, stored
// column-wise: column i is V|i⟩. A hiding process sends every input pure
// state to one fixed marginal on the system factor.
class HidingIsometry {
 public:
  // Validates V†V = I within tol. Throws std::invalid_argument otherwise.
  HidingIsometry(int dim_system, int dim_ancilla, ComplexMatrix columns,
                 double tol = kAlgebraTol);

  int dim_system() const { return dim_system_; }
  int dim_ancilla() const { return dim_ancilla_; }
  int dim_in() const { return static_cast<int>(columns_.cols()); }
  const ComplexMatrix& columns() const { return columns_; }

  ComplexVector apply(const ComplexVector& psi) const;

 private:
  int dim_system_;
  int dim_ancilla_;
  ComplexMatrix columns_;
};

// |ψ⟩ ↦ U(|ψ⟩ ⊗ |A⟩): the randomization unitary restricted to the fixed
// ancilla input. System factor = qubit 1, ancilla factor = qubits 2,3.
HidingIsometry make_randomization_isometry();

// |ψ⟩ ↦ |0⟩ ⊗ |ψ⟩: the erasure/reset move, the single-eigenvalue case.
HidingIsometry make_erasure_isometry();

// |ψ⟩ ↦ |ψ⟩ ⊗ |0⟩: keeps the system, hides nothing.
HidingIsometry make_identity_isometry();

struct StructureReport {
  bool sigma_fixed = false;       // marginal independent of the input
  bool ancilla_isometry = false;  // <A_j(psi)|A_k(phi)> = delta_jk <psi|phi>
  double max_residual = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
};

// Checks the two halves of the no-hiding structure on `samples` random input
// states: (a) sigma = Tr_anc(V ψ ψ† V†) is the same for every input;
// (b) with p_k, |k⟩ from sigma's spectral decomposition, the conditional
// ancilla maps A_k(ψ) = (⟨k|⊗I)V|ψ⟩/√p_k preserve inner products and are
// orthogonal across k.
StructureReport verify_no_hiding_structure(const HidingIsometry& v,
                                           int samples = 64,
                                           std::uint64_t seed = kDefaultStructureSeed,
                                           double tol = 1e-12);

}  // namespace nohide

#endif  // NOHIDE_STRUCTURE_HPP
