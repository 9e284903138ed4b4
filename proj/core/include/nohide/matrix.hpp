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

#ifndef NOHIDE_MATRIX_HPP
#define NOHIDE_MATRIX_HPP

#include <complex>

#include <Eigen/Dense>

namespace nohide {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Default tolerances: algebraic identities vs. eigenvalue positivity slack.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kEigenvalueTol = 1e-10;

const ComplexMatrix& pauli_id();
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();

// Kronecker product, row-major semantics: (a ⊗ b)(x ⊗ y) = ax ⊗ by.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix dagger(const ComplexMatrix& m);

// Largest entrywise modulus (the max-norm used throughout).
double max_abs(const ComplexMatrix& m);

bool is_unitary(const ComplexMatrix& u, double tol = kAlgebraTol);

// Trace out the second factor of a (dim_first ⊗ dim_second) bipartite matrix.
ComplexMatrix trace_second(const ComplexMatrix& m, int dim_first, int dim_second);

struct GlobalPhaseReport {
  bool equal = false;
  double phase = 0.0;  // radians, a ≈ e^{i phase} b
  double residual = 0.0;
};

// Tests a ≈ e^{i phi} b with phi estimated from the largest-magnitude entry
// of b. Throws std::invalid_argument on dimension mismatch.
GlobalPhaseReport equal_up_to_global_phase(const ComplexMatrix& a,
                                           const ComplexMatrix& b,
                                           double tol = kAlgebraTol);

}  // namespace nohide

#endif  // NOHIDE_MATRIX_HPP
