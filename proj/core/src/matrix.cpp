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

#include "nohide/matrix.hpp"

#include <stdexcept>

namespace nohide {

namespace {
ComplexMatrix make2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}
}  // namespace

const ComplexMatrix& pauli_id() {
  static const ComplexMatrix m = make2(1, 0, 0, 1);
  return m;
}

const ComplexMatrix& pauli_x() {
  static const ComplexMatrix m = make2(0, 1, 1, 0);
  return m;
}

const ComplexMatrix& pauli_y() {
  static const ComplexMatrix m = make2(0, Complex(0, -1), Complex(0, 1), 0);
  return m;
}

const ComplexMatrix& pauli_z() {
  static const ComplexMatrix m = make2(1, 0, 0, -1);
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& m) { return m.adjoint(); }

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  ComplexMatrix residual = u.adjoint() * u;
  residual -= ComplexMatrix::Identity(u.rows(), u.cols());
  return max_abs(residual) < tol;
}

ComplexMatrix trace_second(const ComplexMatrix& m, int dim_first, int dim_second) {
  if (m.rows() != m.cols() ||
      m.rows() != static_cast<Eigen::Index>(dim_first) * dim_second) {
    throw std::invalid_argument("trace_second: dimensions do not factorize");
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_first, dim_first);
  for (int i = 0; i < dim_first; ++i) {
    for (int j = 0; j < dim_first; ++j) {
      Complex sum = 0.0;
      for (int k = 0; k < dim_second; ++k) {
        sum += m(i * dim_second + k, j * dim_second + k);
      }
      out(i, j) = sum;
    }
  }
  return out;
}

GlobalPhaseReport equal_up_to_global_phase(const ComplexMatrix& a,
                                           const ComplexMatrix& b,
                                           double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("equal_up_to_global_phase: dimension mismatch");
  }
  // Phase from the largest-magnitude entry of b.
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  GlobalPhaseReport report;
  if (std::abs(b(r, c)) == 0.0) {
    report.residual = max_abs(a);
    report.equal = report.residual <= tol;
    return report;
  }
  report.phase = std::arg(a(r, c) / b(r, c));
  ComplexMatrix diff = std::exp(Complex(0, -report.phase)) * a - b;
  report.residual = max_abs(diff);
  report.equal = report.residual <= tol;
  return report;
}

}  // namespace nohide
