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

#include "nohide/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nohide {

namespace {

void check_qubit_count(int n_qubits) {
  // Dense storage only; the experiment never exceeds 3 qubits, 4 is the cap.
  if (n_qubits < 1 || n_qubits > 4) {
    throw std::invalid_argument("qubit count must be in [1,4]");
  }
}

}  // namespace

StateVector::StateVector(int n_qubits, ComplexVector amplitudes, double tol)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(n_qubits);
  if (amplitudes_.size() != (Eigen::Index{1} << n_qubits)) {
    throw std::invalid_argument("StateVector: amplitude count != 2^n");
  }
  double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol) {
    throw std::invalid_argument("StateVector: not normalized");
  }
}

StateVector StateVector::basis(int n_qubits, int index) {
  check_qubit_count(n_qubits);
  ComplexVector amps = ComplexVector::Zero(1 << n_qubits);
  amps(index) = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

DensityMatrix::DensityMatrix(int n_qubits, ComplexMatrix matrix) {
  DensityMatrix d = from_hermitian(n_qubits, std::move(matrix));
  if (d.min_eigenvalue() < -kEigenvalueTol) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
  }
  *this = std::move(d);
}

DensityMatrix DensityMatrix::from_hermitian(int n_qubits, ComplexMatrix matrix) {
  check_qubit_count(n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (matrix.rows() != dim || matrix.cols() != dim) {
    throw std::invalid_argument("DensityMatrix: wrong dimensions");
  }
  if (std::abs(matrix.trace() - Complex(1.0)) > kAlgebraTol) {
    throw std::invalid_argument("DensityMatrix: trace != 1");
  }
  if (max_abs(matrix - matrix.adjoint()) > kAlgebraTol) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  DensityMatrix d;
  d.n_qubits_ = n_qubits;
  d.matrix_ = std::move(matrix);
  return d;
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  const ComplexVector& a = psi.amplitudes();
  return DensityMatrix(psi.n_qubits(), a * a.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  check_qubit_count(n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  return DensityMatrix(n_qubits,
                       ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix_);
  return solver.eigenvalues().minCoeff();
}

CoherenceOrder coherence_order(int row, int col, int n_qubits) {
  check_qubit_count(n_qubits);
  const int dim = 1 << n_qubits;
  if (row < 0 || row >= dim || col < 0 || col >= dim) {
    throw std::invalid_argument("coherence_order: index out of range");
  }
  CoherenceOrder out;
  const int diff = row ^ col;
  for (int s = 1; s <= n_qubits; ++s) {
    if (diff & (1 << (n_qubits - s))) out.flipped_spins.push_back(s);
  }
  switch (out.flipped_spins.size()) {
    case 0: out.label = CoherenceLabel::ZeroQuantum; break;
    case 1: out.label = CoherenceLabel::SingleQuantum; break;
    case 2: out.label = CoherenceLabel::DoubleQuantum; break;
    case 3: out.label = CoherenceLabel::TripleQuantum; break;
    default:
      throw std::invalid_argument("coherence_order: more than 3 flipped spins");
  }
  return out;
}

int total_coherence_order(int row, int col, int n_qubits) {
  check_qubit_count(n_qubits);
  // m_s = +1/2 for bit 0, so p = popcount(col) - popcount(row).
  return __builtin_popcount(static_cast<unsigned>(col)) -
         __builtin_popcount(static_cast<unsigned>(row));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const int n = rho.n_qubits();
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: empty keep set");
  }
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("partial_trace: duplicate qubit in keep set");
  }
  for (int q : kept) {
    if (q < 1 || q > n) {
      throw std::invalid_argument("partial_trace: qubit index out of range");
    }
  }
  std::vector<int> traced;
  for (int q = 1; q <= n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }

  const int k = static_cast<int>(kept.size());
  const int kdim = 1 << k;
  const int tdim = 1 << static_cast<int>(traced.size());

  auto compose = [&](int kept_bits, int traced_bits) {
    int basis = 0;
    for (int a = 0; a < k; ++a) {
      basis |= ((kept_bits >> (k - 1 - a)) & 1) << (n - kept[a]);
    }
    for (std::size_t a = 0; a < traced.size(); ++a) {
      basis |= ((traced_bits >> (traced.size() - 1 - a)) & 1) << (n - traced[a]);
    }
    return basis;
  };

  ComplexMatrix out = ComplexMatrix::Zero(kdim, kdim);
  for (int i = 0; i < kdim; ++i) {
    for (int j = 0; j < kdim; ++j) {
      Complex sum = 0.0;
      for (int t = 0; t < tdim; ++t) {
        sum += rho.matrix()(compose(i, t), compose(j, t));
      }
      out(i, j) = sum;
    }
  }
  return DensityMatrix::from_hermitian(k, std::move(out));
}

double fidelity_pure(const StateVector& target, const DensityMatrix& rho) {
  if (target.dim() != rho.dim()) {
    throw std::invalid_argument("fidelity_pure: dimension mismatch");
  }
  const ComplexVector& t = target.amplitudes();
  Complex value = t.adjoint() * rho.matrix() * t;
  double f = value.real();
  if (f < -kEigenvalueTol || f > 1.0 + kEigenvalueTol) {
    throw std::runtime_error("fidelity_pure: value outside [0,1] beyond tolerance");
  }
  return std::clamp(f, 0.0, 1.0);
}

StateVector random_state(int n_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector amps(1 << n_qubits);
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    amps(i) = Complex(gauss(rng), gauss(rng));
  }
  amps /= amps.norm();
  return StateVector(n_qubits, std::move(amps));
}

DensityMatrix random_density(int n_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  ComplexMatrix a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      a(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  ComplexMatrix rho = a * a.adjoint();
  rho /= rho.trace();
  return DensityMatrix(n_qubits, std::move(rho));
}

}  // namespace nohide
