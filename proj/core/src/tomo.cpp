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

#include "nohide/tomo.hpp"

#include <cmath>
#include <stdexcept>

namespace nohide {

namespace {

const ComplexMatrix& pauli_of_digit(int digit) {
  switch (digit) {
    case 0: return pauli_id();
    case 1: return pauli_x();
    case 2: return pauli_y();
    default: return pauli_z();
  }
}

ComplexMatrix pauli_string(int index, int n_qubits) {
  ComplexMatrix p = ComplexMatrix::Identity(1, 1);
  for (int q = n_qubits - 1; q >= 0; --q) {
    const int digit = (index >> (2 * q)) & 3;
    p = kron(p, pauli_of_digit(digit));
  }
  return p;
}

double spin_m(int basis, int spin, int n) {
  return ((basis >> (n - spin)) & 1) ? -0.5 : 0.5;
}

}  // namespace

std::string pauli_label(int index, int n_qubits) {
  static const char kNames[] = {'I', 'X', 'Y', 'Z'};
  std::string label(n_qubits, 'I');
  for (int q = 0; q < n_qubits; ++q) {
    label[n_qubits - 1 - q] = kNames[(index >> (2 * q)) & 3];
  }
  return label;
}

PauliTable pauli_expectations(const DensityMatrix& rho) {
  const int n = rho.n_qubits();
  const int count = (1 << (2 * n)) - 1;
  PauliTable table;
  table.n_qubits = n;
  table.values.reserve(count);
  for (int k = 1; k <= count; ++k) {
    const Complex value = (rho.matrix() * pauli_string(k, n)).trace();
    table.values.push_back(value.real());
  }
  return table;
}

DensityMatrix reconstruct(const PauliTable& table) {
  const int n = table.n_qubits;
  const int count = (1 << (2 * n)) - 1;
  if (static_cast<int>(table.values.size()) != count) {
    throw std::invalid_argument("reconstruct: incomplete expectation table");
  }
  const int dim = 1 << n;
  ComplexMatrix m = ComplexMatrix::Identity(dim, dim);
  for (int k = 1; k <= count; ++k) {
    m += table.values[k - 1] * pauli_string(k, n);
  }
  m /= static_cast<double>(dim);
  return DensityMatrix::from_hermitian(n, std::move(m));
}

DeviationReport deviation_report(const ComplexMatrix& theory,
                                 const ComplexMatrix& experiment,
                                 DeviationMode mode) {
  if (theory.rows() != experiment.rows() || theory.cols() != experiment.cols() ||
      theory.rows() != theory.cols()) {
    throw std::invalid_argument("deviation_report: dimension mismatch");
  }
  const int n = static_cast<int>(theory.rows());
  DeviationReport report;
  report.n = n;
  double sum = 0.0;
  double peak = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex d = theory(i, j) - experiment(i, j);
      if (mode == DeviationMode::Modulus) {
        const double a = std::abs(d);
        sum += a;
        peak = std::max(peak, a);
      } else {
        sum += std::abs(d.real()) + std::abs(d.imag());
        peak = std::max({peak, std::abs(d.real()), std::abs(d.imag())});
      }
    }
  }
  const double entries =
      mode == DeviationMode::Modulus ? double(n) * n : 2.0 * n * n;
  report.avg_abs_dev = sum / entries;
  report.max_abs_dev = peak;
  return report;
}

std::vector<double> fit_local_z_phases(const ComplexMatrix& rho,
                                       const ComplexMatrix& target, int n_qubits) {
  const int dim = 1 << n_qubits;
  if (rho.rows() != dim || target.rows() != dim) {
    throw std::invalid_argument("fit_local_z_phases: dimension mismatch");
  }
  std::vector<double> z(n_qubits, 0.0);
  ComplexMatrix current = rho;

  for (int sweep = 0; sweep < 60; ++sweep) {
    double moved = 0.0;
    for (int s = 1; s <= n_qubits; ++s) {
      // Elements pick up e^{-i dz (m_s(r) - m_s(c))}; collect phasors by the
      // sign of that difference.
      Complex up = 0.0, down = 0.0;
      for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
          const double dm = spin_m(r, s, n_qubits) - spin_m(c, s, n_qubits);
          if (dm == 0.0) continue;
          const Complex inner = current(r, c) * std::conj(target(r, c));
          if (dm > 0) {
            up += inner;
          } else {
            down += inner;
          }
        }
      }
      const Complex w = std::conj(up) + down;
      if (std::abs(w) == 0.0) continue;
      const double dz = -std::arg(w);
      if (dz == 0.0) continue;
      for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
          const double dm = spin_m(r, s, n_qubits) - spin_m(c, s, n_qubits);
          if (dm != 0.0) current(r, c) *= std::exp(Complex(0, -dz * dm));
        }
      }
      z[s - 1] += dz;
      moved += std::abs(dz);
    }
    if (moved < 1e-15) break;
  }
  return z;
}

ComplexMatrix apply_local_z(const ComplexMatrix& rho, const std::vector<double>& z,
                            int n_qubits) {
  const int dim = 1 << n_qubits;
  if (rho.rows() != dim || static_cast<int>(z.size()) != n_qubits) {
    throw std::invalid_argument("apply_local_z: dimension mismatch");
  }
  ComplexMatrix out = rho;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      double phase = 0.0;
      for (int s = 1; s <= n_qubits; ++s) {
        phase += z[s - 1] * (spin_m(r, s, n_qubits) - spin_m(c, s, n_qubits));
      }
      out(r, c) *= std::exp(Complex(0, -phase));
    }
  }
  return out;
}

}  // namespace nohide
