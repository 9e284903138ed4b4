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

#include "nohide/structure.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "nohide/circuit.hpp"

namespace nohide {

HidingIsometry::HidingIsometry(int dim_system, int dim_ancilla,
                               ComplexMatrix columns, double tol)
    : dim_system_(dim_system), dim_ancilla_(dim_ancilla), columns_(std::move(columns)) {
  if (dim_system_ < 1 || dim_ancilla_ < 1 ||
      columns_.rows() != static_cast<Eigen::Index>(dim_system_) * dim_ancilla_) {
    throw std::invalid_argument("HidingIsometry: dimensions do not match columns");
  }
  ComplexMatrix gram = columns_.adjoint() * columns_;
  gram -= ComplexMatrix::Identity(columns_.cols(), columns_.cols());
  if (max_abs(gram) > tol) {
    throw std::invalid_argument("HidingIsometry: V†V != I (not an isometry)");
  }
}

ComplexVector HidingIsometry::apply(const ComplexVector& psi) const {
  if (psi.size() != columns_.cols()) {
    throw std::invalid_argument("HidingIsometry::apply: wrong input dimension");
  }
  return columns_ * psi;
}

HidingIsometry make_randomization_isometry() {
  const ComplexMatrix u = randomization_unitary();
  const ComplexVector anc = ancilla_state().amplitudes();
  ComplexMatrix cols(8, 2);
  for (int i = 0; i < 2; ++i) {
    ComplexVector in = ComplexVector::Zero(8);
    for (int a = 0; a < 4; ++a) in(i * 4 + a) = anc(a);
    cols.col(i) = u * in;
  }
  return HidingIsometry(2, 4, std::move(cols));
}

HidingIsometry make_erasure_isometry() {
  ComplexMatrix cols = ComplexMatrix::Zero(4, 2);
  cols(0, 0) = 1.0;  // |0>|0>
  cols(1, 1) = 1.0;  // |0>|1>
  return HidingIsometry(2, 2, std::move(cols));
}

HidingIsometry make_identity_isometry() {
  ComplexMatrix cols = ComplexMatrix::Zero(4, 2);
  cols(0, 0) = 1.0;  // |0>|0>
  cols(2, 1) = 1.0;  // |1>|0>
  return HidingIsometry(2, 2, std::move(cols));
}

StructureReport verify_no_hiding_structure(const HidingIsometry& v, int samples,
                                           std::uint64_t seed, double tol) {
  if (samples < 2) {
    throw std::invalid_argument("verify_no_hiding_structure: need >= 2 samples");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto sample_state = [&] {
    ComplexVector psi(v.dim_in());
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
      psi(i) = Complex(gauss(rng), gauss(rng));
    }
    psi /= psi.norm();
    return psi;
  };

  std::vector<ComplexVector> inputs;
  std::vector<ComplexVector> images;
  inputs.reserve(samples);
  images.reserve(samples);
  for (int s = 0; s < samples; ++s) {
    inputs.push_back(sample_state());
    images.push_back(v.apply(inputs.back()));
  }

  StructureReport report;
  report.samples = samples;
  report.seed = seed;

  // (a) Hiding: the system marginal must not depend on the input.
  ComplexMatrix sigma0 = trace_second(images[0] * images[0].adjoint(),
                                      v.dim_system(), v.dim_ancilla());
  double sigma_residual = 0.0;
  for (int s = 1; s < samples; ++s) {
    ComplexMatrix sigma = trace_second(images[s] * images[s].adjoint(),
                                       v.dim_system(), v.dim_ancilla());
    sigma_residual = std::max(sigma_residual, max_abs(sigma - sigma0));
  }
  report.sigma_fixed = sigma_residual < tol;
  report.max_residual = sigma_residual;
  if (!report.sigma_fixed) return report;

  // (b) Structure: spectral-decompose sigma and test that the conditional
  // ancilla maps behave as one isometric copy of the input per eigenvector.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sigma0);
  std::vector<double> p;
  std::vector<ComplexVector> kets;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    if (solver.eigenvalues()(k) > kEigenvalueTol) {
      p.push_back(solver.eigenvalues()(k));
      kets.push_back(solver.eigenvectors().col(k));
    }
  }

  auto ancilla_component = [&](const ComplexVector& image, std::size_t k) {
    ComplexVector a = ComplexVector::Zero(v.dim_ancilla());
    for (int i = 0; i < v.dim_system(); ++i) {
      a += std::conj(kets[k](i)) * image.segment(i * v.dim_ancilla(), v.dim_ancilla());
    }
    return ComplexVector(a / std::sqrt(p[k]));
  };

  std::vector<std::vector<ComplexVector>> comps(samples);
  for (int s = 0; s < samples; ++s) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      comps[s].push_back(ancilla_component(images[s], k));
    }
  }

  double structure_residual = 0.0;
  for (int s = 0; s < samples; ++s) {
    for (int t = s; t < samples; ++t) {
      const Complex overlap = inputs[s].adjoint() * inputs[t];
      for (std::size_t j = 0; j < p.size(); ++j) {
        for (std::size_t k = 0; k < p.size(); ++k) {
          const Complex inner = comps[s][j].adjoint() * comps[t][k];
          const Complex expect = (j == k) ? overlap : Complex(0.0);
          structure_residual = std::max(structure_residual, std::abs(inner - expect));
        }
      }
    }
  }
  report.ancilla_isometry = structure_residual < tol;
  report.max_residual = std::max(sigma_residual, structure_residual);
  return report;
}

}  // namespace nohide
