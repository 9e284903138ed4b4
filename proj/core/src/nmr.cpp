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

#include "nohide/nmr.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nohide/circuit.hpp"

namespace nohide {

namespace {

constexpr double kPi = std::numbers::pi;

double spin_m(int basis, int spin, int n) {
  return ((basis >> (n - spin)) & 1) ? -0.5 : 0.5;
}

// |psi(θ,φ)⟩ ⊗ |00⟩ mixed into a pseudo-pure background.
DensityMatrix input_stage_state(double theta, double phi, double epsilon) {
  const StateVector psi = prepare_psi(theta, phi);
  ComplexVector amps = ComplexVector::Zero(8);
  amps(0) = psi.amplitude(0);
  amps(4) = psi.amplitude(1);
  const DensityMatrix pure = DensityMatrix::from_pure(StateVector(3, std::move(amps)));
  ComplexMatrix m = (1.0 - epsilon) / 8.0 * ComplexMatrix::Identity(8, 8) +
                    epsilon * pure.matrix();
  return DensityMatrix(3, std::move(m));
}

DensityMatrix mix_pseudo_pure(const StateVector& state, double epsilon) {
  ComplexMatrix m = (1.0 - epsilon) / 8.0 * ComplexMatrix::Identity(8, 8) +
                    epsilon * DensityMatrix::from_pure(state).matrix();
  return DensityMatrix(3, std::move(m));
}

}  // namespace

Complex transverse_signal(const DensityMatrix& rho, int spin, double receiver_phase) {
  const int n = rho.n_qubits();
  if (spin < 1 || spin > n) {
    throw std::invalid_argument("transverse_signal: spin out of range");
  }
  const int dim = rho.dim();
  const int bit = 1 << (n - spin);
  Complex sum = 0.0;
  // Tr(rho I_+) = Σ over transition pairs <c|rho|r>, c the bit-1 partner.
  for (int r = 0; r < dim; ++r) {
    if (r & bit) continue;
    sum += rho.matrix()(r | bit, r);
  }
  return std::exp(Complex(0, receiver_phase)) * sum;
}

double calibrate_receiver(const DensityMatrix& reference, int spin) {
  const Complex s = transverse_signal(reference, spin, 0.0);
  if (std::abs(s) < 1e-15) {
    throw std::invalid_argument("calibrate_receiver: zero transverse magnetization");
  }
  return -std::arg(s);
}

std::vector<SpectrumLine> spectrum_lines(const DensityMatrix& rho, int spin,
                                         const SpinSystem& sys,
                                         double receiver_phase) {
  sys.validate();
  const int n = rho.n_qubits();
  if (n != sys.n_spins) {
    throw std::invalid_argument("spectrum_lines: state/system mismatch");
  }
  if (spin < 1 || spin > n) {
    throw std::invalid_argument("spectrum_lines: spin out of range");
  }
  const int bit = 1 << (n - spin);
  const Complex phase = std::exp(Complex(0, receiver_phase));

  std::vector<SpectrumLine> lines;
  for (int r = 0; r < rho.dim(); ++r) {
    if (r & bit) continue;
    SpectrumLine line;
    line.spin = spin;
    line.partner_states = {r, r | bit};
    double freq = sys.offsets_hz[spin - 1];
    for (int s = 1; s <= n; ++s) {
      if (s == spin) continue;
      freq += sys.j(spin, s) * spin_m(r, s, n);
    }
    line.frequency_hz = freq;
    line.amplitude = phase * rho.matrix()(r | bit, r);
    lines.push_back(line);
  }
  return lines;
}

DensityMatrix pseudo_pure(double epsilon) {
  if (!(epsilon > 0.0) || epsilon > 1.0) {
    throw std::invalid_argument("pseudo_pure: epsilon must be in (0,1]");
  }
  ComplexMatrix m = (1.0 - epsilon) / 8.0 * ComplexMatrix::Identity(8, 8);
  m(0, 0) += epsilon;
  return DensityMatrix(3, std::move(m));
}

std::vector<ObservationRecord> observe_gate_grid(int theta_steps, int phi_steps,
                                                 double epsilon) {
  const DensityMatrix ref = input_stage_state(kPi / 2.0, kPi / 2.0, epsilon);
  const double rx_phase = calibrate_receiver(ref, 1);
  const double ref_mag = std::abs(transverse_signal(ref, 1, rx_phase));

  std::vector<ObservationRecord> records;
  for (const GridPoint& p : make_grid(theta_steps, phi_steps)) {
    const ProtocolRecord run = run_protocol(p.theta, p.phi);
    const DensityMatrix input = input_stage_state(p.theta, p.phi, epsilon);
    const DensityMatrix output = mix_pseudo_pure(run.output_state, epsilon);
    for (int spin = 1; spin <= 3; ++spin) {
      records.push_back(ObservationRecord{
          p.theta, p.phi, p.theta_deg, p.phi_deg, spin, Stage::Input,
          transverse_signal(input, spin, rx_phase) / ref_mag});
    }
    for (int spin = 1; spin <= 3; ++spin) {
      records.push_back(ObservationRecord{
          p.theta, p.phi, p.theta_deg, p.phi_deg, spin, Stage::Output,
          transverse_signal(output, spin, rx_phase) / ref_mag});
    }
  }
  return records;
}

std::vector<ObservationRecord> observe_pulse_grid(int theta_steps, int phi_steps,
                                                  const SpinSystem& sys,
                                                  const NoiseModel& noise,
                                                  double epsilon) {
  sys.validate();
  noise.validate();
  const DensityMatrix pps = pseudo_pure(epsilon);

  auto input_rho = [&](double theta, double phi) {
    PulseSequence prep;
    prep.elements.push_back(RfPulse{{1}, theta, phi});
    return simulate_physical(prep, pps, sys, noise);
  };
  auto output_rho = [&](double theta, double phi) {
    const PulseSequence seq = expand_macros(compile_full(theta, phi), sys);
    return simulate_physical(seq, pps, sys, noise);
  };

  // Same receiver rule as the experiment: phase and scale set so the
  // θ=φ=π/2 input reads +1 on spin 1.
  const DensityMatrix ref = input_rho(kPi / 2.0, kPi / 2.0);
  const double rx_phase = calibrate_receiver(ref, 1);
  const double ref_mag = std::abs(transverse_signal(ref, 1, rx_phase));

  std::vector<ObservationRecord> records;
  for (const GridPoint& p : make_grid(theta_steps, phi_steps)) {
    const DensityMatrix input = input_rho(p.theta, p.phi);
    const DensityMatrix output = output_rho(p.theta, p.phi);
    for (int spin = 1; spin <= 3; ++spin) {
      records.push_back(ObservationRecord{
          p.theta, p.phi, p.theta_deg, p.phi_deg, spin, Stage::Input,
          transverse_signal(input, spin, rx_phase) / ref_mag});
    }
    for (int spin = 1; spin <= 3; ++spin) {
      records.push_back(ObservationRecord{
          p.theta, p.phi, p.theta_deg, p.phi_deg, spin, Stage::Output,
          transverse_signal(output, spin, rx_phase) / ref_mag});
    }
  }
  return records;
}

}  // namespace nohide
