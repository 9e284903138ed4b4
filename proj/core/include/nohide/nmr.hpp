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

#ifndef NOHIDE_NMR_HPP
#define NOHIDE_NMR_HPP

#include <utility>
#include <vector>

#include "nohide/pulse.hpp"
#include "nohide/state.hpp"

namespace nohide {

// e^{i receiver_phase} Tr(ρ (I_x + i I_y) of `spin`) — the total transverse
// signal of that spin, i.e. the integral of its whole multiplet.
Complex transverse_signal(const DensityMatrix& rho, int spin, double receiver_phase);

// Receiver phase that makes the reference's transverse signal real-positive.
// Throws when the reference has no transverse magnetization on `spin`.
double calibrate_receiver(const DensityMatrix& reference, int spin);

// One single-quantum transition of `spin`: partner basis states differ in
// exactly that spin's bit (first has bit 0).
struct SpectrumLine {
  int spin = 0;
  std::pair<int, int> partner_states;  // (bit-0 state, bit-1 state)
  double frequency_hz = 0.0;
  Complex amplitude;
};

// Stick spectrum of `spin`: 2^{n-1} lines at offset_spin + Σ J_spin,j m_j,
// amplitudes taken from the receiver-phased density-matrix elements.
std::vector<SpectrumLine> spectrum_lines(const DensityMatrix& rho, int spin,
                                         const SpinSystem& sys,
                                         double receiver_phase = 0.0);

// (1-eps) I/8 + eps |000><000|, the idealized pseudo-pure preparation.
DensityMatrix pseudo_pure(double epsilon);

enum class Stage { Input, Output };

struct ObservationRecord {
  double theta = 0.0;  // radians
  double phi = 0.0;
  double theta_deg = 0.0;
  double phi_deg = 0.0;
  int spin = 0;
  Stage stage = Stage::Input;
  Complex signal;  // reference-normalized
};

// Gate-level grid sweep: input stage observes |ψ⟩⊗|00⟩, output stage the
// recovered protocol state. Signals are normalized so the θ=φ=π/2 input on
// spin 1 reads +1 (the experiment's receiver calibration rule).
std::vector<ObservationRecord> observe_gate_grid(int theta_steps, int phi_steps,
                                                 double epsilon = 1.0);

// Pulse-level sweep: input stage simulates just the (θ)_φ pulse on the PPS,
// output stage the full compiled sequence, both under the given noise model.
std::vector<ObservationRecord> observe_pulse_grid(int theta_steps, int phi_steps,
                                                  const SpinSystem& sys,
                                                  const NoiseModel& noise,
                                                  double epsilon = 1.0);

}  // namespace nohide

#endif  // NOHIDE_NMR_HPP
