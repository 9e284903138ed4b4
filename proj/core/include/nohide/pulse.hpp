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

#ifndef NOHIDE_PULSE_HPP
#define NOHIDE_PULSE_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "nohide/state.hpp"

namespace nohide {

// Weakly coupled spin system: H_free = Σ_i 2π ν_i I_iz + Σ_{i<j} 2π J_ij I_iz I_jz.
struct SpinSystem {
  int n_spins = 0;
  std::vector<double> offsets_hz;           // rotating-frame resonance offsets
  std::vector<std::vector<double>> j_hz;    // symmetric, zero diagonal
  std::vector<double> t2_s;                 // per-spin transverse relaxation

  void validate() const;  // throws std::invalid_argument
  double j(int i, int j) const;  // 1-based
};

// The 1H / 19F / 13C system of the dibromofluoromethane sample:
// J12 = 49.7 Hz, J13 = 224.5 Hz, J23 = -310.9 Hz. Offsets are arbitrary
// nonzero rotating-frame values (the sequence refocuses them); T2 of spin 2
// is the sample's shortest (0.700 s).
SpinSystem sample_spin_system();

// --- Pulse IR -------------------------------------------------------------

// Hard pulse: exp(-i flip (I_x cos(phase) + I_y sin(phase))) on each listed
// spin (the (θ)_φ operator); phase 0 is +x, π/2 is +y.
struct RfPulse {
  std::vector<int> spins;  // 1-based, distinct
  double flip = 0.0;       // radians
  double phase = 0.0;      // radians
};

struct DelayElement {
  double duration_s = 0.0;
};

// Evolves only the scalar coupling J_ij for 1/(2|J_ij|): refocusing echo
// expanded by expand_macros.
struct JBlockMacro {
  int spin_i = 0;
  int spin_j = 0;
};

// Composite-pulse z rotation exp(-i angle I_z), expanded to
// [π/2]_x [angle]_y [π/2]_{-x} (applied right to left).
struct ZRotMacro {
  int spin = 0;
  double angle = 0.0;  // radians
};

// The seven-element CNOT sequence built around a J block on (control, target).
struct CnotMacro {
  int control = 0;
  int target = 0;
};

// z-gradient crusher: destroys every element of nonzero total coherence order.
struct GradientElement {};

using PulseElement = std::variant<RfPulse, DelayElement, JBlockMacro, ZRotMacro,
                                  CnotMacro, GradientElement>;

// Instruction stream; element 0 is applied first in time. (NMR notation
// lists sequences right-to-left; this type stores time order explicitly.)
struct PulseSequence {
  std::vector<PulseElement> elements;
};

struct NoiseModel {
  double calibration_sigma = 0.0;  // relative std-dev of flip-angle scaling
  int inhomogeneity_samples = 1;   // ensemble size
  bool t2_enabled = false;
  std::uint64_t seed = 20260810;

  void validate() const;
};

// --- Operations -------------------------------------------------------------

ComplexMatrix rf_unitary(const std::vector<int>& spins, double flip, double phase,
                         int n_spins);

// Rewrites macros into RF/Delay primitives. Purely syntactic and
// deterministic; idempotent on primitive sequences. J blocks become the
// 4-segment echo T/4 - π(spectators) - T/4 - π(i,j) - T/4 - π(spectators) -
// T/4 - π(i,j) with T = 1/(2|J_ij|); a negative J_ij additionally gets an
// exact composite Rz(π)⊗Rz(π) on the coupled pair so the realized block
// matches the positive-J one up to global phase. Throws when a referenced
// coupling is zero.
PulseSequence expand_macros(const PulseSequence& seq, const SpinSystem& sys);

enum class SequenceMode {
  // Algebraic interpretation: J blocks are exp(-iπ I_iz I_jz) regardless of
  // the coupling sign, delays are identity, z rotations are exact.
  Ideal,
  // Macro-expands, then composes hard pulses with free evolution under
  // H_free during delays. No noise, no relaxation.
  Physical,
};

// Ordered product of the sequence, earliest element rightmost. Throws on a
// Gradient element (not unitary).
ComplexMatrix sequence_unitary(const PulseSequence& seq, const SpinSystem& sys,
                               SequenceMode mode);

// Compilation of the experiment's sequences (time order).
PulseSequence compile_randomization();
PulseSequence compile_cnot23();
PulseSequence compile_full(double theta, double phi);

// The six-factor product-operator form of the randomization unitary,
// including its global phase factor. Reproduces the gate matrix exactly.
ComplexMatrix randomization_from_product_operators();

// Documented compiler conventions (pseudo-Hadamard directions and the
// residual phases of the full sequence).
struct CompileChoices {
  std::string init_hadamard;       // y-rotation direction preparing |A>
  std::string recovery_rotation;   // rotation between the recovery CNOTs
  std::string bell_realized;       // Bell state produced before phasing
  double output_z1_phase;          // residual z phase on spin 1 vs Bell x psi
  double output_global_phase;      // residual global phase vs Bell x psi
};
const CompileChoices& compile_choices();

// Density-matrix propagation of an expanded sequence: instantaneous RF
// pulses with per-member, per-spin flip-angle scale factors drawn from
// N(1, calibration_sigma); free evolution and optional T2 damping during
// delays; gradients zero all elements of nonzero total coherence order.
// Ensemble members are averaged by pairwise summation. Throws if macros are
// still present.
DensityMatrix simulate_physical(const PulseSequence& seq, const DensityMatrix& rho0,
                                const SpinSystem& sys, const NoiseModel& noise);

enum class EquivalenceClass { Exact, GlobalPhase, LocalZPhase, Fail };

std::string to_string(EquivalenceClass cls);

struct EquivalenceReport {
  EquivalenceClass cls = EquivalenceClass::Fail;
  double residual = 0.0;
  double global_phase = 0.0;          // e^{i g} (Rz ⊗ ... ) U ≈ target
  std::vector<double> z_phases;       // per-spin z angles (LocalZPhase only)
};

// Classifies U against target in the order exact → global phase → per-spin
// z phases, accepting the first class whose residual is ≤ tol.
EquivalenceReport classify_equivalence(const ComplexMatrix& u,
                                       const ComplexMatrix& target,
                                       int n_spins, double tol = 1e-6);

EquivalenceReport verify_equivalence(const PulseSequence& seq,
                                     const ComplexMatrix& target,
                                     const SpinSystem& sys, SequenceMode mode,
                                     double tol = 1e-6);

// Same classification for pure states (column-vector case).
EquivalenceReport classify_state_equivalence(const ComplexVector& v,
                                             const ComplexVector& target,
                                             int n_spins, double tol = 1e-6);

// Sum of delay durations after macro expansion.
double total_duration(const PulseSequence& seq, const SpinSystem& sys);

// Plain-text listing, one element per line:
//   RF spin=1 flip=90deg phase=-x
//   DELAY 2.227ms
//   GRAD
std::string render_text(const PulseSequence& seq);

}  // namespace nohide

#endif  // NOHIDE_PULSE_HPP
