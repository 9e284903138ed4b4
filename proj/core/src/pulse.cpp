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

#include "nohide/pulse.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace nohide {

namespace {

constexpr double kPi = std::numbers::pi;

// m = +1/2 when the basis bit of `spin` is 0 (spin up).
double spin_m(int basis, int spin, int n) {
  return ((basis >> (n - spin)) & 1) ? -0.5 : 0.5;
}

void check_spin(int spin, int n) {
  if (spin < 1 || spin > n) {
    throw std::invalid_argument("spin index out of range");
  }
}

ComplexMatrix single_spin_rf(double flip, double phase) {
  // Rotating-frame propagator exp(-i flip (Ix cos(phase) + Iy sin(phase))).
  ComplexMatrix u(2, 2);
  const double c = std::cos(flip / 2.0);
  const double s = std::sin(flip / 2.0);
  u(0, 0) = c;
  u(0, 1) = Complex(0, -1) * std::exp(Complex(0, -phase)) * s;
  u(1, 0) = Complex(0, -1) * std::exp(Complex(0, phase)) * s;
  u(1, 1) = c;
  return u;
}

ComplexMatrix embed_single(const ComplexMatrix& op, int spin, int n) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int s = 1; s <= n; ++s) {
    out = kron(out, s == spin ? op : ComplexMatrix(ComplexMatrix::Identity(2, 2)));
  }
  return out;
}

ComplexMatrix ideal_zrot(int spin, double angle, int n) {
  const int dim = 1 << n;
  ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
  for (int r = 0; r < dim; ++r) {
    u(r, r) = std::exp(Complex(0, -angle * spin_m(r, spin, n)));
  }
  return u;
}

ComplexMatrix ideal_jblock(int i, int j, int n) {
  const int dim = 1 << n;
  ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
  for (int r = 0; r < dim; ++r) {
    u(r, r) = std::exp(Complex(0, -kPi * spin_m(r, i, n) * spin_m(r, j, n)));
  }
  return u;
}

std::vector<PulseElement> zrot_elements(const std::vector<int>& spins, double angle) {
  // [pi/2]_x [angle]_y [pi/2]_{-x}, rightmost first in time. Exact in SU(2).
  const double dir = angle >= 0 ? kPi / 2.0 : -kPi / 2.0;
  return {RfPulse{spins, kPi / 2.0, kPi},
          RfPulse{spins, std::abs(angle), dir},
          RfPulse{spins, kPi / 2.0, 0.0}};
}

std::vector<PulseElement> cnot_elements(int control, int target) {
  return {RfPulse{{target}, kPi / 2.0, 0.0},
          RfPulse{{target}, kPi / 2.0, kPi / 2.0},
          JBlockMacro{control, target},
          RfPulse{{target}, kPi / 2.0, -kPi / 2.0},
          RfPulse{{control}, kPi / 2.0, kPi / 2.0},
          RfPulse{{control}, kPi / 2.0, 0.0},
          RfPulse{{control}, kPi / 2.0, -kPi / 2.0}};
}

std::vector<PulseElement> jblock_elements(int i, int j, const SpinSystem& sys) {
  check_spin(i, sys.n_spins);
  check_spin(j, sys.n_spins);
  if (i == j) throw std::invalid_argument("jblock: coupled spins must differ");
  const double jij = sys.j(i, j);
  if (jij == 0.0) {
    throw std::invalid_argument("jblock: zero coupling requested");
  }
  std::vector<int> spectators;
  for (int s = 1; s <= sys.n_spins; ++s) {
    if (s != i && s != j) spectators.push_back(s);
  }
  if (spectators.size() > 1) {
    throw std::invalid_argument("jblock: echo scheme defined for <= 3 spins");
  }
  const double quarter = 1.0 / (2.0 * std::abs(jij)) / 4.0;

  std::vector<PulseElement> out;
  auto push_quarter = [&] { out.push_back(DelayElement{quarter}); };
  auto push_pi = [&](const std::vector<int>& spins) {
    if (!spins.empty()) out.push_back(RfPulse{spins, kPi, 0.0});
  };
  push_quarter();
  push_pi(spectators);
  push_quarter();
  push_pi({i, j});
  push_quarter();
  push_pi(spectators);
  push_quarter();
  push_pi({i, j});
  if (jij < 0.0) {
    // Conjugate block correction: Rz(pi) on both coupled spins makes the
    // realized evolution match the positive-J block up to global phase.
    for (auto& e : zrot_elements({i, j}, kPi)) out.push_back(e);
  }
  return out;
}

struct DelayTables {
  std::vector<double> energy;          // rad/s per basis state
  std::vector<std::vector<double>> t2_rate;  // 1/s per (r, c)
};

DelayTables make_delay_tables(const SpinSystem& sys) {
  const int n = sys.n_spins;
  const int dim = 1 << n;
  DelayTables t;
  t.energy.assign(dim, 0.0);
  for (int r = 0; r < dim; ++r) {
    double e = 0.0;
    for (int s = 1; s <= n; ++s) {
      e += 2.0 * kPi * sys.offsets_hz[s - 1] * spin_m(r, s, n);
    }
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        e += 2.0 * kPi * sys.j(a, b) * spin_m(r, a, n) * spin_m(r, b, n);
      }
    }
    t.energy[r] = e;
  }
  t.t2_rate.assign(dim, std::vector<double>(dim, 0.0));
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      double rate = 0.0;
      for (int s = 1; s <= n; ++s) {
        if (((r ^ c) >> (n - s)) & 1) rate += 1.0 / sys.t2_s[s - 1];
      }
      t.t2_rate[r][c] = rate;
    }
  }
  return t;
}

}  // namespace

void SpinSystem::validate() const {
  if (n_spins < 1 || n_spins > 4) {
    throw std::invalid_argument("SpinSystem: n_spins must be in [1,4]");
  }
  if (static_cast<int>(offsets_hz.size()) != n_spins ||
      static_cast<int>(t2_s.size()) != n_spins ||
      static_cast<int>(j_hz.size()) != n_spins) {
    throw std::invalid_argument("SpinSystem: field sizes must match n_spins");
  }
  for (int a = 0; a < n_spins; ++a) {
    if (static_cast<int>(j_hz[a].size()) != n_spins) {
      throw std::invalid_argument("SpinSystem: J matrix must be n x n");
    }
    if (j_hz[a][a] != 0.0) {
      throw std::invalid_argument("SpinSystem: J diagonal must be zero");
    }
    if (!(t2_s[a] > 0.0)) {
      throw std::invalid_argument("SpinSystem: T2 must be positive");
    }
    for (int b = 0; b < n_spins; ++b) {
      if (j_hz[a][b] != j_hz[b][a]) {
        throw std::invalid_argument("SpinSystem: J matrix must be symmetric");
      }
    }
  }
}

double SpinSystem::j(int a, int b) const { return j_hz[a - 1][b - 1]; }

SpinSystem sample_spin_system() {
  SpinSystem sys;
  sys.n_spins = 3;
  sys.offsets_hz = {100.0, -120.0, 80.0};
  sys.j_hz = {{0.0, 49.7, 224.5}, {49.7, 0.0, -310.9}, {224.5, -310.9, 0.0}};
  sys.t2_s = {1.0, 0.7, 1.0};
  sys.validate();
  return sys;
}

void NoiseModel::validate() const {
  if (calibration_sigma < 0.0) {
    throw std::invalid_argument("NoiseModel: calibration_sigma must be >= 0");
  }
  if (inhomogeneity_samples < 1) {
    throw std::invalid_argument("NoiseModel: ensemble size must be >= 1");
  }
}

ComplexMatrix rf_unitary(const std::vector<int>& spins, double flip, double phase,
                         int n_spins) {
  if (!std::isfinite(flip) || !std::isfinite(phase)) {
    throw std::invalid_argument("rf_unitary: flip and phase must be finite");
  }
  const int dim = 1 << n_spins;
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  std::vector<bool> seen(n_spins + 1, false);
  for (int s : spins) {
    check_spin(s, n_spins);
    if (seen[s]) throw std::invalid_argument("rf_unitary: duplicate spin");
    seen[s] = true;
    u = embed_single(single_spin_rf(flip, phase), s, n_spins) * u;
  }
  return u;
}

PulseSequence expand_macros(const PulseSequence& seq, const SpinSystem& sys) {
  sys.validate();
  PulseSequence out;
  for (const PulseElement& e : seq.elements) {
    if (std::holds_alternative<RfPulse>(e) || std::holds_alternative<DelayElement>(e) ||
        std::holds_alternative<GradientElement>(e)) {
      out.elements.push_back(e);
    } else if (const auto* z = std::get_if<ZRotMacro>(&e)) {
      check_spin(z->spin, sys.n_spins);
      for (auto& p : zrot_elements({z->spin}, z->angle)) out.elements.push_back(p);
    } else if (const auto* jb = std::get_if<JBlockMacro>(&e)) {
      for (auto& p : jblock_elements(jb->spin_i, jb->spin_j, sys)) {
        out.elements.push_back(p);
      }
    } else if (const auto* cn = std::get_if<CnotMacro>(&e)) {
      check_spin(cn->control, sys.n_spins);
      check_spin(cn->target, sys.n_spins);
      if (cn->control == cn->target) {
        throw std::invalid_argument("expand_macros: CNOT control == target");
      }
      PulseSequence inner{cnot_elements(cn->control, cn->target)};
      for (auto& p : expand_macros(inner, sys).elements) out.elements.push_back(p);
    } else {
      throw std::invalid_argument("expand_macros: unknown macro");
    }
  }
  return out;
}

ComplexMatrix sequence_unitary(const PulseSequence& seq, const SpinSystem& sys,
                               SequenceMode mode) {
  sys.validate();
  const int n = sys.n_spins;
  const int dim = 1 << n;

  if (mode == SequenceMode::Physical) {
    const PulseSequence expanded = expand_macros(seq, sys);
    const DelayTables tables = make_delay_tables(sys);
    ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
    for (const PulseElement& e : expanded.elements) {
      if (const auto* rf = std::get_if<RfPulse>(&e)) {
        u = rf_unitary(rf->spins, rf->flip, rf->phase, n) * u;
      } else if (const auto* d = std::get_if<DelayElement>(&e)) {
        ComplexMatrix evol = ComplexMatrix::Zero(dim, dim);
        for (int r = 0; r < dim; ++r) {
          evol(r, r) = std::exp(Complex(0, -tables.energy[r] * d->duration_s));
        }
        u = evol * u;
      } else {
        throw std::invalid_argument("sequence_unitary: gradient is not unitary");
      }
    }
    return u;
  }

  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (const PulseElement& e : seq.elements) {
    if (const auto* rf = std::get_if<RfPulse>(&e)) {
      u = rf_unitary(rf->spins, rf->flip, rf->phase, n) * u;
    } else if (std::holds_alternative<DelayElement>(e)) {
      // Ideal mode: delays carry no evolution.
    } else if (const auto* z = std::get_if<ZRotMacro>(&e)) {
      check_spin(z->spin, n);
      u = ideal_zrot(z->spin, z->angle, n) * u;
    } else if (const auto* jb = std::get_if<JBlockMacro>(&e)) {
      check_spin(jb->spin_i, n);
      check_spin(jb->spin_j, n);
      u = ideal_jblock(jb->spin_i, jb->spin_j, n) * u;
    } else if (const auto* cn = std::get_if<CnotMacro>(&e)) {
      PulseSequence inner{cnot_elements(cn->control, cn->target)};
      u = sequence_unitary(inner, sys, SequenceMode::Ideal) * u;
    } else {
      throw std::invalid_argument("sequence_unitary: gradient is not unitary");
    }
  }
  return u;
}

PulseSequence compile_randomization() {
  PulseSequence seq;
  seq.elements = {ZRotMacro{1, -kPi / 2.0},
                  RfPulse{{1}, kPi / 2.0, kPi},
                  JBlockMacro{1, 3},
                  RfPulse{{1}, kPi / 2.0, 0.0},
                  JBlockMacro{1, 2},
                  RfPulse{{1}, kPi / 2.0, kPi},
                  ZRotMacro{3, -kPi / 2.0}};
  return seq;
}

PulseSequence compile_cnot23() { return PulseSequence{cnot_elements(2, 3)}; }

PulseSequence compile_full(double theta, double phi) {
  PulseSequence seq;
  seq.elements.push_back(RfPulse{{1}, theta, phi});
  // Pseudo-Hadamards chosen +y so the ancilla is the uniform superposition.
  seq.elements.push_back(RfPulse{{2, 3}, kPi / 2.0, kPi / 2.0});
  for (auto& e : compile_randomization().elements) seq.elements.push_back(e);
  seq.elements.push_back(CnotMacro{2, 3});
  seq.elements.push_back(RfPulse{{2}, kPi / 2.0, -kPi / 2.0});
  seq.elements.push_back(CnotMacro{2, 3});
  return seq;
}

ComplexMatrix randomization_from_product_operators() {
  const int n = 3;
  const int dim = 8;
  auto diag_two_z = [&](int i, int j, double coeff) {
    // exp(coeff * I_iz I_jz) with coeff imaginary folded by caller; here we
    // build exp(-i * angle * I_iz I_jz).
    ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
    for (int r = 0; r < dim; ++r) {
      u(r, r) = std::exp(Complex(0, -coeff * spin_m(r, i, n) * spin_m(r, j, n)));
    }
    return u;
  };
  // exp(-i pi I_1y I_2z): the generator squares to I/16, closed form.
  ComplexMatrix g = kron(kron(pauli_y() / 2.0, pauli_z() / 2.0), pauli_id());
  ComplexMatrix f_yz = std::cos(kPi / 4.0) * ComplexMatrix::Identity(dim, dim) -
                       Complex(0, 4.0 * std::sin(kPi / 4.0)) * g;

  const ComplexMatrix f_phase =
      std::exp(Complex(0, -kPi / 4.0)) * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix f_z3 = ideal_zrot(3, -kPi / 2.0, n);
  const ComplexMatrix f_zz13 = diag_two_z(1, 3, kPi);
  const ComplexMatrix f_x1 =
      embed_single(single_spin_rf(-kPi / 2.0, 0.0), 1, n);  // exp(+i pi/2 I_1x)
  const ComplexMatrix f_z1 = ideal_zrot(1, -kPi / 2.0, n);

  return f_phase * f_z3 * f_yz * f_zz13 * f_x1 * f_z1;
}

const CompileChoices& compile_choices() {
  static const CompileChoices choices{
      "+y ([pi/2]_y on spins 2,3 prepares the equal-superposition ancilla)",
      "-y ([pi/2]_{-y} on spin 2 between the recovery CNOTs)",
      "phi-minus (spins 1,2 leave the sequence in (|00>-|11>)/sqrt(2))",
      kPi,
      -kPi / 4.0,
  };
  return choices;
}

DensityMatrix simulate_physical(const PulseSequence& seq, const DensityMatrix& rho0,
                                const SpinSystem& sys, const NoiseModel& noise) {
  sys.validate();
  noise.validate();
  const int n = sys.n_spins;
  const int dim = 1 << n;
  if (rho0.dim() != dim) {
    throw std::invalid_argument("simulate_physical: state/system dimension mismatch");
  }
  for (const PulseElement& e : seq.elements) {
    if (!std::holds_alternative<RfPulse>(e) && !std::holds_alternative<DelayElement>(e) &&
        !std::holds_alternative<GradientElement>(e)) {
      throw std::invalid_argument("simulate_physical: unexpanded macros present");
    }
  }

  const DelayTables tables = make_delay_tables(sys);
  std::mt19937_64 rng(noise.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<ComplexMatrix> members;
  members.reserve(noise.inhomogeneity_samples);

  for (int member = 0; member < noise.inhomogeneity_samples; ++member) {
    std::vector<double> scale(n);
    for (int s = 0; s < n; ++s) {
      scale[s] = 1.0 + noise.calibration_sigma * gauss(rng);
    }

    ComplexMatrix rho = rho0.matrix();
    for (const PulseElement& e : seq.elements) {
      if (const auto* rf = std::get_if<RfPulse>(&e)) {
        ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
        for (int s : rf->spins) {
          check_spin(s, n);
          u = embed_single(single_spin_rf(rf->flip * scale[s - 1], rf->phase), s, n) * u;
        }
        rho = u * rho * u.adjoint();
      } else if (const auto* d = std::get_if<DelayElement>(&e)) {
        for (int r = 0; r < dim; ++r) {
          for (int c = 0; c < dim; ++c) {
            Complex factor = std::exp(
                Complex(0, -(tables.energy[r] - tables.energy[c]) * d->duration_s));
            if (noise.t2_enabled) {
              factor *= std::exp(-d->duration_s * tables.t2_rate[r][c]);
            }
            rho(r, c) *= factor;
          }
        }
      } else {
        for (int r = 0; r < dim; ++r) {
          for (int c = 0; c < dim; ++c) {
            if (total_coherence_order(r, c, n) != 0) rho(r, c) = 0.0;
          }
        }
      }
    }
    members.push_back(std::move(rho));
  }

  // Pairwise summation keeps the ensemble mean independent of member order.
  while (members.size() > 1) {
    std::vector<ComplexMatrix> next;
    for (std::size_t i = 0; i + 1 < members.size(); i += 2) {
      next.push_back(members[i] + members[i + 1]);
    }
    if (members.size() % 2 == 1) next.push_back(members.back());
    members = std::move(next);
  }
  ComplexMatrix mean = members[0] / static_cast<double>(noise.inhomogeneity_samples);
  return DensityMatrix(n, std::move(mean));
}

std::string to_string(EquivalenceClass cls) {
  switch (cls) {
    case EquivalenceClass::Exact: return "exact";
    case EquivalenceClass::GlobalPhase: return "global_phase";
    case EquivalenceClass::LocalZPhase: return "local_z_phase";
    case EquivalenceClass::Fail: return "fail";
  }
  return "fail";
}

namespace {

// Minimizes ||e^{ig} D(z) m - target||_F over a global phase and per-spin
// z rotations (D acts on row indices), by cyclic closed-form phasor updates.
EquivalenceReport fit_local_z(const ComplexMatrix& m, const ComplexMatrix& target,
                              int n_spins) {
  ComplexMatrix current = m;
  double g = 0.0;
  std::vector<double> z(n_spins, 0.0);
  const int dim = 1 << n_spins;

  auto row_inner = [&](int r) {
    Complex sum = 0.0;
    for (Eigen::Index c = 0; c < current.cols(); ++c) {
      sum += current(r, c) * std::conj(target(r, c));
    }
    return sum;
  };

  for (int sweep = 0; sweep < 60; ++sweep) {
    double moved = 0.0;
    // Global phase update: maximize Re(e^{i step} Σ_r row_inner(r)).
    Complex total = 0.0;
    for (int r = 0; r < dim; ++r) total += row_inner(r);
    if (std::abs(total) > 0.0) {
      const double step = -std::arg(total);
      if (step != 0.0) {
        current *= std::exp(Complex(0, step));
        g += step;
        moved += std::abs(step);
      }
    }
    // Per-spin updates.
    for (int s = 1; s <= n_spins; ++s) {
      Complex a = 0.0, b = 0.0;  // bit 0 rows / bit 1 rows
      for (int r = 0; r < dim; ++r) {
        if (((r >> (n_spins - s)) & 1) == 0) {
          a += row_inner(r);
        } else {
          b += row_inner(r);
        }
      }
      const Complex w = std::conj(a) + b;
      if (std::abs(w) == 0.0) continue;
      const double half = -std::arg(w);  // factor e^{-i half} on bit0, e^{+i half} on bit1
      if (half == 0.0) continue;
      for (int r = 0; r < dim; ++r) {
        const double sign = (((r >> (n_spins - s)) & 1) == 0) ? -1.0 : 1.0;
        current.row(r) *= std::exp(Complex(0, sign * half));
      }
      z[s - 1] += 2.0 * half;  // z phase convention: e^{-i z m}, m = ±1/2
      moved += std::abs(half);
    }
    if (moved < 1e-15) break;
  }

  EquivalenceReport report;
  report.cls = EquivalenceClass::LocalZPhase;
  report.residual = max_abs(current - target);
  report.global_phase = g;
  report.z_phases = z;
  return report;
}

}  // namespace

EquivalenceReport classify_equivalence(const ComplexMatrix& u,
                                       const ComplexMatrix& target, int n_spins,
                                       double tol) {
  if (u.rows() != target.rows() || u.cols() != target.cols()) {
    throw std::invalid_argument("classify_equivalence: dimension mismatch");
  }
  EquivalenceReport report;
  report.residual = max_abs(u - target);
  if (report.residual <= tol) {
    report.cls = EquivalenceClass::Exact;
    return report;
  }
  const GlobalPhaseReport gp = equal_up_to_global_phase(u, target, tol);
  if (gp.equal) {
    report.cls = EquivalenceClass::GlobalPhase;
    report.residual = gp.residual;
    report.global_phase = -gp.phase;  // e^{i g} u ≈ target
    return report;
  }
  EquivalenceReport zfit = fit_local_z(u, target, n_spins);
  if (zfit.residual <= tol) return zfit;
  zfit.cls = EquivalenceClass::Fail;
  return zfit;
}

EquivalenceReport verify_equivalence(const PulseSequence& seq,
                                     const ComplexMatrix& target,
                                     const SpinSystem& sys, SequenceMode mode,
                                     double tol) {
  return classify_equivalence(sequence_unitary(seq, sys, mode), target, sys.n_spins,
                              tol);
}

EquivalenceReport classify_state_equivalence(const ComplexVector& v,
                                             const ComplexVector& target,
                                             int n_spins, double tol) {
  return classify_equivalence(ComplexMatrix(v), ComplexMatrix(target), n_spins, tol);
}

double total_duration(const PulseSequence& seq, const SpinSystem& sys) {
  double total = 0.0;
  for (const PulseElement& e : expand_macros(seq, sys).elements) {
    if (const auto* d = std::get_if<DelayElement>(&e)) total += d->duration_s;
  }
  return total;
}

namespace {

std::string format_angle_deg(double radians) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6gdeg", radians * 180.0 / kPi);
  return buf;
}

std::string format_phase(double phase) {
  const double two_pi = 2.0 * kPi;
  double p = std::fmod(phase, two_pi);
  if (p < 0) p += two_pi;
  const double eps = 1e-9;
  if (std::abs(p) < eps || std::abs(p - two_pi) < eps) return "x";
  if (std::abs(p - kPi / 2.0) < eps) return "y";
  if (std::abs(p - kPi) < eps) return "-x";
  if (std::abs(p - 1.5 * kPi) < eps) return "-y";
  return format_angle_deg(p);
}

std::string join_spins(const std::vector<int>& spins) {
  std::string out;
  for (std::size_t i = 0; i < spins.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(spins[i]);
  }
  return out;
}

}  // namespace

std::string render_text(const PulseSequence& seq) {
  std::ostringstream os;
  for (const PulseElement& e : seq.elements) {
    if (const auto* rf = std::get_if<RfPulse>(&e)) {
      os << "RF spin=" << join_spins(rf->spins) << " flip=" << format_angle_deg(rf->flip)
         << " phase=" << format_phase(rf->phase) << "\n";
    } else if (const auto* d = std::get_if<DelayElement>(&e)) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "DELAY %.6gms", d->duration_s * 1000.0);
      os << buf << "\n";
    } else if (const auto* z = std::get_if<ZRotMacro>(&e)) {
      os << "ZROT spin=" << z->spin << " angle=" << format_angle_deg(z->angle) << "\n";
    } else if (const auto* jb = std::get_if<JBlockMacro>(&e)) {
      os << "JBLOCK spins=" << jb->spin_i << "," << jb->spin_j << "\n";
    } else if (const auto* cn = std::get_if<CnotMacro>(&e)) {
      os << "CNOT control=" << cn->control << " target=" << cn->target << "\n";
    } else {
      os << "GRAD\n";
    }
  }
  return os.str();
}

}  // namespace nohide
