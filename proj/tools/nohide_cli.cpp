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

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nohide/circuit.hpp"
#include "nohide/config.hpp"
#include "nohide/io.hpp"
#include "nohide/nmr.hpp"
#include "nohide/pulse.hpp"
#include "nohide/structure.hpp"
#include "nohide/tomo.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitIo = 4;

struct CommonOptions {
  std::string config_path;
  nohide::RunConfig load() const {
    return config_path.empty() ? nohide::default_config()
                               : nohide::load_config(config_path);
  }
};

std::string stage_name(nohide::Stage stage) {
  return stage == nohide::Stage::Input ? "input" : "output";
}

int run_scan(const CommonOptions& common, std::optional<int> theta_steps,
             std::optional<int> phi_steps, bool pulse_level,
             std::optional<double> noise_sigma, std::optional<std::uint64_t> seed,
             const std::string& out_path) {
  nohide::RunConfig config = common.load();
  if (theta_steps) config.grid.theta_steps = *theta_steps;
  if (phi_steps) config.grid.phi_steps = *phi_steps;
  if (noise_sigma) config.noise.calibration_sigma = *noise_sigma;
  if (seed) config.noise.seed = *seed;
  if (config.grid.theta_steps < 2 || config.grid.phi_steps < 2) {
    throw nohide::ConfigError("scan: grid steps must be >= 2");
  }

  std::vector<nohide::ObservationRecord> records =
      pulse_level ? nohide::observe_pulse_grid(config.grid.theta_steps,
                                               config.grid.phi_steps, config.spins,
                                               config.noise)
                  : nohide::observe_gate_grid(config.grid.theta_steps,
                                              config.grid.phi_steps);

  std::vector<nohide::ScanRow> rows;
  rows.reserve(records.size());
  for (const auto& r : records) {
    rows.push_back(nohide::ScanRow{r.theta_deg, r.phi_deg, stage_name(r.stage),
                                   r.spin, r.signal.real(), r.signal.imag()});
  }
  nohide::write_scan_csv(out_path, rows);
  std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
  return kExitOk;
}

struct VerifyRow {
  std::string name;
  std::string target;
  std::string mode;
  nohide::EquivalenceReport report;
};

std::vector<VerifyRow> collect_verify_rows(const nohide::SpinSystem& sys,
                                           bool tamper) {
  using nohide::SequenceMode;
  std::vector<VerifyRow> rows;

  const nohide::ComplexMatrix u10 = nohide::randomization_unitary();
  rows.push_back({"product-operator-form", "randomization-unitary", "algebraic",
                  nohide::classify_equivalence(
                      nohide::randomization_from_product_operators(), u10, 3)});

  nohide::PulseSequence randomization = nohide::compile_randomization();
  rows.push_back({"randomization", "randomization-unitary", "ideal",
                  nohide::verify_equivalence(randomization, u10, sys,
                                             SequenceMode::Ideal)});
  rows.push_back({"randomization", "randomization-unitary", "physical",
                  nohide::verify_equivalence(randomization, u10, sys,
                                             SequenceMode::Physical)});

  nohide::PulseSequence cnot = nohide::compile_cnot23();
  if (tamper) {
    // Test fixture: break the first pulse's phase so verification fails.
    auto& rf = std::get<nohide::RfPulse>(cnot.elements.front());
    rf.phase += kPi / 2.0;
  }
  const nohide::ComplexMatrix cnot23 = nohide::cnot_matrix(2, 3, 3);
  rows.push_back({"cnot23", "cnot23-gate", "ideal",
                  nohide::verify_equivalence(cnot, cnot23, sys, SequenceMode::Ideal)});
  rows.push_back({"cnot23", "cnot23-gate", "physical",
                  nohide::verify_equivalence(cnot, cnot23, sys,
                                             SequenceMode::Physical)});

  // Full pipeline, state-level: the compiled sequence applied to |000> must
  // reach the Bell ⊗ psi output up to the documented local z phases.
  const nohide::ComplexVector ket000 =
      nohide::StateVector::basis(3, 0).amplitudes();
  const nohide::StateVector psi = nohide::prepare_psi(kPi / 2.0, kPi / 2.0);
  const nohide::StateVector bell = nohide::bell_phi_plus();
  nohide::ComplexVector target = nohide::ComplexVector::Zero(8);
  for (int b = 0; b < 4; ++b) {
    for (int s = 0; s < 2; ++s) {
      target(b * 2 + s) = bell.amplitude(b) * psi.amplitude(s);
    }
  }
  const nohide::PulseSequence full = nohide::compile_full(kPi / 2.0, kPi / 2.0);
  for (auto mode : {SequenceMode::Ideal, SequenceMode::Physical}) {
    const nohide::ComplexMatrix u = nohide::sequence_unitary(full, sys, mode);
    rows.push_back({"full(90,90)|000>", "bell-psi-state",
                    mode == SequenceMode::Ideal ? "ideal" : "physical",
                    nohide::classify_state_equivalence(u * ket000, target, 3)});
  }
  return rows;
}

int run_verify(const CommonOptions& common, bool as_json, bool tamper) {
  const nohide::RunConfig config = common.load();
  const std::vector<VerifyRow> rows = collect_verify_rows(config.spins, tamper);

  bool any_failed = false;
  if (as_json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json entry;
      entry["sequence"] = row.name;
      entry["target"] = row.target;
      entry["mode"] = row.mode;
      entry["class"] = nohide::to_string(row.report.cls);
      entry["residual"] = row.report.residual;
      entry["global_phase"] = row.report.global_phase;
      entry["z_phases"] = row.report.z_phases;
      j.push_back(std::move(entry));
      any_failed |= row.report.cls == nohide::EquivalenceClass::Fail;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("%-22s %-24s %-9s %-14s %-12s\n", "sequence", "target", "mode",
                "class", "residual");
    for (const auto& row : rows) {
      std::printf("%-22s %-24s %-9s %-14s %-12.3e\n", row.name.c_str(),
                  row.target.c_str(), row.mode.c_str(),
                  nohide::to_string(row.report.cls).c_str(), row.report.residual);
      any_failed |= row.report.cls == nohide::EquivalenceClass::Fail;
    }
  }
  return any_failed ? kExitVerifyFailed : kExitOk;
}

int run_tomo(const CommonOptions& common, double theta_deg, double phi_deg,
             std::optional<double> noise_sigma, std::optional<std::uint64_t> seed,
             const std::string& out_path) {
  nohide::RunConfig config = common.load();
  if (noise_sigma) config.noise.calibration_sigma = *noise_sigma;
  if (seed) config.noise.seed = *seed;

  const double theta = theta_deg * kPi / 180.0;
  const double phi = phi_deg * kPi / 180.0;
  const nohide::DensityMatrix theory = nohide::expected_output(theta, phi);
  const nohide::PulseSequence seq =
      nohide::expand_macros(nohide::compile_full(theta, phi), config.spins);
  const nohide::DensityMatrix pps = nohide::pseudo_pure(1.0);

  // Receiver calibration: fit the systematic per-spin z phases on the
  // noiseless run, then apply the same correction to the noisy ensemble.
  nohide::NoiseModel quiet;
  quiet.seed = config.noise.seed;
  const nohide::DensityMatrix reference =
      nohide::simulate_physical(seq, pps, config.spins, quiet);
  const std::vector<double> zcal =
      nohide::fit_local_z_phases(reference.matrix(), theory.matrix(), 3);

  const nohide::DensityMatrix noisy =
      nohide::simulate_physical(seq, pps, config.spins, config.noise);
  const nohide::ComplexMatrix corrected =
      nohide::apply_local_z(noisy.matrix(), zcal, 3);

  const nohide::DensityMatrix measured =
      nohide::reconstruct(nohide::pauli_expectations(
          nohide::DensityMatrix::from_hermitian(3, corrected)));

  nohide::TomoArtifact artifact;
  artifact.theta_deg = theta_deg;
  artifact.phi_deg = phi_deg;
  artifact.calibration_sigma = config.noise.calibration_sigma;
  artifact.ensemble = config.noise.inhomogeneity_samples;
  artifact.seed = config.noise.seed;
  artifact.full_matrix = measured.matrix();
  artifact.marginal_12 = nohide::partial_trace(measured, {1, 2}).matrix();
  artifact.marginal_3 = nohide::partial_trace(measured, {3}).matrix();
  artifact.deviation = nohide::deviation_report(theory.matrix(), measured.matrix());
  artifact.min_eigenvalue = measured.min_eigenvalue();
  artifact.receiver_z_phases = zcal;
  nohide::write_tomo_json(out_path, artifact);

  std::printf("tomo(theta=%g deg, phi=%g deg, sigma=%g): avg dev %.3e (%.2f%%), "
              "max dev %.3e (%.2f%%), min eigenvalue %.3e\n",
              theta_deg, phi_deg, config.noise.calibration_sigma,
              artifact.deviation.avg_abs_dev, 100.0 * artifact.deviation.avg_abs_dev,
              artifact.deviation.max_abs_dev, 100.0 * artifact.deviation.max_abs_dev,
              artifact.min_eigenvalue);
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

int run_compile(const CommonOptions& common, const std::string& which,
                double theta_deg, double phi_deg, bool expand, bool report) {
  const nohide::RunConfig config = common.load();
  nohide::PulseSequence seq;
  if (which == "randomization") {
    seq = nohide::compile_randomization();
  } else if (which == "cnot23") {
    seq = nohide::compile_cnot23();
  } else if (which == "full") {
    seq = nohide::compile_full(theta_deg * kPi / 180.0, phi_deg * kPi / 180.0);
  } else {
    throw nohide::ConfigError("compile: unknown sequence '" + which + "'");
  }
  if (expand) seq = nohide::expand_macros(seq, config.spins);
  std::cout << nohide::render_text(seq);
  if (report) {
    const nohide::CompileChoices& choices = nohide::compile_choices();
    std::cout << "# init-hadamard: " << choices.init_hadamard << "\n";
    std::cout << "# recovery-rotation: " << choices.recovery_rotation << "\n";
    std::cout << "# bell-realized: " << choices.bell_realized << "\n";
    std::printf("# residual z phase on spin 1 vs bell-psi target: %.6f rad\n",
                choices.output_z1_phase);
    std::printf("# residual global phase vs bell-psi target: %.6f rad\n",
                choices.output_global_phase);
    std::printf("# total duration: %.6f ms\n",
                1000.0 * nohide::total_duration(seq, config.spins));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"no-hiding theorem experiment simulator"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions common;
  app.add_option("--config", common.config_path,
                 "INI config with [spins], [noise], [grid] sections")
      ->configurable(false);

  auto* scan = app.add_subcommand(
      "scan", "sweep the (theta, phi) grid and write per-spin signals as CSV");
  scan->fallthrough();
  std::optional<int> theta_steps, phi_steps;
  std::optional<double> scan_sigma;
  std::optional<std::uint64_t> scan_seed;
  bool pulse_level = false;
  std::string scan_out = "scan.csv";
  scan->add_option("--theta-steps", theta_steps, "theta grid size (>= 2)");
  scan->add_option("--phi-steps", phi_steps, "phi grid size (>= 2)");
  scan->add_flag("--pulse-level", pulse_level,
                 "simulate the compiled pulse sequence instead of the gates");
  scan->add_option("--noise-sigma", scan_sigma, "RF calibration noise sigma");
  scan->add_option("--seed", scan_seed, "noise ensemble seed");
  scan->add_option("--out", scan_out, "output CSV path");

  auto* verify = app.add_subcommand(
      "verify", "check compiled sequences against their target unitaries");
  verify->fallthrough();
  bool verify_json = false;
  bool verify_tamper = false;
  verify->add_flag("--json", verify_json, "emit a machine-readable report");
  verify->add_flag("--tamper", verify_tamper,
                   "test fixture: corrupt a sequence so verification fails")
      ->group("");  // hidden

  auto* tomo = app.add_subcommand(
      "tomo", "tomograph the simulated output state at one grid point");
  tomo->fallthrough();
  double tomo_theta = 90.0, tomo_phi = 90.0;
  std::optional<double> tomo_sigma;
  std::optional<std::uint64_t> tomo_seed;
  std::string tomo_out = "tomo.json";
  tomo->add_option("--theta", tomo_theta, "theta in degrees")->required();
  tomo->add_option("--phi", tomo_phi, "phi in degrees")->required();
  tomo->add_option("--noise-sigma", tomo_sigma, "RF calibration noise sigma");
  tomo->add_option("--seed", tomo_seed, "noise ensemble seed");
  tomo->add_option("--out", tomo_out, "output JSON path");

  auto* compile = app.add_subcommand(
      "compile", "print a compiled pulse sequence listing");
  compile->fallthrough();
  std::string compile_seq = "full";
  double compile_theta = 90.0, compile_phi = 90.0;
  bool compile_expand = false, compile_report = false;
  compile->add_option("--sequence", compile_seq,
                      "randomization | cnot23 | full");
  compile->add_option("--theta", compile_theta, "theta in degrees (full only)");
  compile->add_option("--phi", compile_phi, "phi in degrees (full only)");
  compile->add_flag("--expand", compile_expand, "expand macros to primitives");
  compile->add_flag("--report", compile_report, "append compiler choice notes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (scan->parsed()) {
      return run_scan(common, theta_steps, phi_steps, pulse_level, scan_sigma,
                      scan_seed, scan_out);
    }
    if (verify->parsed()) return run_verify(common, verify_json, verify_tamper);
    if (tomo->parsed()) {
      return run_tomo(common, tomo_theta, tomo_phi, tomo_sigma, tomo_seed, tomo_out);
    }
    if (compile->parsed()) {
      return run_compile(common, compile_seq, compile_theta, compile_phi,
                         compile_expand, compile_report);
    }
  } catch (const nohide::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const nohide::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}
