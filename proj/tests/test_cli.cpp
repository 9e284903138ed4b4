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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "nohide/io.hpp"
#include "test_helpers.hpp"

namespace fs = std::filesystem;

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out_file =
      fs::temp_directory_path() / ("nohide_cli_out_" + std::to_string(counter++));
  const std::string command = std::string(NOHIDE_CLI_PATH) + " " + args + " > " +
                              out_file.string() + " 2>&1";
  const int raw = std::system(command.c_str());
  CommandResult result;
  result.exit_code = WEXITSTATUS(raw);
  std::ifstream file(out_file);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  result.output = buffer.str();
  fs::remove(out_file);
  return result;
}

std::string slurp(const fs::path& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("scan writes the documented row counts") {
  const fs::path small = temp_path("cli_scan_small.csv");
  CommandResult r =
      run_cli("scan --theta-steps 2 --phi-steps 2 --out " + small.string());
  REQUIRE(r.exit_code == 0);
  REQUIRE(nohide::read_scan_csv(small.string()).size() == 24);
  fs::remove(small);

  const fs::path full = temp_path("cli_scan_full.csv");
  REQUIRE(run_cli("scan --out " + full.string()).exit_code == 0);
  const auto rows = nohide::read_scan_csv(full.string());
  REQUIRE(rows.size() == 325 * 6);

  // Noiseless gate-level output rows follow the closed-form surface.
  for (const auto& row : rows) {
    if (row.stage == "output" && row.spin == 3) {
      const double expect = std::sin(row.theta_deg * nohide::test::kPi / 180.0) *
                            std::sin(row.phi_deg * nohide::test::kPi / 180.0);
      REQUIRE_THAT(row.re_signal, Catch::Matchers::WithinAbs(expect, 1e-9));
    }
  }
  fs::remove(full);
}

TEST_CASE("scan output is byte-identical across reruns") {
  const fs::path a = temp_path("cli_scan_a.csv");
  const fs::path b = temp_path("cli_scan_b.csv");
  const std::string flags =
      "scan --theta-steps 3 --phi-steps 5 --pulse-level --noise-sigma 0.02 "
      "--seed 12345 --out ";
  REQUIRE(run_cli(flags + a.string()).exit_code == 0);
  REQUIRE(run_cli(flags + b.string()).exit_code == 0);
  REQUIRE(slurp(a) == slurp(b));
  fs::remove(a);
  fs::remove(b);
}

TEST_CASE("scan error exit codes are distinct per class") {
  REQUIRE(run_cli("scan --theta-steps 1 --out /tmp/x.csv").exit_code == 2);
  REQUIRE(run_cli("scan --theta-steps 2 --phi-steps 2 --out "
                  "/nonexistent-dir/x.csv").exit_code == 4);
  const fs::path bad = temp_path("cli_bad_config.ini");
  std::ofstream(bad) << "[spins]\nnot_a_key = 1\n";
  REQUIRE(run_cli("--config " + bad.string() + " scan --out /tmp/x.csv").exit_code ==
          2);
  fs::remove(bad);
}

TEST_CASE("verify passes and reports failure when tampered") {
  CommandResult ok = run_cli("verify");
  REQUIRE(ok.exit_code == 0);
  REQUIRE(ok.output.find("randomization") != std::string::npos);
  REQUIRE(ok.output.find("fail") == std::string::npos);

  CommandResult json = run_cli("verify --json");
  REQUIRE(json.exit_code == 0);
  REQUIRE(json.output.find("\"class\"") != std::string::npos);
  REQUIRE(json.output.find("\"z_phases\"") != std::string::npos);

  CommandResult bad = run_cli("verify --tamper");
  REQUIRE(bad.exit_code == 3);
  REQUIRE(bad.output.find("fail") != std::string::npos);
}

TEST_CASE("tomo emits the full artifact and the Bell marginal is angle-independent") {
  const fs::path at90 = temp_path("cli_tomo_90.json");
  const fs::path at0 = temp_path("cli_tomo_0.json");
  REQUIRE(run_cli("tomo --theta 90 --phi 90 --out " + at90.string()).exit_code == 0);
  REQUIRE(run_cli("tomo --theta 90 --phi 0 --out " + at0.string()).exit_code == 0);

  nohide::TomoArtifact a = nohide::read_tomo_json(at90.string());
  nohide::TomoArtifact b = nohide::read_tomo_json(at0.string());

  // Noiseless: zero deviation and the phi-plus marginal.
  REQUIRE(a.deviation.avg_abs_dev < 1e-12);
  REQUIRE(a.deviation.max_abs_dev < 1e-12);
  nohide::ComplexMatrix bell = nohide::ComplexMatrix::Zero(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  REQUIRE(nohide::max_abs(a.marginal_12 - bell) < 1e-12);

  // The Bell marginal does not move with (theta, phi).
  REQUIRE(nohide::max_abs(a.marginal_12 - b.marginal_12) < 1e-12);
  fs::remove(at90);
  fs::remove(at0);
}

TEST_CASE("noisy tomography lands in the deviation bracket") {
  const fs::path config = temp_path("cli_tomo_noise.ini");
  std::ofstream(config) << "[noise]\ncalibration_sigma = 0.03\nensemble = 200\n"
                           "seed = 20260810\n";
  const fs::path out = temp_path("cli_tomo_noise.json");
  CommandResult r = run_cli("--config " + config.string() +
                            " tomo --theta 90 --phi 90 --out " + out.string());
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find('%') != std::string::npos);  // reported in percent
  nohide::TomoArtifact a = nohide::read_tomo_json(out.string());
  REQUIRE(a.deviation.avg_abs_dev >= 0.005);
  REQUIRE(a.deviation.avg_abs_dev <= 0.10);
  REQUIRE(a.deviation.max_abs_dev >= 0.01);
  REQUIRE(a.deviation.max_abs_dev <= 0.20);
  fs::remove(config);
  fs::remove(out);
}

TEST_CASE("compile prints the pulse listing") {
  CommandResult r = run_cli("compile --sequence randomization");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("RF spin=1 flip=90deg phase=-x") != std::string::npos);
  REQUIRE(r.output.find("JBLOCK spins=1,3") != std::string::npos);

  CommandResult expanded = run_cli("compile --sequence cnot23 --expand");
  REQUIRE(expanded.exit_code == 0);
  REQUIRE(expanded.output.find("DELAY") != std::string::npos);
  REQUIRE(expanded.output.find("JBLOCK") == std::string::npos);

  CommandResult report = run_cli("compile --sequence full --report");
  REQUIRE(report.exit_code == 0);
  REQUIRE(report.output.find("total duration") != std::string::npos);

  REQUIRE(run_cli("compile --sequence bogus").exit_code == 2);
}
