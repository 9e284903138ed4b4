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

#ifndef NOHIDE_IO_HPP
#define NOHIDE_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "nohide/state.hpp"
#include "nohide/tomo.hpp"

namespace nohide {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScanRow {
  double theta_deg = 0.0;
  double phi_deg = 0.0;
  std::string stage;  // "input" or "output"
  int spin = 0;
  double re_signal = 0.0;
  double im_signal = 0.0;
};

// CSV with header `theta_deg,phi_deg,stage,spin,re_signal,im_signal`,
// UTF-8, LF line ends, full double precision; a leading comment line
// documents the mesh-grid row ordering.
void write_scan_csv(const std::string& path, const std::vector<ScanRow>& rows);
std::vector<ScanRow> read_scan_csv(const std::string& path);

// Density matrices as JSON: nested arrays of [re, im] pairs plus
// basis-order metadata.
std::string matrix_to_json(const ComplexMatrix& m);

struct TomoArtifact {
  double theta_deg = 0.0;
  double phi_deg = 0.0;
  double calibration_sigma = 0.0;
  int ensemble = 1;
  std::uint64_t seed = 0;
  ComplexMatrix full_matrix;     // 8x8 reconstructed output state
  ComplexMatrix marginal_12;     // 4x4
  ComplexMatrix marginal_3;      // 2x2
  DeviationReport deviation;     // vs the theoretical output state
  double min_eigenvalue = 0.0;
  std::vector<double> receiver_z_phases;  // fitted calibration, radians
};

void write_tomo_json(const std::string& path, const TomoArtifact& artifact);
TomoArtifact read_tomo_json(const std::string& path);

}  // namespace nohide

#endif  // NOHIDE_IO_HPP
