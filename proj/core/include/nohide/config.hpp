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

#ifndef NOHIDE_CONFIG_HPP
#define NOHIDE_CONFIG_HPP

#include <stdexcept>
#include <string>

#include "nohide/pulse.hpp"

namespace nohide {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridConfig {
  int theta_steps = 13;
  int phi_steps = 25;
};

struct RunConfig {
  SpinSystem spins;
  NoiseModel noise;
  GridConfig grid;
};

// Defaults: the sample's J couplings, 13x25 grid, noise off.
RunConfig default_config();

// Strict INI-style file with sections [spins], [noise], [grid]. Unknown
// sections or keys are rejected with a ConfigError. Keys:
//   [spins] offsets_hz, t2_s (three numbers), j12_hz, j13_hz, j23_hz
//   [noise] calibration_sigma, ensemble, t2_enabled, seed
//   [grid]  theta_steps, phi_steps
RunConfig load_config(const std::string& path);

// Same grammar, from a string (used by tests).
RunConfig parse_config(const std::string& text);

}  // namespace nohide

#endif  // NOHIDE_CONFIG_HPP
