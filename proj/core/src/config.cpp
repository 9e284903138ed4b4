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

#include "nohide/config.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

namespace nohide {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<double> parse_numbers(const std::string& value, const std::string& key) {
  std::vector<double> out;
  std::istringstream is(value);
  std::string token;
  while (is >> token) {
    if (!token.empty() && token.back() == ',') token.pop_back();
    if (token.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      throw ConfigError("config: bad number for key '" + key + "': " + token);
    }
    if (used != token.size()) {
      throw ConfigError("config: bad number for key '" + key + "': " + token);
    }
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("config: no value for key '" + key + "'");
  return out;
}

double parse_one(const std::string& value, const std::string& key) {
  const auto numbers = parse_numbers(value, key);
  if (numbers.size() != 1) {
    throw ConfigError("config: key '" + key + "' takes one value");
  }
  return numbers[0];
}

bool parse_bool(const std::string& value, const std::string& key) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("config: key '" + key + "' must be a boolean");
}

}  // namespace

RunConfig default_config() {
  RunConfig config;
  config.spins = sample_spin_system();
  config.noise = NoiseModel{};
  config.grid = GridConfig{};
  return config;
}

RunConfig parse_config(const std::string& text) {
  RunConfig config = default_config();
  std::istringstream is(text);
  std::string raw;
  std::string section;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("config: malformed section at line " + std::to_string(lineno));
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section != "spins" && section != "noise" && section != "grid") {
        throw ConfigError("config: unknown section '" + section + "'");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config: expected key = value at line " + std::to_string(lineno));
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) {
      throw ConfigError("config: key '" + key + "' outside any section");
    }

    if (section == "spins") {
      if (key == "offsets_hz") {
        const auto v = parse_numbers(value, key);
        if (v.size() != 3) throw ConfigError("config: offsets_hz needs 3 values");
        config.spins.offsets_hz = v;
      } else if (key == "t2_s") {
        const auto v = parse_numbers(value, key);
        if (v.size() != 3) throw ConfigError("config: t2_s needs 3 values");
        config.spins.t2_s = v;
      } else if (key == "j12_hz") {
        config.spins.j_hz[0][1] = config.spins.j_hz[1][0] = parse_one(value, key);
      } else if (key == "j13_hz") {
        config.spins.j_hz[0][2] = config.spins.j_hz[2][0] = parse_one(value, key);
      } else if (key == "j23_hz") {
        config.spins.j_hz[1][2] = config.spins.j_hz[2][1] = parse_one(value, key);
      } else {
        throw ConfigError("config: unknown key '" + key + "' in [spins]");
      }
    } else if (section == "noise") {
      if (key == "calibration_sigma") {
        config.noise.calibration_sigma = parse_one(value, key);
      } else if (key == "ensemble") {
        config.noise.inhomogeneity_samples = static_cast<int>(parse_one(value, key));
      } else if (key == "t2_enabled") {
        config.noise.t2_enabled = parse_bool(value, key);
      } else if (key == "seed") {
        config.noise.seed = static_cast<std::uint64_t>(parse_one(value, key));
      } else {
        throw ConfigError("config: unknown key '" + key + "' in [noise]");
      }
    } else {
      if (key == "theta_steps") {
        config.grid.theta_steps = static_cast<int>(parse_one(value, key));
      } else if (key == "phi_steps") {
        config.grid.phi_steps = static_cast<int>(parse_one(value, key));
      } else {
        throw ConfigError("config: unknown key '" + key + "' in [grid]");
      }
    }
  }

  try {
    config.spins.validate();
    config.noise.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (config.grid.theta_steps < 2 || config.grid.phi_steps < 2) {
    throw ConfigError("config: grid steps must be >= 2");
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace nohide
