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

#include "nohide/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nohide {

namespace {

using json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json matrix_to_json_value(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  json out;
  out["basis_order"] = "big-endian: qubit 1 most significant; states 00...0 upward";
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(rows);
  return out;
}

ComplexMatrix matrix_from_json_value(const json& j) {
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  ComplexMatrix m(rows, cols);
  const json& entries = j.at("entries");
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const json& pair = entries.at(r).at(c);
      m(r, c) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
  }
  return m;
}

}  // namespace

void write_scan_csv(const std::string& path, const std::vector<ScanRow>& rows) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << "# rows ordered theta-major (theta outer, phi inner), stage input "
          "then output, spin 1..3 per point\n";
  file << "theta_deg,phi_deg,stage,spin,re_signal,im_signal\n";
  for (const ScanRow& r : rows) {
    file << format_double(r.theta_deg) << ',' << format_double(r.phi_deg) << ','
         << r.stage << ',' << r.spin << ',' << format_double(r.re_signal) << ','
         << format_double(r.im_signal) << '\n';
  }
  if (!file) throw IoError("write failed for '" + path + "'");
}

std::vector<ScanRow> read_scan_csv(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "'");
  std::vector<ScanRow> rows;
  std::string line;
  bool header_seen = false;
  while (std::getline(file, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "theta_deg,phi_deg,stage,spin,re_signal,im_signal") {
        throw IoError("unexpected CSV header in '" + path + "'");
      }
      header_seen = true;
      continue;
    }
    std::istringstream is(line);
    std::string field;
    ScanRow row;
    try {
      std::getline(is, field, ','); row.theta_deg = std::stod(field);
      std::getline(is, field, ','); row.phi_deg = std::stod(field);
      std::getline(is, row.stage, ',');
      std::getline(is, field, ','); row.spin = std::stoi(field);
      std::getline(is, field, ','); row.re_signal = std::stod(field);
      std::getline(is, field, ','); row.im_signal = std::stod(field);
    } catch (const std::exception&) {
      throw IoError("malformed CSV row in '" + path + "': " + line);
    }
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw IoError("missing CSV header in '" + path + "'");
  return rows;
}

std::string matrix_to_json(const ComplexMatrix& m) {
  return matrix_to_json_value(m).dump(2);
}

void write_tomo_json(const std::string& path, const TomoArtifact& artifact) {
  json j;
  j["theta_deg"] = artifact.theta_deg;
  j["phi_deg"] = artifact.phi_deg;
  j["noise"] = {{"calibration_sigma", artifact.calibration_sigma},
                {"ensemble", artifact.ensemble},
                {"seed", artifact.seed}};
  j["full_matrix"] = matrix_to_json_value(artifact.full_matrix);
  j["marginal_12"] = matrix_to_json_value(artifact.marginal_12);
  j["marginal_3"] = matrix_to_json_value(artifact.marginal_3);
  j["deviation"] = {{"avg_abs_dev", artifact.deviation.avg_abs_dev},
                    {"max_abs_dev", artifact.deviation.max_abs_dev},
                    {"n", artifact.deviation.n}};
  j["min_eigenvalue"] = artifact.min_eigenvalue;
  j["receiver_z_phases"] = artifact.receiver_z_phases;

  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << j.dump(2) << '\n';
  if (!file) throw IoError("write failed for '" + path + "'");
}

TomoArtifact read_tomo_json(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "'");
  json j;
  try {
    file >> j;
    TomoArtifact a;
    a.theta_deg = j.at("theta_deg").get<double>();
    a.phi_deg = j.at("phi_deg").get<double>();
    a.calibration_sigma = j.at("noise").at("calibration_sigma").get<double>();
    a.ensemble = j.at("noise").at("ensemble").get<int>();
    a.seed = j.at("noise").at("seed").get<std::uint64_t>();
    a.full_matrix = matrix_from_json_value(j.at("full_matrix"));
    a.marginal_12 = matrix_from_json_value(j.at("marginal_12"));
    a.marginal_3 = matrix_from_json_value(j.at("marginal_3"));
    a.deviation.avg_abs_dev = j.at("deviation").at("avg_abs_dev").get<double>();
    a.deviation.max_abs_dev = j.at("deviation").at("max_abs_dev").get<double>();
    a.deviation.n = j.at("deviation").at("n").get<int>();
    a.min_eigenvalue = j.at("min_eigenvalue").get<double>();
    a.receiver_z_phases = j.at("receiver_z_phases").get<std::vector<double>>();
    return a;
  } catch (const json::exception& e) {
    throw IoError("malformed tomography JSON in '" + path + "': " + e.what());
  }
}

}  // namespace nohide
