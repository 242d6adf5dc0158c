// Copyright 2026 The Orthoglide Dynamics Authors
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

#include "orthoglide/simulation.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace orthoglide {

namespace {

template <typename E>
[[noreturn]] void rethrow_at(const E& e, double t) {
  std::ostringstream msg;
  msg << "t = " << t << " s: " << e.what();
  throw E(msg.str());
}

std::array<double, kCsvColumns.size()> flatten(const SimulationRow& row) {
  std::array<double, kCsvColumns.size()> v{};
  std::size_t c = 0;
  v[c++] = row.t;
  for (const Vec3d* vec : {&row.r, &row.lambda, &row.lambda_dot, &row.lambda_ddot}) {
    for (int i = 0; i < 3; ++i) v[c++] = (*vec)(i);
  }
  for (double phi : row.phi) v[c++] = phi;
  for (const Vec3d* vec : {&row.force, &row.power}) {
    for (int i = 0; i < 3; ++i) v[c++] = (*vec)(i);
  }
  return v;
}

SimulationRow unflatten(const std::array<double, kCsvColumns.size()>& v) {
  SimulationRow row;
  std::size_t c = 0;
  row.t = v[c++];
  for (Vec3d* vec : {&row.r, &row.lambda, &row.lambda_dot, &row.lambda_ddot}) {
    for (int i = 0; i < 3; ++i) (*vec)(i) = v[c++];
  }
  for (double& phi : row.phi) phi = v[c++];
  for (Vec3d* vec : {&row.force, &row.power}) {
    for (int i = 0; i < 3; ++i) (*vec)(i) = v[c++];
  }
  return row;
}

}  // namespace

SimulationRow make_row(double t, const DynamicsSample<double>& sample,
                       const PlatformState<double>& state) {
  SimulationRow row;
  row.t = t;
  row.r = state.r;
  for (int j = 0; j < 3; ++j) {
    const auto& ch = sample.actuators[j];
    row.lambda(j) = ch.lambda;
    row.lambda_dot(j) = ch.lambda_dot;
    row.lambda_ddot(j) = ch.lambda_ddot;
    row.force(j) = ch.force;
    row.power(j) = ch.power;
    row.phi[2 * j] = sample.joints[j].phi21;
    row.phi[2 * j + 1] = sample.joints[j].phi32;
  }
  return row;
}

std::vector<SimulationRow> simulate(const RobotModel<double>& model,
                                    const Trajectory& trajectory, double t_end,
                                    int samples) {
  if (samples < 2) throw Error("simulate needs at least 2 samples");
  if (!(t_end > 0.0)) throw Error("simulate needs t_end > 0");
  std::vector<SimulationRow> rows;
  rows.reserve(samples);
  for (int n = 0; n < samples; ++n) {
    const double t = t_end * static_cast<double>(n) / (samples - 1);
    try {
      const auto state = trajectory(t);
      rows.push_back(make_row(t, inverse_dynamics(state, model), state));
    } catch (const OutOfWorkspace& e) {
      rethrow_at(e, t);
    } catch (const NearSingular& e) {
      rethrow_at(e, t);
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SimulationRow>& rows) {
  for (std::size_t c = 0; c < kCsvColumns.size(); ++c) {
    if (c) out << ',';
    out << kCsvColumns[c];
  }
  out << '\n';
  char buf[32];
  for (const auto& row : rows) {
    const auto values = flatten(row);
    for (std::size_t c = 0; c < values.size(); ++c) {
      if (c) out << ',';
      std::snprintf(buf, sizeof buf, "%.9e", values[c]);
      out << buf;
    }
    out << '\n';
  }
}

void emit_csv(const std::vector<SimulationRow>& rows, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_csv(out, rows);
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

std::vector<SimulationRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw MalformedCsv("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::string expected;
  for (std::size_t c = 0; c < kCsvColumns.size(); ++c) {
    if (c) expected += ',';
    expected += kCsvColumns[c];
  }
  if (line != expected) throw MalformedCsv("unexpected CSV header: " + line);

  std::vector<SimulationRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::array<double, kCsvColumns.size()> values{};
    std::size_t c = 0;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      if (c >= values.size()) {
        throw MalformedCsv("line " + std::to_string(line_no) + ": too many fields");
      }
      char* end = nullptr;
      errno = 0;
      values[c] = std::strtod(field.c_str(), &end);
      if (field.empty() || end != field.c_str() + field.size() || errno == ERANGE) {
        throw MalformedCsv("line " + std::to_string(line_no) + ": bad number '" + field + "'");
      }
      ++c;
    }
    if (c != values.size()) {
      throw MalformedCsv("line " + std::to_string(line_no) + ": expected " +
                         std::to_string(values.size()) + " fields");
    }
    rows.push_back(unflatten(values));
  }
  return rows;
}

std::vector<SimulationRow> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_csv(in);
}

}  // namespace orthoglide
