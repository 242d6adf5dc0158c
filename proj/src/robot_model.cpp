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

#include "orthoglide/robot_model.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace orthoglide {

Leg parse_leg(char id) {
  switch (std::toupper(static_cast<unsigned char>(id))) {
    case 'A': return Leg::A;
    case 'B': return Leg::B;
    case 'C': return Leg::C;
    default: throw UnknownLeg(std::string("unknown leg id '") + id + "'");
  }
}

void validate(const RobotModel<double>& model) {
  const auto& g = model.geometry;
  const auto& m = model.masses;
  auto positive = [](double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw ConfigError(std::string(name) + " must be a positive finite number");
    }
  };
  positive(g.l, "l");
  positive(g.l1, "l1");
  positive(g.l2, "l2");
  positive(g.l3, "l3");
  positive(g.l4, "l4");
  if (!std::isfinite(g.alpha)) throw ConfigError("alpha must be finite");
  if (g.l4 != g.l2) throw ConfigError("l4 must equal l2");
  positive(m.m1, "m1");
  positive(m.m2, "m2");
  positive(m.m3, "m3");
  positive(m.m4, "m4");
  positive(m.m5, "m5");
  positive(m.m6, "m6");
  if (!(m.g >= 0.0) || !std::isfinite(m.g)) throw ConfigError("g must be >= 0");
  if (std::abs(m.g_dir.norm() - 1.0) > 1e-12) {
    throw ConfigError("gravity direction must be a unit vector");
  }
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& text, const std::string& key, int line) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("line " + std::to_string(line) + ": bad value for '" + key +
                      "': '" + text + "'");
  }
  return value;
}

}  // namespace

RobotModel<double> parse_model(std::istream& in) {
  RobotModel<double> model = default_model<double>();
  auto& g = model.geometry;
  auto& m = model.masses;
  const std::map<std::string, double*> slots = {
      {"l", &g.l},   {"l1", &g.l1}, {"l2", &g.l2}, {"l3", &g.l3},
      {"alpha", &g.alpha},
      {"m1", &m.m1}, {"m2", &m.m2}, {"m3", &m.m3}, {"m4", &m.m4},
      {"m5", &m.m5}, {"m6", &m.m6}, {"g", &m.g}};

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const auto slot = slots.find(key);
    if (slot == slots.end()) {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    *slot->second = parse_number(trim(line.substr(eq + 1)), key, line_no);
  }
  g.l4 = g.l2;
  assign_inertia(model);
  validate(model);
  return model;
}

RobotModel<double> load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open parameter file " + path.string());
  return parse_model(in);
}

void write_model(std::ostream& out, const RobotModel<double>& model) {
  const auto& g = model.geometry;
  const auto& m = model.masses;
  out << std::setprecision(17);
  out << "# Orthoglide parameters (SI units)\n";
  out << "l=" << g.l << "\nl1=" << g.l1 << "\nl2=" << g.l2 << "\nl3=" << g.l3
      << "\nalpha=" << g.alpha << "\n";
  out << "m1=" << m.m1 << "\nm2=" << m.m2 << "\nm3=" << m.m3 << "\nm4=" << m.m4
      << "\nm5=" << m.m5 << "\nm6=" << m.m6 << "\ng=" << m.g << "\n";
}

}  // namespace orthoglide
