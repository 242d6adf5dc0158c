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

#include "orthoglide/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace orthoglide {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

struct Range {
  double lo;
  double hi;
};

// Step of roughly `target` ticks rounded to 1, 2 or 5 x 10^k.
double tick_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  const double nice = norm < 1.5 ? 1.0 : norm < 3.5 ? 2.0 : norm < 7.5 ? 5.0 : 10.0;
  return nice * mag;
}

Range padded(const std::vector<double>& v) {
  auto [lo_it, hi_it] = std::minmax_element(v.begin(), v.end());
  double lo = v.empty() ? 0.0 : *lo_it;
  double hi = v.empty() ? 1.0 : *hi_it;
  if (hi - lo < 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)})) {
    const double pad = std::max(1e-3, std::abs(hi) * 0.1);
    lo -= pad;
    hi += pad;
  }
  const double step = tick_step(hi - lo, 5);
  return {std::floor(lo / step) * step, std::ceil(hi / step) * step};
}

std::string format_tick(double value, double step) {
  char buf[32];
  const int digits = std::max(0, -static_cast<int>(std::floor(std::log10(step))));
  if (std::abs(value) < 0.5 * step) value = 0.0;
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Series& series) {
  const Range xr = padded(series.t);
  const Range yr = padded(series.y);
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto py = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * plot_h; };

  std::ostringstream svg;
  svg.precision(6);
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
      << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<g font-family=\"sans-serif\" font-size=\"12\">\n";

  const double xs = tick_step(xr.hi - xr.lo, 5);
  for (double x = xr.lo; x <= xr.hi + 0.5 * xs; x += xs) {
    svg << "<line x1=\"" << px(x) << "\" y1=\"" << kTop << "\" x2=\"" << px(x) << "\" y2=\""
        << kTop + plot_h << "\" stroke=\"#dddddd\"/>\n"
        << "<text x=\"" << px(x) << "\" y=\"" << kTop + plot_h + 18
        << "\" text-anchor=\"middle\">" << format_tick(x, xs) << "</text>\n";
  }
  const double ys = tick_step(yr.hi - yr.lo, 5);
  for (double y = yr.lo; y <= yr.hi + 0.5 * ys; y += ys) {
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << py(y) << "\" x2=\"" << kLeft + plot_w
        << "\" y2=\"" << py(y) << "\" stroke=\"#dddddd\"/>\n"
        << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(y) + 4
        << "\" text-anchor=\"end\">" << format_tick(y, ys) << "</text>\n";
  }
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

  svg << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < series.t.size() && i < series.y.size(); ++i) {
    svg << (i ? " " : "") << px(series.t[i]) << ',' << py(series.y[i]);
  }
  svg << "\"/>\n";

  svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << escape(series.title) << "</text>\n"
      << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
      << "\" text-anchor=\"middle\">t [s]</text>\n"
      << "<text x=\"18\" y=\"" << kTop + plot_h / 2
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << kTop + plot_h / 2 << ")\">"
      << escape(series.y_label) << "</text>\n"
      << "</g>\n</svg>\n";
  return svg.str();
}

std::vector<std::filesystem::path> render_plots(const std::vector<SimulationRow>& rows,
                                                const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> written;
  const char* names = "ABC";
  for (int j = 0; j < 3; ++j) {
    const std::string leg(1, names[j]);
    Series lam{"Input displacement of actuator " + leg, "lambda_" + leg + " [m]", {}, {}};
    Series pow{"Input power of actuator " + leg, "p_" + leg + " [W]", {}, {}};
    for (const auto& row : rows) {
      lam.t.push_back(row.t);
      lam.y.push_back(row.lambda(j));
      pow.t.push_back(row.t);
      pow.y.push_back(row.power(j));
    }
    for (const auto& [series, file] :
         {std::pair{&lam, "plot_lam" + leg + ".svg"}, std::pair{&pow, "plot_p" + leg + ".svg"}}) {
      const auto path = out_dir / file;
      std::ofstream out(path, std::ios::binary);
      if (!out) throw IoError("cannot write " + path.string());
      out << render_svg(*series);
      if (!out) throw IoError("write failed for " + path.string());
      written.push_back(path);
    }
  }
  return written;
}

std::vector<std::filesystem::path> render_plots(const std::filesystem::path& csv,
                                                const std::filesystem::path& out_dir) {
  return render_plots(read_csv(csv), out_dir);
}

}  // namespace orthoglide
