// Copyright 2026 The itz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "itz/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <fmt/format.h>

namespace itz {
namespace {

constexpr double kWidth = 640.0, kHeight = 440.0;
constexpr double kLeft = 70.0, kRight = 20.0, kTop = 40.0, kBottom = 50.0;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

SvgPlot& SvgPlot::log_x(bool on) {
  log_x_ = on;
  return *this;
}

SvgPlot& SvgPlot::log_y(bool on) {
  log_y_ = on;
  return *this;
}

SvgPlot& SvgPlot::add(std::string name, std::vector<double> x, std::vector<double> y, Style style) {
  series_.push_back({std::move(name), std::move(x), std::move(y), style});
  return *this;
}

SvgPlot& SvgPlot::vline(double x) {
  vlines_.push_back(x);
  return *this;
}

void SvgPlot::write(std::ostream& out, const std::vector<std::string>& metadata) const {
  auto tx = [this](double v) { return log_x_ ? std::log10(v) : v; };
  auto ty = [this](double v) { return log_y_ ? std::log10(v) : v; };
  auto usable = [](double v, bool log) { return std::isfinite(v) && (!log || v > 0.0); };
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : series_) {
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!usable(s.x[i], log_x_) || !usable(s.y[i], log_y_)) continue;
      x0 = std::min(x0, tx(s.x[i]));
      x1 = std::max(x1, tx(s.x[i]));
      y0 = std::min(y0, ty(s.y[i]));
      y1 = std::max(y1, ty(s.y[i]));
    }
  }
  if (!std::isfinite(x0)) x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  if (x1 == x0) x0 -= 0.5, x1 += 0.5;
  if (y1 == y0) y0 -= 0.5, y1 += 0.5;
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double v) { return kLeft + (tx(v) - x0) / (x1 - x0) * pw; };
  auto py = [&](double v) { return kTop + ph - (ty(v) - y0) / (y1 - y0) * ph; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  for (const auto& line : metadata) out << "<!-- " << escape(line) << " -->\n";
  out << fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
                     kWidth, kHeight, kWidth, kHeight);
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n", kLeft,
                     kTop, pw, ph);
  out << fmt::format("<text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n", kWidth / 2,
                     escape(title_));
  out << fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"13\">{}</text>\n", kLeft + pw / 2,
                     kHeight - 10, escape(x_label_ + (log_x_ ? " (log10)" : "")));
  out << fmt::format(
      "<text x=\"16\" y=\"{}\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 {})\">{}</text>\n",
      kTop + ph / 2, kTop + ph / 2, escape(y_label_ + (log_y_ ? " (log10)" : "")));
  for (int k = 0; k <= 4; ++k) {
    const double xv = x0 + (x1 - x0) * k / 4, yv = y0 + (y1 - y0) * k / 4;
    out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\" font-size=\"10\">{:.3g}</text>\n",
                       kLeft + pw * k / 4, kTop + ph + 14, xv);
    out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\" font-size=\"10\">{:.3g}</text>\n",
                       kLeft - 4, kTop + ph - ph * k / 4 + 3, yv);
  }
  for (double v : vlines_) {
    if (!usable(v, log_x_)) continue;
    out << fmt::format("<line x1=\"{0:.2f}\" x2=\"{0:.2f}\" y1=\"{1}\" y2=\"{2}\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n",
                       px(v), kTop, kTop + ph);
  }
  for (std::size_t k = 0; k < series_.size(); ++k) {
    const auto& s = series_[k];
    const char* color = kColors[k % std::size(kColors)];
    if (s.style == Style::Line) {
      out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" points=\"";
      for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i)
        if (usable(s.x[i], log_x_) && usable(s.y[i], log_y_)) out << fmt::format("{:.2f},{:.2f} ", px(s.x[i]), py(s.y[i]));
      out << "\"/>\n";
    } else {
      for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i)
        if (usable(s.x[i], log_x_) && usable(s.y[i], log_y_))
          out << fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2\" fill=\"{}\"/>\n", px(s.x[i]), py(s.y[i]), color);
    }
    out << fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"11\" fill=\"{}\">{}</text>\n", kLeft + pw - 150,
                       kTop + 14 + 14 * k, color, escape(s.name));
  }
  out << "</svg>\n";
}

}  // namespace itz
