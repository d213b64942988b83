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

#ifndef ITZ_SVG_HPP
#define ITZ_SVG_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace itz {

/// Minimal SVG scatter/line plot. Plots are verification aids; the CSV
/// artifacts next to them carry the data.
class SvgPlot {
 public:
  enum class Style { Points, Line };

  SvgPlot(std::string title, std::string x_label, std::string y_label);

  SvgPlot& log_x(bool on = true);
  SvgPlot& log_y(bool on = true);
  SvgPlot& add(std::string name, std::vector<double> x, std::vector<double> y, Style style = Style::Points);
  /// Vertical guide line at x.
  SvgPlot& vline(double x);

  void write(std::ostream& out, const std::vector<std::string>& metadata = {}) const;

 private:
  struct Series {
    std::string name;
    std::vector<double> x, y;
    Style style;
  };
  std::string title_, x_label_, y_label_;
  bool log_x_ = false, log_y_ = false;
  std::vector<Series> series_;
  std::vector<double> vlines_;
};

}  // namespace itz

#endif  // ITZ_SVG_HPP
