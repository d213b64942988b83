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

#include "itz/fit.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "itz/error.hpp"

namespace itz {

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw Error(ErrorCode::InsufficientRange, "line fit needs >= 2 points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw Error(ErrorCode::InsufficientRange, "line fit needs distinct abscissae");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return f;
}

ScalingFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y, int min_points,
                         double min_decades) {
  if (x.size() != y.size()) throw Error(ErrorCode::InvalidArgument, "x and y differ in length");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0 && y[i] > 0.0 && std::isfinite(x[i]) && std::isfinite(y[i])) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  }
  if (static_cast<int>(lx.size()) < min_points)
    throw Error(ErrorCode::InsufficientRange,
                fmt::format("power-law fit needs >= {} usable points, got {}", min_points, lx.size()));
  const auto [lo, hi] = std::minmax_element(lx.begin(), lx.end());
  if ((*hi - *lo) / std::log(10.0) < min_decades)
    throw Error(ErrorCode::InsufficientRange, fmt::format("fit window spans less than {} decades", min_decades));
  const auto line = fit_line(lx, ly);
  ScalingFit f;
  f.exponent = line.slope;
  f.amplitude = std::exp(line.intercept);
  f.window_lo = std::exp(*lo);
  f.window_hi = std::exp(*hi);
  f.r_squared = line.r_squared;
  f.n_points = static_cast<int>(lx.size());
  return f;
}

std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  if (n == 1) return {lo};
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < n; ++i) out[i] = std::exp(a + (b - a) * i / (n - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  if (n == 1) return {lo};
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
  out.back() = hi;
  return out;
}

}  // namespace itz
