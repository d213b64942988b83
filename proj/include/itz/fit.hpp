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

#ifndef ITZ_FIT_HPP
#define ITZ_FIT_HPP

#include <vector>

namespace itz {

/// y = amplitude * x^exponent from unweighted least squares in log-log space.
struct ScalingFit {
  double exponent = 0.0;
  double amplitude = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
  double r_squared = 0.0;
  int n_points = 0;
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Points with non-positive or non-finite x or y are dropped. Throws
/// InsufficientRange when fewer than min_points remain or when x spans less
/// than min_decades decades.
ScalingFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y, int min_points = 8,
                         double min_decades = 0.0);

/// n log-spaced values from lo to hi inclusive.
std::vector<double> logspace(double lo, double hi, int n);
std::vector<double> linspace(double lo, double hi, int n);

}  // namespace itz

#endif  // ITZ_FIT_HPP
