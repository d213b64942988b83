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

#ifndef ITZ_OBSERVABLES_HPP
#define ITZ_OBSERVABLES_HPP

#include <iosfwd>
#include <map>
#include <vector>

#include "itz/cache.hpp"
#include "itz/fit.hpp"
#include "itz/partition.hpp"

namespace itz {

enum class Axis { X, Z };

/// M(tau) = sum_n exp(-E_n/tau) <n|S|n> / Z(tau). Throws AtPole when
/// |Z| / sum|weights| < 1e-12 and InvalidArgument without diagonals.
cplx magnetization(const ManyBodySpectrum& spectrum, ComplexTemperature tau, Axis axis);

struct MagnetizationSample {
  ComplexTemperature tau;
  cplx m;
};

struct MagnetizationCurve {
  ModelSpec model;
  Axis axis = Axis::X;
  std::vector<MagnetizationSample> samples;
  double probe_h = 0.0;
};

/// Samples at every tau that is not a pole (|Z| relative >= 1e-12).
MagnetizationCurve magnetization_curve(const ManyBodySpectrum& spectrum, const std::vector<ComplexTemperature>& taus,
                                       Axis axis);

/// Points zero +/- d * direction for d log-spaced in [lo, hi] (n per side).
std::vector<ComplexTemperature> approach_path(ComplexTemperature zero, cplx direction, double lo, double hi, int n);

/// Log-log fit of |M| against |tau - zero| over samples with distance in
/// [1e-6, 1e-2]. Throws InsufficientRange with fewer than 8 such samples.
ScalingFit fit_divergence(const MagnetizationCurve& curve, ComplexTemperature zero);

/// Zero of Z on the imaginary axis near T (Newton on the ED trace).
double refine_imaginary_zero(const ManyBodySpectrum& spectrum, double t_guess);

struct CollapseOptions {
  std::vector<int> sizes{6, 8, 10, 12};
  std::vector<double> h_rescaled = logspace(0.1, 10.0, 9);  // h N^{beta delta / nu} values
  double fixed_scaling_var = 0.1;                             // (lambda - 1) N^{1/nu}
  double nu = 1.0;
  double beta = 0.125;
  double delta = 15.0;
  const SpectrumCache* cache = nullptr;
};

/// Raw |M_z(i T-)| per chain length and probe field.
struct CollapseCurve {
  int n = 0;
  double lambda = 0.0;
  double t_eval = 0.0;
  std::vector<double> h;
  std::vector<double> mz;
};

struct CollapseResult {
  double fixed_scaling_var = 0.0;
  double beta = 0.0, delta = 0.0, nu = 0.0;
  std::map<int, std::vector<std::pair<double, double>>> curves;  // N -> (h N^{bd/nu}, |M_z| N^{b/nu})
  double collapse_residual = 0.0;
};

/// Diagonalizes the TFI OBC chain with probe field for every (N, h) and
/// evaluates |M_z| at the lower sector edge T- of lambda = 1 + x N^{-1/nu}.
std::vector<CollapseCurve> collapse_data(const CollapseOptions& options);

/// Rescales raw data with the given exponents and measures the collapse.
CollapseResult rescale_collapse(const std::vector<CollapseCurve>& data, double fixed_scaling_var, double beta,
                                double delta, double nu);

/// collapse_data followed by rescale_collapse with the option exponents.
CollapseResult mz_collapse(const CollapseOptions& options);

/// Max over a common log-spaced grid of (max_N y - min_N y) / mean_N y, with
/// monotone cubic interpolation in log x. Throws NoOverlap for disjoint ranges.
double collapse_residual(const std::vector<std::vector<std::pair<double, double>>>& curves);

/// Fritsch-Carlson monotone cubic interpolation at xq (x ascending).
double pchip(const std::vector<double>& x, const std::vector<double>& y, double xq);

/// Columns T_re,T_im,M_re,M_im.
void write_magnetization_csv(std::ostream& out, const MagnetizationCurve& curve,
                             const std::vector<std::string>& metadata = {});

/// Columns N,h,h_rescaled,Mz_rescaled.
void write_collapse_csv(std::ostream& out, const std::vector<CollapseCurve>& data, const CollapseResult& result,
                        const std::vector<std::string>& metadata = {});

}  // namespace itz

#endif  // ITZ_OBSERVABLES_HPP
