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

#ifndef ITZ_ZEROS_HPP
#define ITZ_ZEROS_HPP

#include <complex>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "itz/fit.hpp"
#include "itz/spectra.hpp"

namespace itz {

/// Positive imaginary-temperature zeros T* = 2 eps / (m pi) of one sector;
/// the T < 0 mirror is -zeros.
struct ZeroSet {
  ModelSpec model;
  int m = 1;
  std::vector<double> zeros;     // ascending
  std::vector<ModeKind> kinds;   // source mode of each zero
  double t_minus = 0.0;
  double t_plus = 0.0;
  double max_residual = 0.0;     // max |Z(T*)| / 2^N over the sector

  std::vector<double> mirror() const;
  std::vector<double> bulk_zeros() const;
};

struct SectorEdges {
  double t_minus = 0.0;
  double t_plus = 0.0;
};

/// TFI edges T(+/-) = 2 |1 +/- lambda| / (m pi).
SectorEdges sector_edges(double lambda, int m);

/// XX edges: 2 (lambda + 2) / (m pi) and 2 max(0, lambda - 2) / (m pi).
SectorEdges xx_sector_edges(double lambda, int m);

/// Sectors m = 1, 3, ..., m_max.
std::vector<ZeroSet> enumerate_itzs(const QuasiparticleSpectrum& spectrum, int m_max);

/// TFI zero density 2 N T / (pi sqrt|(T^2 - T+^2)(T^2 - T-^2)|) on [T-, T+],
/// 0 elsewhere. Throws EdgeSingularity within 1e-14 of a divergent edge.
double density_analytic(double t, double lambda, int m, int n);

/// XX zero density per mode (integrates to 1 over T > 0):
///   1 / (pi sqrt((T + a)(T+ - T))) + Theta(2 - lambda) / (pi sqrt((a - T)(T+ + T)))
/// with a = (4 - 2 lambda) / (m pi); each term vanishes outside its support.
double density_xx(double t, double lambda, int m);

/// Unit-circle embedding z = exp(i 2 pi T / w), w = 2 T+. theta is taken from
/// the smallest real-bulk zero; theta_limit is the N -> infinity value from T-.
struct CircleMap {
  double w = 0.0;
  std::vector<std::complex<double>> points;
  std::vector<std::complex<double>> isolated_points;
  double theta = 0.0;
  double theta_limit = 0.0;
};

CircleMap circle_map(const ZeroSet& zeroset);

enum class Edge { Minus, Plus };

/// Log-log fit of density samples against |T - edge|. Samples within 1e-8 of
/// the edge are dropped; needs >= 8 points spanning >= 2 decades.
ScalingFit fit_edge_exponent(const std::vector<double>& t, const std::vector<double>& rho, double edge);

/// Analytic TFI density sampled on |T - edge| log-spaced in [lo, hi] from inside.
ScalingFit fit_edge_exponent_analytic(double lambda, int m, int n, Edge edge, double lo, double hi,
                                      int samples = 64);

/// Nearest-neighbour spacing of the zeros closest to an edge.
double edge_spacing(const ZeroSet& zeroset, Edge edge);

struct SpacingScaling {
  std::map<int, double> spacing;  // N -> d(N)
  ScalingFit fit;                  // d vs N
  bool faster_than_inverse_n = false;  // d(N) * N strictly decreasing
};

/// Throws InsufficientSizes for fewer than three sizes.
SpacingScaling spacing_scaling(const std::map<int, double>& spacing_by_n);

/// Power-law fit of an edge location against the distance to the critical
/// coupling, y = A (lambda - lambda_c)^p.
ScalingFit edge_scaling_vs_lambda(const std::vector<double>& lambdas, const std::vector<double>& edge_values,
                                  double lambda_c, int min_points = 3);

/// Columns m,T_star (positive zeros).
void write_zeros_csv(std::ostream& out, const std::vector<ZeroSet>& sets, const std::vector<std::string>& metadata = {});

/// Columns lambda,T_minus,T_plus.
void write_edges_csv(std::ostream& out, const std::vector<std::pair<double, SectorEdges>>& rows,
                     const std::vector<std::string>& metadata = {});

}  // namespace itz

#endif  // ITZ_ZEROS_HPP
