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

#ifndef ITZ_SFF_HPP
#define ITZ_SFF_HPP

#include <iosfwd>
#include <vector>

#include "itz/partition.hpp"
#include "itz/zeros.hpp"

namespace itz {

/// K(t) = |sum_n exp(-i 2 pi E_n t)|^2 / D on a time grid, with the zeros of
/// K refined to the imaginary-temperature axis.
struct SffTrace {
  ModelSpec model;
  std::vector<double> t_grid;
  std::vector<double> k;
  std::vector<double> zeros_t;  // ascending
  double t_s = 0.0;             // first zero, 0 if none
};

/// K at one time via the shifted partition sum.
double sff_value(const PartitionEvaluator& z, double t);

/// K by a plain phase sum, used as a cross-check.
double sff_direct(const ManyBodySpectrum& spectrum, double t);

/// Grid minima of K are polished by Newton on Z in the complex u-plane and
/// kept when the converged root lies on the axis (|Re tau| < 1e-9 |tau|).
SffTrace sff(const ManyBodySpectrum& spectrum, const std::vector<double>& t_grid, bool find_zeros = true);

/// First refined zero of K. Throws NoZeroFound when the trace has none.
double first_zero_timescale(const SffTrace& trace);

/// Log grid on [lo, hi] with a given density of points per decade.
std::vector<double> log_grid(double lo, double hi, int per_decade);

struct ZeroMatch {
  int sector_m = 0;
  double t_star = 0.0;  // predicted 1 / (2 pi T*)
  double t_sff = 0.0;   // nearest refined zero of K
  double mismatch = 0.0;
};

struct CorrespondenceReport {
  std::vector<ZeroMatch> matches;
  std::vector<ZeroMatch> unmatched;      // predicted but missing or too far
  std::vector<double> unattributed_sff;  // zeros of K with no ITZ in the given sectors
  double max_mismatch = 0.0;
  bool pass = false;
};

/// Maps every ITZ whose t* lies inside the trace window onto its nearest
/// zero of K. With strict = true a failure throws UnmatchedZero.
CorrespondenceReport zero_correspondence(const SffTrace& trace, const std::vector<ZeroSet>& sets, double tol = 1e-10,
                                         bool strict = false);

/// Histogram of t* = 1 / (2 pi T*) over all sectors intersecting the window,
/// with the analytic overlay sum_m rho(T; m) |dT/dt| integrated per bin.
struct DensityHistogram {
  double lambda = 0.0;
  std::vector<double> edges;
  std::vector<double> counts;
  std::vector<double> expected;
  std::vector<bool> singular;          // bin holds or neighbours a density singularity
  std::vector<double> plus_singularities;   // m t_s
  std::vector<double> minus_singularities;  // m / (4 |lambda - 1|)
  std::vector<double> features;        // peak centres and steep drops in the counts
  double chi2_per_bin = 0.0;           // over non-singular bins
};

DensityHistogram zero_density_t(const QuasiparticleSpectrum& spectrum, double t_lo, double t_hi, int bins);

/// Columns t,K.
void write_sff_csv(std::ostream& out, const SffTrace& trace, const std::vector<std::string>& metadata = {});

/// Columns t_star,sector_m,T_star.
void write_sff_zeros_csv(std::ostream& out, const CorrespondenceReport& report,
                         const std::vector<std::string>& metadata = {});

/// Columns t_lo,t_hi,count,expected,singular.
void write_histogram_csv(std::ostream& out, const DensityHistogram& hist, const std::vector<std::string>& metadata = {});

}  // namespace itz

#endif  // ITZ_SFF_HPP
