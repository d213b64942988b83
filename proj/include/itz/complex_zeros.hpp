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

#ifndef ITZ_COMPLEX_ZEROS_HPP
#define ITZ_COMPLEX_ZEROS_HPP

#include <iosfwd>
#include <vector>

#include "itz/partition.hpp"

namespace itz {

struct ComplexZero {
  ComplexTemperature tau;
  double newton_residual = 0.0;  // |Z| / sum_n |exp(-E_n / tau)| at tau
  int winding_certificate = 0;   // winding number of the enclosing cell
};

/// Axis-aligned rectangle in the complex-temperature plane.
struct Region {
  double re_lo = 0.0;
  double re_hi = 0.0;
  double im_lo = 0.0;
  double im_hi = 0.0;
};

struct SearchOptions {
  int grid = 32;                 // cells per side
  int samples_per_side = 64;     // initial phase samples per cell edge
  int max_nudges = 12;           // grid shifts allowed when a zero sits on a gridline
  int max_subdivision = 6;       // 2x2 refinement depth for cells with winding > 1
  int newton_max_iter = 50;
  double target_residual = 1e-10;
  double ambiguity = 1e-9;       // |Z| relative threshold on a cell boundary
  bool add_conjugates = true;
};

/// Argument-principle search: winding numbers of Z on grid cells, then
/// Newton refinement in u = 1/tau with backtracking. Zeros are returned
/// sorted by descending |tau|, with conjugate partners when requested.
/// Throws WindingAmbiguous when nudging the grid does not clear the
/// boundaries of zeros.
std::vector<ComplexZero> complex_zero_search(const PartitionEvaluator& z, const Region& region,
                                             const SearchOptions& options = {});
std::vector<ComplexZero> complex_zero_search(const ManyBodySpectrum& spectrum, const Region& region,
                                             const SearchOptions& options = {});

/// Newton iteration on Z in u = 1/tau from a starting temperature. Throws
/// NoZeroFound when the residual target is not reached.
ComplexZero refine_zero(const PartitionEvaluator& z, ComplexTemperature start, int max_iter = 50,
                        double target = 1e-10);

/// Winding number of Z around a rectangle (adaptive phase unwrapping).
int winding_number(const PartitionEvaluator& z, const Region& cell, int samples_per_side = 64,
                   double ambiguity = 1e-9);

/// Zero of the lowest-lying line. Starts from the zero of the two lowest
/// levels, tau0 = Delta / (ln(g1/g0) - i pi), and follows it by Newton
/// continuation while the remaining levels are switched on.
struct LowestZeroTrack {
  ComplexZero zero;
  ComplexTemperature seed;
  int steps = 0;
};
LowestZeroTrack track_lowest_zero(const ManyBodySpectrum& spectrum, double degeneracy_tol = 1e-8);

/// First zero sector of a Potts-type spectrum: the lowest-line zero together
/// with every zero of larger |tau| in the upper half plane, ordered by
/// descending |tau|. d_plus is the spacing of the two outermost zeros and
/// d_minus that of the two innermost.
struct FirstSector {
  std::vector<ComplexZero> zeros;
  ComplexZero lowest;
  double d_plus = 0.0;
  double d_minus = 0.0;
};
FirstSector first_sector(const ManyBodySpectrum& spectrum, const SearchOptions& options = {});

/// Columns T_re,T_im,residual,winding.
void write_complex_zeros_csv(std::ostream& out, const std::vector<ComplexZero>& zeros,
                             const std::vector<std::string>& metadata = {});

}  // namespace itz

#endif  // ITZ_COMPLEX_ZEROS_HPP
