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

#ifndef ITZ_PARTITION_HPP
#define ITZ_PARTITION_HPP

#include <complex>
#include <iosfwd>
#include <vector>

#include "itz/manybody.hpp"
#include "itz/spectra.hpp"

namespace itz {

using cplx = std::complex<double>;

/// Complex temperature T' + i T. The imaginary-temperature axis is re = 0.
struct ComplexTemperature {
  double re = 0.0;
  double im = 0.0;

  cplx value() const { return {re, im}; }
  static ComplexTemperature from(cplx tau) { return {tau.real(), tau.imag()}; }
};

/// Sum of complex numbers with Neumaier compensation on both components.
class CompensatedSum {
 public:
  void add(cplx x);
  cplx value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  double re_ = 0.0, im_ = 0.0, cre_ = 0.0, cim_ = 0.0;
};

/// Z(tau) = sum_n exp(-E_n / tau). Throws TauZero for |tau| <= 1e-12.
cplx z_trace(const ManyBodySpectrum& spectrum, ComplexTemperature tau);

/// Z as a function of u = 1/tau in overflow-safe form:
///   Z(u) = exp(-shift u) * sum,   dZ/du = exp(-shift u) * dsum.
/// shift is E_min for Re u >= 0 and E_max otherwise, so every shifted weight
/// has modulus <= 1. abs_sum = sum of |shifted weights| sets the natural
/// scale of |sum|; on the imaginary axis abs_sum = D.
struct ShiftedZ {
  cplx sum;
  cplx dsum;
  double shift = 0.0;
  double abs_sum = 0.0;

  /// |Z| relative to sum_n |exp(-E_n u)|; equals |Z|/D for real-time weights.
  double relative() const { return std::abs(sum) / abs_sum; }
  cplx z(cplx u) const { return std::exp(-shift * u) * sum; }
};

/// Levels closer than the degeneracy tolerance are merged for repeated evaluation.
class PartitionEvaluator {
 public:
  explicit PartitionEvaluator(const std::vector<double>& energies, double degeneracy_tol = 1e-12);
  explicit PartitionEvaluator(const ManyBodySpectrum& spectrum) : PartitionEvaluator(spectrum.energies) {}

  ShiftedZ at_u(cplx u) const;
  /// Same with a caller-chosen shift, for sums that must stay on one branch.
  ShiftedZ at_u(cplx u, double shift) const;
  ShiftedZ at(ComplexTemperature tau) const;
  double min_level() const { return levels_.front(); }
  double max_level() const { return levels_.back(); }
  std::size_t dim() const { return dim_; }

  const std::vector<double>& levels() const { return levels_; }
  const std::vector<double>& weights() const { return degeneracy_; }

 private:
  std::vector<double> levels_;
  std::vector<double> degeneracy_;
  std::size_t dim_ = 0;
};

/// log|Z| with the sign of a real-valued product.
struct LogValue {
  double log_abs = 0.0;
  int sign = 1;

  double value() const;
};

/// 2^N prod_q cos(eps_q / T) for a TFI OBC or XX spectrum. For N > 64 the
/// product is accumulated as compensated log-magnitude plus sign.
double z_product_obc(const QuasiparticleSpectrum& spectrum, double t);
LogValue z_product_obc_log(const QuasiparticleSpectrum& spectrum, double t);

/// Four-term PBC partition function
///   2^{N-1} [prod_e cos + prod_o cos + prod_e (i sin) - prod_o (i sin)]
/// with the signed q = pi energy (see pbc_signed_energies).
cplx z_pbc(const QuasiparticleSpectrum& odd, const QuasiparticleSpectrum& even, double t);

struct ScanPoint {
  ComplexTemperature tau;
  cplx z;
  double log_abs_z = 0.0;
};

/// Z along a set of complex temperatures (points with |tau| ~ 0 are rejected).
std::vector<ScanPoint> scan(const ManyBodySpectrum& spectrum, const std::vector<ComplexTemperature>& taus);

/// Columns T_re,T_im,Z_re,Z_im,log_absZ.
void write_scan_csv(std::ostream& out, const std::vector<ScanPoint>& points,
                    const std::vector<std::string>& metadata = {});

}  // namespace itz

#endif  // ITZ_PARTITION_HPP
