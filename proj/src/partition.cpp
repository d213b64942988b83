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

#include "itz/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include <fmt/format.h>

#include "itz/csv.hpp"
#include "itz/error.hpp"

namespace itz {
namespace {

void neumaier(double& sum, double& comp, double x) {
  const double t = sum + x;
  if (std::abs(sum) >= std::abs(x)) {
    comp += (sum - t) + x;
  } else {
    comp += (x - t) + sum;
  }
  sum = t;
}

cplx inverse_temperature(ComplexTemperature tau) {
  const cplx t = tau.value();
  if (std::abs(t) <= 1e-12) throw Error(ErrorCode::TauZero, "complex temperature too close to 0");
  return 1.0 / t;
}

void check_t(double t) {
  if (t == 0.0 || !std::isfinite(t)) throw Error(ErrorCode::TZero, "temperature must be finite and nonzero");
}

}  // namespace

void CompensatedSum::add(cplx x) {
  neumaier(re_, cre_, x.real());
  neumaier(im_, cim_, x.imag());
}

cplx z_trace(const ManyBodySpectrum& spectrum, ComplexTemperature tau) {
  const cplx u = inverse_temperature(tau);
  if (spectrum.energies.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(spectrum.energies.begin(), spectrum.energies.end());
  const double shift = u.real() >= 0.0 ? *lo : *hi;
  CompensatedSum acc;
  for (double e : spectrum.energies) acc.add(std::exp(-(e - shift) * u));
  return std::exp(-shift * u) * acc.value();
}

PartitionEvaluator::PartitionEvaluator(const std::vector<double>& energies, double degeneracy_tol)
    : dim_(energies.size()) {
  std::vector<double> e = energies;
  std::sort(e.begin(), e.end());
  for (double x : e) {
    if (!levels_.empty() && std::abs(x - levels_.back()) <= degeneracy_tol * std::max(1.0, std::abs(x))) {
      degeneracy_.back() += 1.0;
    } else {
      levels_.push_back(x);
      degeneracy_.push_back(1.0);
    }
  }
}

ShiftedZ PartitionEvaluator::at_u(cplx u) const {
  if (levels_.empty()) return {};
  return at_u(u, u.real() >= 0.0 ? levels_.front() : levels_.back());
}

ShiftedZ PartitionEvaluator::at_u(cplx u, double shift) const {
  ShiftedZ out;
  if (levels_.empty()) return out;
  out.shift = shift;
  CompensatedSum s, ds;
  double abs_sum = 0.0;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const cplx w = degeneracy_[i] * std::exp(-(levels_[i] - out.shift) * u);
    s.add(w);
    ds.add(-levels_[i] * w);
    abs_sum += std::abs(w);
  }
  out.sum = s.value();
  out.dsum = ds.value();
  out.abs_sum = abs_sum;
  return out;
}

ShiftedZ PartitionEvaluator::at(ComplexTemperature tau) const { return at_u(inverse_temperature(tau)); }

double LogValue::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

LogValue z_product_obc_log(const QuasiparticleSpectrum& spectrum, double t) {
  check_t(t);
  if (spectrum.model.family != Family::TfiObc && spectrum.model.family != Family::XxObc)
    throw Error(ErrorCode::InvalidArgument, "product form needs a TFI OBC or XX spectrum");
  LogValue out;
  double sum = 0.0, comp = 0.0;
  neumaier(sum, comp, spectrum.modes.size() * std::numbers::ln2);
  for (const auto& m : spectrum.modes) {
    const double c = std::cos(m.epsilon / t);
    if (c == 0.0) {
      out.sign = 0;
      out.log_abs = -std::numeric_limits<double>::infinity();
      return out;
    }
    if (c < 0.0) out.sign = -out.sign;
    neumaier(sum, comp, std::log(std::abs(c)));
  }
  out.log_abs = sum + comp;
  return out;
}

double z_product_obc(const QuasiparticleSpectrum& spectrum, double t) {
  if (spectrum.modes.size() > 64) return z_product_obc_log(spectrum, t).value();
  check_t(t);
  if (spectrum.model.family != Family::TfiObc && spectrum.model.family != Family::XxObc)
    throw Error(ErrorCode::InvalidArgument, "product form needs a TFI OBC or XX spectrum");
  double z = std::ldexp(1.0, static_cast<int>(spectrum.modes.size()));
  for (const auto& m : spectrum.modes) z *= std::cos(m.epsilon / t);
  return z;
}

cplx z_pbc(const QuasiparticleSpectrum& odd, const QuasiparticleSpectrum& even, double t) {
  check_t(t);
  if (odd.channel != Channel::Odd || even.channel != Channel::Even || odd.model.n != even.model.n ||
      odd.model.lambda != even.model.lambda || odd.model.family != Family::TfiPbc ||
      even.model.family != Family::TfiPbc)
    throw Error(ErrorCode::ChannelMismatch, "z_pbc needs the odd and even channels of one PBC chain");
  const int n = odd.model.n;
  const auto eo = pbc_signed_energies(odd);
  const auto ee = pbc_signed_energies(even);
  double ce = 1.0, co = 1.0, se = 1.0, so = 1.0;
  for (int k = 0; k < n; ++k) {
    ce *= std::cos(ee[k] / t);
    co *= std::cos(eo[k] / t);
    se *= std::sin(ee[k] / t);
    so *= std::sin(eo[k] / t);
  }
  static const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx in = kIPow[n % 4];
  return std::ldexp(1.0, n - 1) * (cplx(ce + co) + in * (se - so));
}

std::vector<ScanPoint> scan(const ManyBodySpectrum& spectrum, const std::vector<ComplexTemperature>& taus) {
  PartitionEvaluator ev(spectrum);
  std::vector<ScanPoint> out;
  out.reserve(taus.size());
  for (const auto& tau : taus) {
    const cplx u = inverse_temperature(tau);
    const auto s = ev.at_u(u);
    ScanPoint p;
    p.tau = tau;
    p.z = s.z(u);
    p.log_abs_z = std::log(std::abs(s.sum)) - s.shift * u.real();
    out.push_back(p);
  }
  return out;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanPoint>& points, const std::vector<std::string>& metadata) {
  write_csv_header(out, {"T_re", "T_im", "Z_re", "Z_im", "log_absZ"}, metadata);
  for (const auto& p : points) {
    out << format_real(p.tau.re) << ',' << format_real(p.tau.im) << ',' << format_real(p.z.real()) << ','
        << format_real(p.z.imag()) << ',' << format_real(p.log_abs_z) << '\n';
  }
}

}  // namespace itz
