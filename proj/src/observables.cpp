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

#include "itz/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include <fmt/format.h>

#include "itz/complex_zeros.hpp"
#include "itz/csv.hpp"
#include "itz/error.hpp"
#include "itz/zeros.hpp"

namespace itz {
namespace {

constexpr double kPoleThreshold = 1e-12;

struct Weighted {
  cplx z;
  cplx numerator;
  double abs_sum = 0.0;
};

Weighted weighted_sums(const ManyBodySpectrum& spectrum, cplx u, const std::vector<double>& diag) {
  const auto [lo, hi] = std::minmax_element(spectrum.energies.begin(), spectrum.energies.end());
  const double shift = u.real() >= 0.0 ? *lo : *hi;
  CompensatedSum z, num;
  double abs_sum = 0.0;
  for (std::size_t n = 0; n < spectrum.energies.size(); ++n) {
    const cplx w = std::exp(-(spectrum.energies[n] - shift) * u);
    z.add(w);
    num.add(w * diag[n]);
    abs_sum += std::abs(w);
  }
  return {z.value(), num.value(), abs_sum};
}

}  // namespace

cplx magnetization(const ManyBodySpectrum& spectrum, ComplexTemperature tau, Axis axis) {
  if (!spectrum.has_diagonals()) throw Error(ErrorCode::InvalidArgument, "magnetization needs diagonal expectations");
  const cplx t = tau.value();
  if (std::abs(t) <= 1e-12) throw Error(ErrorCode::TauZero, "complex temperature too close to 0");
  const auto s = weighted_sums(spectrum, 1.0 / t, axis == Axis::X ? spectrum.diag_sx : spectrum.diag_sz);
  if (std::abs(s.z) < kPoleThreshold * s.abs_sum)
    throw Error(ErrorCode::AtPole, fmt::format("Z vanishes at tau = {}{:+}i", tau.re, tau.im));
  return s.numerator / s.z;
}

MagnetizationCurve magnetization_curve(const ManyBodySpectrum& spectrum, const std::vector<ComplexTemperature>& taus,
                                       Axis axis) {
  MagnetizationCurve curve;
  curve.model = spectrum.model;
  curve.axis = axis;
  curve.probe_h = spectrum.model.probe_h;
  for (const auto& tau : taus) {
    try {
      curve.samples.push_back({tau, magnetization(spectrum, tau, axis)});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::AtPole) throw;
    }
  }
  return curve;
}

std::vector<ComplexTemperature> approach_path(ComplexTemperature zero, cplx direction, double lo, double hi, int n) {
  const cplx dir = direction / std::abs(direction);
  std::vector<ComplexTemperature> out;
  for (double d : logspace(lo, hi, n)) {
    out.push_back(ComplexTemperature::from(zero.value() - d * dir));
    out.push_back(ComplexTemperature::from(zero.value() + d * dir));
  }
  return out;
}

ScalingFit fit_divergence(const MagnetizationCurve& curve, ComplexTemperature zero) {
  std::vector<double> d, m;
  for (const auto& s : curve.samples) {
    const double dist = std::abs(s.tau.value() - zero.value());
    if (dist < 1e-6 * (1.0 - 1e-12) || dist > 1e-2 * (1.0 + 1e-12)) continue;
    d.push_back(dist);
    m.push_back(std::abs(s.m));
  }
  return fit_power_law(d, m, 8, 0.0);
}

double refine_imaginary_zero(const ManyBodySpectrum& spectrum, double t_guess) {
  const auto zero = refine_zero(PartitionEvaluator(spectrum), {0.0, t_guess}, 60, 1e-13);
  return zero.tau.im;
}

double pchip(const std::vector<double>& x, const std::vector<double>& y, double xq) {
  const std::size_t n = x.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "interpolation needs data");
  if (n == 1 || xq <= x.front()) return y.front();
  if (xq >= x.back()) return y.back();
  std::vector<double> h(n - 1), delta(n - 1), slope(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x[i + 1] - x[i];
    delta[i] = (y[i + 1] - y[i]) / h[i];
  }
  if (n == 2) {
    slope[0] = slope[1] = delta[0];
  } else {
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (delta[i - 1] * delta[i] <= 0.0) continue;
      const double w1 = 2.0 * h[i] + h[i - 1], w2 = h[i] + 2.0 * h[i - 1];
      slope[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
    auto end_slope = [](double h0, double h1, double d0, double d1) {
      double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
      if (s * d0 <= 0.0) return 0.0;
      if (d0 * d1 <= 0.0 && std::abs(s) > 3.0 * std::abs(d0)) return 3.0 * d0;
      return s;
    };
    slope[0] = end_slope(h[0], h[1], delta[0], delta[1]);
    slope[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  }
  const auto it = std::upper_bound(x.begin(), x.end(), xq);
  const std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
  const double t = (xq - x[i]) / h[i];
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * y[i] + (t3 - 2 * t2 + t) * h[i] * slope[i] + (-2 * t3 + 3 * t2) * y[i + 1] +
         (t3 - t2) * h[i] * slope[i + 1];
}

double collapse_residual(const std::vector<std::vector<std::pair<double, double>>>& curves) {
  if (curves.size() < 2) throw Error(ErrorCode::NoOverlap, "collapse needs at least two curves");
  double lo = -std::numeric_limits<double>::infinity(), hi = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> xs, ys;
  for (const auto& c : curves) {
    std::vector<std::pair<double, double>> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> x, y;
    for (const auto& [a, b] : sorted) {
      if (!(a > 0.0)) continue;
      x.push_back(std::log(a));
      y.push_back(b);
    }
    if (x.size() < 2) throw Error(ErrorCode::NoOverlap, "collapse curve has fewer than two points");
    lo = std::max(lo, x.front());
    hi = std::min(hi, x.back());
    xs.push_back(std::move(x));
    ys.push_back(std::move(y));
  }
  if (!(hi > lo)) throw Error(ErrorCode::NoOverlap, "rescaled ranges do not intersect");
  double worst = 0.0;
  constexpr int kGrid = 64;
  for (int k = 0; k < kGrid; ++k) {
    const double xq = lo + (hi - lo) * k / (kGrid - 1);
    double mn = std::numeric_limits<double>::infinity(), mx = -mn, mean = 0.0;
    for (std::size_t c = 0; c < xs.size(); ++c) {
      const double v = pchip(xs[c], ys[c], xq);
      mn = std::min(mn, v);
      mx = std::max(mx, v);
      mean += std::abs(v);
    }
    mean /= static_cast<double>(xs.size());
    if (mean > 0.0) worst = std::max(worst, (mx - mn) / mean);
  }
  return worst;
}

std::vector<CollapseCurve> collapse_data(const CollapseOptions& options) {
  if (options.sizes.empty() || options.h_rescaled.empty())
    throw Error(ErrorCode::InvalidArgument, "collapse needs sizes and fields");
  const double bd_nu = options.beta * options.delta / options.nu;
  std::vector<CollapseCurve> out;
  for (int n : options.sizes) {
    CollapseCurve curve;
    curve.n = n;
    curve.lambda = 1.0 + options.fixed_scaling_var * std::pow(static_cast<double>(n), -1.0 / options.nu);
    curve.t_eval = sector_edges(curve.lambda, 1).t_minus;
    for (double hr : options.h_rescaled) {
      const double h = hr / std::pow(static_cast<double>(n), bd_nu);
      ModelSpec model{Family::TfiObc, n, curve.lambda, h};
      const auto spectrum = cached_exact_spectrum(model, true, options.cache);
      double t = curve.t_eval;
      cplx m;
      try {
        m = magnetization(spectrum, {0.0, t}, Axis::Z);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::AtPole) throw;
        m = magnetization(spectrum, {0.0, t + 1e-6}, Axis::Z);
      }
      curve.h.push_back(h);
      curve.mz.push_back(std::abs(m));
    }
    out.push_back(std::move(curve));
  }
  return out;
}

CollapseResult rescale_collapse(const std::vector<CollapseCurve>& data, double fixed_scaling_var, double beta,
                                double delta, double nu) {
  CollapseResult r;
  r.fixed_scaling_var = fixed_scaling_var;
  r.beta = beta;
  r.delta = delta;
  r.nu = nu;
  std::vector<std::vector<std::pair<double, double>>> curves;
  for (const auto& c : data) {
    const double n = c.n;
    std::vector<std::pair<double, double>> pts;
    for (std::size_t k = 0; k < c.h.size(); ++k)
      pts.emplace_back(c.h[k] * std::pow(n, beta * delta / nu), c.mz[k] * std::pow(n, beta / nu));
    r.curves[c.n] = pts;
    curves.push_back(std::move(pts));
  }
  r.collapse_residual = collapse_residual(curves);
  return r;
}

CollapseResult mz_collapse(const CollapseOptions& options) {
  return rescale_collapse(collapse_data(options), options.fixed_scaling_var, options.beta, options.delta, options.nu);
}

void write_magnetization_csv(std::ostream& out, const MagnetizationCurve& curve,
                             const std::vector<std::string>& metadata) {
  write_csv_header(out, {"T_re", "T_im", "M_re", "M_im"}, metadata);
  for (const auto& s : curve.samples)
    out << format_real(s.tau.re) << ',' << format_real(s.tau.im) << ',' << format_real(s.m.real()) << ','
        << format_real(s.m.imag()) << '\n';
}

void write_collapse_csv(std::ostream& out, const std::vector<CollapseCurve>& data, const CollapseResult& result,
                        const std::vector<std::string>& metadata) {
  write_csv_header(out, {"N", "h", "h_rescaled", "Mz_rescaled"}, metadata);
  for (const auto& c : data) {
    const auto& pts = result.curves.at(c.n);
    for (std::size_t k = 0; k < c.h.size(); ++k)
      out << c.n << ',' << format_real(c.h[k]) << ',' << format_real(pts[k].first) << ','
          << format_real(pts[k].second) << '\n';
  }
}

}  // namespace itz
