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

#include "itz/sff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include <fmt/format.h>

#include "itz/complex_zeros.hpp"
#include "itz/csv.hpp"
#include "itz/error.hpp"

namespace itz {
namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Legendre nodes and weights on [-1, 1], 16 points.
constexpr double kGlX[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
                            0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
constexpr double kGlW[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
                            0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

double rho_t(double t, double lambda, int m_max, int n) {
  const double temp = 1.0 / (2.0 * kPi * t);
  double sum = 0.0;
  for (int m = 1; m <= m_max; m += 2) {
    try {
      sum += density_analytic(temp, lambda, m, n);
    } catch (const Error&) {
      // quadrature node on an edge; measure zero
    }
  }
  return sum / (2.0 * kPi * t * t);
}

double integrate_bin(double a, double b, double lambda, int m_max, int n) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 8; ++i)
    s += kGlW[i] * (rho_t(mid - half * kGlX[i], lambda, m_max, n) + rho_t(mid + half * kGlX[i], lambda, m_max, n));
  return s * half;
}

}  // namespace

double sff_value(const PartitionEvaluator& z, double t) {
  const auto s = z.at_u(cplx(0.0, 2.0 * kPi * t));
  return std::norm(s.sum) / static_cast<double>(z.dim());
}

double sff_direct(const ManyBodySpectrum& spectrum, double t) {
  double re = 0.0, im = 0.0;
  for (double e : spectrum.energies) {
    re += std::cos(2.0 * kPi * e * t);
    im -= std::sin(2.0 * kPi * e * t);
  }
  return (re * re + im * im) / static_cast<double>(spectrum.energies.size());
}

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  const int n = std::max(2, static_cast<int>(std::ceil(std::log10(hi / lo) * per_decade)) + 1);
  return logspace(lo, hi, n);
}

SffTrace sff(const ManyBodySpectrum& spectrum, const std::vector<double>& t_grid, bool find_zeros) {
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0) || (i > 0 && !(t_grid[i] > t_grid[i - 1])))
      throw Error(ErrorCode::InvalidArgument, "time grid must be positive and strictly increasing");
  }
  const PartitionEvaluator z(spectrum);
  SffTrace trace;
  trace.model = spectrum.model;
  trace.t_grid = t_grid;
  trace.k.reserve(t_grid.size());
  for (double t : t_grid) trace.k.push_back(sff_value(z, t));
  if (!find_zeros) return trace;

  // minima are located on a grid eight times finer than the output grid
  constexpr int kSub = 8;
  std::vector<double> fine, fk;
  for (std::size_t i = 0; i + 1 < t_grid.size(); ++i)
    for (int s = 0; s < kSub; ++s) fine.push_back(t_grid[i] * std::pow(t_grid[i + 1] / t_grid[i], double(s) / kSub));
  fine.push_back(t_grid.back());
  for (double t : fine) fk.push_back(sff_value(z, t));
  for (std::size_t i = 1; i + 1 < fine.size(); ++i) {
    if (!(fk[i] <= fk[i - 1] && fk[i] <= fk[i + 1])) continue;
    ComplexZero zero;
    try {
      zero = refine_zero(z, ComplexTemperature::from(1.0 / cplx(0.0, 2.0 * kPi * fine[i])), 60, 1e-13);
    } catch (const Error&) {
      continue;
    }
    const cplx tau = zero.tau.value();
    if (std::abs(tau.real()) > 1e-9 * std::abs(tau) || !(tau.imag() < 0.0)) continue;
    const double t = -1.0 / (2.0 * kPi * tau.imag());
    if (t < t_grid.front() || t > t_grid.back()) continue;
    const bool seen = std::any_of(trace.zeros_t.begin(), trace.zeros_t.end(),
                                  [t](double x) { return std::abs(x - t) <= 1e-9 * t; });
    if (!seen) trace.zeros_t.push_back(t);
  }
  std::sort(trace.zeros_t.begin(), trace.zeros_t.end());
  trace.t_s = trace.zeros_t.empty() ? 0.0 : trace.zeros_t.front();
  return trace;
}

double first_zero_timescale(const SffTrace& trace) {
  if (trace.zeros_t.empty()) throw Error(ErrorCode::NoZeroFound, "no zero of K on the time grid");
  return trace.zeros_t.front();
}

CorrespondenceReport zero_correspondence(const SffTrace& trace, const std::vector<ZeroSet>& sets, double tol,
                                         bool strict) {
  CorrespondenceReport report;
  if (trace.t_grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty trace");
  const double lo = trace.t_grid.front(), hi = trace.t_grid.back();
  std::vector<bool> used(trace.zeros_t.size(), false);
  for (const auto& set : sets) {
    for (double tz : set.zeros) {
      const double t_pred = 1.0 / (2.0 * kPi * tz);
      if (t_pred < lo || t_pred > hi) continue;
      ZeroMatch m;
      m.sector_m = set.m;
      m.t_star = t_pred;
      const auto it = std::lower_bound(trace.zeros_t.begin(), trace.zeros_t.end(), t_pred);
      double best = std::numeric_limits<double>::infinity();
      std::size_t best_i = 0;
      for (auto j : {it, it == trace.zeros_t.begin() ? it : it - 1}) {
        if (j == trace.zeros_t.end()) continue;
        const double d = std::abs(*j - t_pred);
        if (d < best) {
          best = d;
          best_i = static_cast<std::size_t>(j - trace.zeros_t.begin());
        }
      }
      if (std::isfinite(best)) {
        m.t_sff = trace.zeros_t[best_i];
        m.mismatch = best;
      } else {
        m.mismatch = best;
      }
      if (best <= tol) {
        used[best_i] = true;
        report.matches.push_back(m);
        report.max_mismatch = std::max(report.max_mismatch, best);
      } else {
        report.unmatched.push_back(m);
      }
    }
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) report.unattributed_sff.push_back(trace.zeros_t[i]);
  report.pass = report.unmatched.empty() && !report.matches.empty();
  if (strict && !report.pass)
    throw Error(ErrorCode::UnmatchedZero, fmt::format("{} ITZs have no matching zero of K", report.unmatched.size()));
  return report;
}

DensityHistogram zero_density_t(const QuasiparticleSpectrum& spectrum, double t_lo, double t_hi, int bins) {
  if (spectrum.model.family != Family::TfiObc) throw Error(ErrorCode::InvalidArgument, "zero density needs tfi-obc");
  if (!(t_hi > t_lo) || !(t_lo > 0.0) || bins < 1) throw Error(ErrorCode::InvalidArgument, "bad histogram window");
  const double lambda = spectrum.model.lambda;
  const int n = spectrum.model.n;
  const double t_s = 1.0 / (4.0 * (1.0 + lambda));
  int m_max = static_cast<int>(std::ceil(t_hi / t_s)) + 1;
  if (m_max % 2 == 0) ++m_max;

  DensityHistogram h;
  h.lambda = lambda;
  h.edges = linspace(t_lo, t_hi, bins + 1);
  h.counts.assign(bins, 0.0);
  h.expected.assign(bins, 0.0);
  h.singular.assign(bins, false);
  const double width = (t_hi - t_lo) / bins;
  auto bin_of = [&](double t) { return static_cast<int>(std::floor((t - t_lo) / width)); };

  for (const auto& set : enumerate_itzs(spectrum, m_max)) {
    for (double tz : set.zeros) {
      const double t = 1.0 / (2.0 * kPi * tz);
      const int b = bin_of(t);
      if (t >= t_lo && t < t_hi && b >= 0 && b < bins) h.counts[b] += 1.0;
    }
  }
  for (int m = 1; m <= m_max; m += 2) {
    h.plus_singularities.push_back(m * t_s);
    if (lambda != 1.0) h.minus_singularities.push_back(m / (4.0 * std::abs(lambda - 1.0)));
  }
  for (const auto* list : {&h.plus_singularities, &h.minus_singularities}) {
    for (double s : *list) {
      const int b = bin_of(s);
      for (int d = -1; d <= 1; ++d)
        if (b + d >= 0 && b + d < bins) h.singular[b + d] = true;
    }
  }
  double chi2 = 0.0;
  int used = 0;
  for (int b = 0; b < bins; ++b) {
    h.expected[b] = integrate_bin(h.edges[b], h.edges[b + 1], lambda, m_max, n);
    if (h.singular[b] || (h.expected[b] <= 0.0 && h.counts[b] == 0.0)) continue;
    const double diff = h.counts[b] - h.expected[b];
    chi2 += diff * diff / std::max(h.expected[b], 1e-12);
    ++used;
  }
  h.chi2_per_bin = used > 0 ? chi2 / used : 0.0;
  for (int b = 1; b + 1 < bins; ++b) {
    const double c = h.counts[b], rise = c - h.counts[b - 1];
    if (c >= h.counts[b + 1] && rise >= std::max(3.0, 0.1 * c)) h.features.push_back(0.5 * (h.edges[b] + h.edges[b + 1]));
    const double drop = c - h.counts[b + 1];
    if (drop >= std::max(5.0, 0.3 * c)) h.features.push_back(h.edges[b + 1]);
  }
  std::sort(h.features.begin(), h.features.end());
  return h;
}

void write_sff_csv(std::ostream& out, const SffTrace& trace, const std::vector<std::string>& metadata) {
  write_csv_header(out, {"t", "K"}, metadata);
  for (std::size_t i = 0; i < trace.t_grid.size(); ++i)
    out << format_real(trace.t_grid[i]) << ',' << format_real(trace.k[i]) << '\n';
}

void write_sff_zeros_csv(std::ostream& out, const CorrespondenceReport& report,
                         const std::vector<std::string>& metadata) {
  write_csv_header(out, {"t_star", "sector_m", "T_star"}, metadata);
  for (const auto& m : report.matches)
    out << format_real(m.t_sff) << ',' << m.sector_m << ',' << format_real(1.0 / (2.0 * kPi * m.t_star)) << '\n';
}

void write_histogram_csv(std::ostream& out, const DensityHistogram& hist, const std::vector<std::string>& metadata) {
  write_csv_header(out, {"t_lo", "t_hi", "count", "expected", "singular"}, metadata);
  for (std::size_t b = 0; b < hist.counts.size(); ++b)
    out << format_real(hist.edges[b]) << ',' << format_real(hist.edges[b + 1]) << ','
        << static_cast<long>(hist.counts[b]) << ',' << format_real(hist.expected[b]) << ','
        << (hist.singular[b] ? 1 : 0) << '\n';
}

}  // namespace itz
