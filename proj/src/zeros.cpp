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

#include "itz/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <ostream>

#include <fmt/format.h>

#include "itz/csv.hpp"
#include "itz/error.hpp"
#include "itz/partition.hpp"

namespace itz {
namespace {

constexpr double kPi = std::numbers::pi;

void check_sector(int m) {
  if (m < 1 || m % 2 == 0) throw Error(ErrorCode::InvalidArgument, fmt::format("sector m must be odd and >= 1, got {}", m));
}

}  // namespace

std::vector<double> ZeroSet::mirror() const {
  std::vector<double> out(zeros.rbegin(), zeros.rend());
  for (double& z : out) z = -z;
  return out;
}

std::vector<double> ZeroSet::bulk_zeros() const {
  std::vector<double> out;
  for (std::size_t i = 0; i < zeros.size(); ++i)
    if (kinds[i] == ModeKind::RealBulk) out.push_back(zeros[i]);
  return out;
}

SectorEdges sector_edges(double lambda, int m) {
  check_sector(m);
  return {2.0 * std::abs(1.0 - lambda) / (m * kPi), 2.0 * std::abs(1.0 + lambda) / (m * kPi)};
}

SectorEdges xx_sector_edges(double lambda, int m) {
  check_sector(m);
  return {2.0 * std::max(0.0, lambda - 2.0) / (m * kPi), 2.0 * (lambda + 2.0) / (m * kPi)};
}

std::vector<ZeroSet> enumerate_itzs(const QuasiparticleSpectrum& spectrum, int m_max) {
  check_sector(m_max);
  const auto family = spectrum.model.family;
  if (family != Family::TfiObc && family != Family::XxObc)
    throw Error(ErrorCode::InvalidArgument, "zero enumeration needs a TFI OBC or XX spectrum");
  std::vector<std::size_t> order(spectrum.modes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return spectrum.modes[a].epsilon < spectrum.modes[b].epsilon; });
  const double log_dim = spectrum.modes.size() * std::numbers::ln2;

  std::vector<ZeroSet> out;
  for (int m = 1; m <= m_max; m += 2) {
    ZeroSet set;
    set.model = spectrum.model;
    set.m = m;
    const auto edges = family == Family::XxObc ? xx_sector_edges(spectrum.model.lambda, m)
                                               : sector_edges(spectrum.model.lambda, m);
    set.t_minus = edges.t_minus;
    set.t_plus = edges.t_plus;
    for (std::size_t i : order) {
      const auto& mode = spectrum.modes[i];
      if (!(mode.epsilon > 0.0)) continue;
      const double t = 2.0 * mode.epsilon / (m * kPi);
      set.zeros.push_back(t);
      set.kinds.push_back(mode.kind);
      const auto z = z_product_obc_log(spectrum, t);
      const double rel = z.sign == 0 ? 0.0 : std::exp(z.log_abs - log_dim);
      set.max_residual = std::max(set.max_residual, rel);
    }
    out.push_back(std::move(set));
  }
  return out;
}

double density_analytic(double t, double lambda, int m, int n) {
  const auto e = sector_edges(lambda, m);
  if (t < e.t_minus || t > e.t_plus) return 0.0;
  if (std::abs(t - e.t_plus) < 1e-14 || (e.t_minus > 0.0 && std::abs(t - e.t_minus) < 1e-14))
    throw Error(ErrorCode::EdgeSingularity, fmt::format("T={} sits on a sector edge", t));
  const double upper = e.t_plus * e.t_plus - t * t;
  if (e.t_minus == 0.0) return 2.0 * n / (kPi * std::sqrt(upper));
  const double lower = t * t - e.t_minus * e.t_minus;
  return 2.0 * n * t / (kPi * std::sqrt(std::abs(upper * lower)));
}

double density_xx(double t, double lambda, int m) {
  check_sector(m);
  if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "density_xx needs T > 0");
  const double a = (4.0 - 2.0 * lambda) / (m * kPi);
  const double tp = 2.0 * (lambda + 2.0) / (m * kPi);
  auto near = [t](double edge) { return std::abs(t - edge) < 1e-14; };
  double rho = 0.0;
  if (t > -a && t < tp) {
    if (near(tp) || near(-a)) throw Error(ErrorCode::EdgeSingularity, fmt::format("T={} sits on a sector edge", t));
    rho += 1.0 / (kPi * std::sqrt((t + a) * (tp - t)));
  } else if (near(tp) || near(-a)) {
    throw Error(ErrorCode::EdgeSingularity, fmt::format("T={} sits on a sector edge", t));
  }
  if (lambda < 2.0 && t < a) {
    if (near(a)) throw Error(ErrorCode::EdgeSingularity, fmt::format("T={} sits on a sector edge", t));
    rho += 1.0 / (kPi * std::sqrt((a - t) * (tp + t)));
  }
  return rho;
}

CircleMap circle_map(const ZeroSet& zeroset) {
  if (zeroset.zeros.empty()) throw Error(ErrorCode::InvalidArgument, "circle map needs a nonempty zero set");
  CircleMap out;
  out.w = 2.0 * zeroset.t_plus;
  double t_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < zeroset.zeros.size(); ++i) {
    const double t = zeroset.zeros[i];
    const auto z = std::polar(1.0, 2.0 * kPi * t / out.w);
    if (zeroset.kinds[i] == ModeKind::RealBulk) {
      out.points.push_back(z);
      t_min = std::min(t_min, t);
    } else {
      out.isolated_points.push_back(z);
    }
  }
  out.theta = std::isfinite(t_min) ? 2.0 * kPi * t_min / out.w : kPi;
  out.theta_limit = 2.0 * kPi * zeroset.t_minus / out.w;
  return out;
}

ScalingFit fit_edge_exponent(const std::vector<double>& t, const std::vector<double>& rho, double edge) {
  if (t.size() != rho.size()) throw Error(ErrorCode::InvalidArgument, "T and rho differ in length");
  std::vector<double> d, r;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double dist = std::abs(t[i] - edge);
    if (dist < 1e-8) continue;
    d.push_back(dist);
    r.push_back(rho[i]);
  }
  return fit_power_law(d, r, 8, 2.0);
}

ScalingFit fit_edge_exponent_analytic(double lambda, int m, int n, Edge edge, double lo, double hi, int samples) {
  const auto e = sector_edges(lambda, m);
  const double at = edge == Edge::Plus ? e.t_plus : e.t_minus;
  std::vector<double> t, rho;
  for (double d : logspace(lo, hi, samples)) {
    const double x = edge == Edge::Plus ? at - d : at + d;
    t.push_back(x);
    rho.push_back(density_analytic(x, lambda, m, n));
  }
  return fit_edge_exponent(t, rho, at);
}

double edge_spacing(const ZeroSet& zeroset, Edge edge) {
  const auto bulk = zeroset.bulk_zeros();
  if (bulk.size() < 2) throw Error(ErrorCode::InsufficientRange, "edge spacing needs two bulk zeros");
  return edge == Edge::Plus ? bulk[bulk.size() - 1] - bulk[bulk.size() - 2] : bulk[1] - bulk[0];
}

SpacingScaling spacing_scaling(const std::map<int, double>& spacing_by_n) {
  if (spacing_by_n.size() < 3) throw Error(ErrorCode::InsufficientSizes, "spacing scaling needs >= 3 sizes");
  SpacingScaling out;
  out.spacing = spacing_by_n;
  std::vector<double> ns, ds;
  out.faster_than_inverse_n = true;
  double prev = std::numeric_limits<double>::infinity();
  for (const auto& [n, d] : spacing_by_n) {
    ns.push_back(n);
    ds.push_back(d);
    if (!(d * n < prev)) out.faster_than_inverse_n = false;
    prev = d * n;
  }
  out.fit = fit_power_law(ns, ds, 3);
  return out;
}

ScalingFit edge_scaling_vs_lambda(const std::vector<double>& lambdas, const std::vector<double>& edge_values,
                                  double lambda_c, int min_points) {
  if (lambdas.size() != edge_values.size()) throw Error(ErrorCode::InvalidArgument, "grid and values differ in length");
  std::vector<double> x;
  for (double l : lambdas) {
    if (!(l > lambda_c)) throw Error(ErrorCode::InsufficientRange, "lambda grid must lie above the critical point");
    x.push_back(l - lambda_c);
  }
  return fit_power_law(x, edge_values, min_points);
}

void write_zeros_csv(std::ostream& out, const std::vector<ZeroSet>& sets, const std::vector<std::string>& metadata) {
  write_csv_header(out, {"m", "T_star"}, metadata);
  for (const auto& s : sets)
    for (double z : s.zeros) out << s.m << ',' << format_real(z) << '\n';
}

void write_edges_csv(std::ostream& out, const std::vector<std::pair<double, SectorEdges>>& rows,
                     const std::vector<std::string>& metadata) {
  write_csv_header(out, {"lambda", "T_minus", "T_plus"}, metadata);
  for (const auto& [lambda, e] : rows)
    out << format_real(lambda) << ',' << format_real(e.t_minus) << ',' << format_real(e.t_plus) << '\n';
}

}  // namespace itz
