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

#include "itz/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "itz/complex_zeros.hpp"
#include "itz/csv.hpp"
#include "itz/error.hpp"
#include "itz/manybody.hpp"
#include "itz/observables.hpp"
#include "itz/partition.hpp"
#include "itz/sff.hpp"
#include "itz/spectra.hpp"
#include "itz/zeros.hpp"

namespace itz {
namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

json fit_json(const ScalingFit& f) {
  return {{"exponent", f.exponent}, {"amplitude", f.amplitude}, {"window_lo", f.window_lo},
          {"window_hi", f.window_hi}, {"r_squared", f.r_squared}, {"n_points", f.n_points}};
}

ManyBodySpectrum many_body(const ModelSpec& model, const RunConfig& config, const SpectrumCache* cache,
                           bool with_diagonals) {
  if (!with_diagonals && model.probe_h == 0.0 && model.n <= config.limits.max_enumeration_n) {
    if (model.family == Family::TfiObc || model.family == Family::XxObc)
      return free_fermion_manybody(quasiparticle_spectrum(model), config.limits);
    if (model.family == Family::TfiPbc)
      return free_fermion_manybody_pbc(pbc_momenta(model, Channel::Odd), pbc_momenta(model, Channel::Even),
                                       config.limits);
  }
  return cached_exact_spectrum(model, with_diagonals, cache, config.limits);
}

void require_family(const RunConfig& c, bool ok, const char* what) {
  if (!ok)
    throw Error(ErrorCode::ConfigInvalid,
                fmt::format("command '{}' needs {}, got {}", command_name(c.command), what, family_name(c.model.family)));
}

std::vector<double> lambdas_or_model(const RunConfig& c) {
  return c.lambda_grid.empty() ? std::vector<double>{c.model.lambda} : c.lambda_grid;
}

SectorEdges edges_for(Family family, double lambda, int m) {
  return family == Family::XxObc ? xx_sector_edges(lambda, m) : sector_edges(lambda, m);
}

// spectrum ---------------------------------------------------------------

json run_spectrum(const RunConfig& c, ArtifactWriter& w, const SpectrumCache* cache) {
  json s;
  const auto& model = c.model;
  if (model.family == Family::TfiObc || model.family == Family::XxObc) {
    const auto qp = quasiparticle_spectrum(model);
    w.csv("spectrum.csv", [&](std::ostream& o, const auto& md) { write_spectrum_csv(o, qp, md); });
    int real = 0, complex = 0;
    std::vector<double> q, e;
    for (const auto& m : qp.modes) {
      (m.kind == ModeKind::RealBulk ? real : complex)++;
      q.push_back(m.q.real());
      e.push_back(m.epsilon);
    }
    double e0 = 0.0;
    for (double x : qp.energies()) e0 -= x;
    s = {{"real_modes", real}, {"complex_modes", complex}, {"ground_energy", e0}};
    if (const auto* pi = qp.pi_mode()) {
      s["pi_mode_energy"] = pi->epsilon;
      s["pi_mode_q_prime"] = pi->q.imag();
      if (model.family == Family::TfiObc && std::isfinite(pi->q.imag()) && pi->q.imag() > 0.0) {
        const auto prof = edge_mode_profile(model);
        w.csv("edge_mode.csv", [&](std::ostream& o, const auto& md) {
          write_csv_header(o, {"site", "phi", "psi"}, md);
          for (std::size_t j = 0; j < prof.phi.size(); ++j)
            o << j + 1 << ',' << format_real(prof.phi[j]) << ',' << format_real(prof.psi[j]) << '\n';
        });
      }
    }
    SvgPlot plot(fmt::format("Quasiparticle spectrum, {}", model_key(model)), "Re q", "epsilon");
    plot.add("modes", q, e);
    w.svg("spectrum.svg", plot);
  } else if (model.family == Family::TfiPbc) {
    SvgPlot plot(fmt::format("Quasiparticle spectrum, {}", model_key(model)), "q", "epsilon");
    for (auto ch : {Channel::Odd, Channel::Even}) {
      const auto qp = pbc_momenta(model, ch);
      const char* name = ch == Channel::Odd ? "odd" : "even";
      w.csv(fmt::format("spectrum_{}.csv", name), [&](std::ostream& o, const auto& md) { write_spectrum_csv(o, qp, md); });
      std::vector<double> q, e;
      for (const auto& m : qp.modes) {
        q.push_back(m.q.real());
        e.push_back(m.epsilon);
      }
      plot.add(name, q, e);
      s[fmt::format("{}_modes", name)] = qp.modes.size();
    }
    w.svg("spectrum.svg", plot);
  } else {
    const auto mb = cached_exact_spectrum(model, true, cache, c.limits);
    w.csv("manybody_spectrum.csv", [&](std::ostream& o, const auto& md) {
      write_csv_header(o, {"n", "E", "diag_Sx", "diag_Sz"}, md);
      for (std::size_t i = 0; i < mb.energies.size(); ++i)
        o << i << ',' << format_real(mb.energies[i]) << ',' << format_real(mb.diag_sx[i]) << ','
          << format_real(mb.diag_sz[i]) << '\n';
    });
    s = {{"dim", mb.dim}, {"ground_energy", mb.energies.front()}, {"gap", mb.energies.size() > 1 ? mb.energies[1] - mb.energies[0] : 0.0}};
  }
  return s;
}

// zeros ------------------------------------------------------------------

json run_zeros(const RunConfig& c, ArtifactWriter& w) {
  require_family(c, c.model.family == Family::TfiObc || c.model.family == Family::XxObc, "tfi-obc or xx-obc");
  const auto sets = enumerate_itzs(quasiparticle_spectrum(c.model), c.m_max);
  w.csv("zeros.csv", [&](std::ostream& o, const auto& md) { write_zeros_csv(o, sets, md); });
  std::vector<std::pair<double, SectorEdges>> rows;
  std::vector<double> lam, tz, lam_e, tm, tp;
  json s;
  double max_res = 0.0;
  std::size_t count = 0;
  for (const auto& set : sets) {
    max_res = std::max(max_res, set.max_residual);
    count += set.zeros.size();
  }
  s["zero_count"] = count;
  s["max_residual"] = max_res;
  if (!c.lambda_grid.empty()) {
    w.csv("zeros_vs_lambda.csv", [&](std::ostream& o, const auto& md) {
      write_csv_header(o, {"lambda", "m", "T_star"}, md);
      for (double l : c.lambda_grid) {
        ModelSpec m = c.model;
        m.lambda = l;
        for (const auto& set : enumerate_itzs(quasiparticle_spectrum(m), c.m_max))
          for (double t : set.zeros) {
            o << format_real(l) << ',' << set.m << ',' << format_real(t) << '\n';
            lam.push_back(l);
            tz.push_back(t);
          }
      }
    });
  }
  for (double l : lambdas_or_model(c)) {
    const auto e = edges_for(c.model.family, l, 1);
    rows.emplace_back(l, e);
    lam_e.push_back(l);
    tm.push_back(e.t_minus);
    tp.push_back(e.t_plus);
  }
  w.csv("edges.csv", [&](std::ostream& o, const auto& md) { write_edges_csv(o, rows, md); });
  SvgPlot plot(fmt::format("Imaginary-temperature zeros, {}", model_key(c.model)), "lambda", "T*");
  if (lam.empty()) {
    for (const auto& set : sets)
      for (double t : set.zeros) {
        lam.push_back(c.model.lambda);
        tz.push_back(t);
      }
  }
  plot.add("zeros", lam, tz);
  if (lam_e.size() > 1) {
    plot.add("T-", lam_e, tm, SvgPlot::Style::Line);
    plot.add("T+", lam_e, tp, SvgPlot::Style::Line);
  }
  w.svg("zeros.svg", plot);
  return s;
}

// density ----------------------------------------------------------------

double density_sum(Family family, double t, double lambda, int m_max, int n) {
  double rho = 0.0;
  for (int m = 1; m <= m_max; m += 2) {
    try {
      rho += family == Family::XxObc ? n * density_xx(t, lambda, m) : density_analytic(t, lambda, m, n);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EdgeSingularity) throw;
      return std::numeric_limits<double>::infinity();
    }
  }
  return rho;
}

json run_density(const RunConfig& c, ArtifactWriter& w) {
  require_family(c, c.model.family == Family::TfiObc || c.model.family == Family::XxObc, "tfi-obc or xx-obc");
  const auto& model = c.model;
  double t_hi = 0.0;
  for (int m = 1; m <= c.m_max; m += 2) t_hi = std::max(t_hi, edges_for(model.family, model.lambda, m).t_plus);
  const auto grid = c.t_grid.empty() ? linspace(t_hi * 1e-3, t_hi * 1.05, 400) : c.t_grid;
  std::vector<double> rho;
  for (double t : grid) rho.push_back(density_sum(model.family, t, model.lambda, c.m_max, model.n));
  w.csv("density.csv", [&](std::ostream& o, const auto& md) {
    write_csv_header(o, {"T", "rho"}, md);
    for (std::size_t i = 0; i < grid.size(); ++i) o << format_real(grid[i]) << ',' << format_real(rho[i]) << '\n';
  });

  const auto sets = enumerate_itzs(quasiparticle_spectrum(model), c.m_max);
  constexpr int kBins = 60;
  const double lo = grid.front(), hi = grid.back(), width = (hi - lo) / kBins;
  std::vector<double> counts(kBins, 0.0), centers;
  for (const auto& set : sets)
    for (double t : set.zeros) {
      const int b = static_cast<int>(std::floor((t - lo) / width));
      if (b >= 0 && b < kBins) counts[b] += 1.0;
    }
  w.csv("density_histogram.csv", [&](std::ostream& o, const auto& md) {
    write_csv_header(o, {"T_lo", "T_hi", "count", "rho_hist"}, md);
    for (int b = 0; b < kBins; ++b) {
      o << format_real(lo + b * width) << ',' << format_real(lo + (b + 1) * width) << ',' << counts[b] << ','
        << format_real(counts[b] / width) << '\n';
      centers.push_back(lo + (b + 0.5) * width);
      counts[b] /= width;
    }
  });

  json s;
  if (model.family == Family::TfiObc) {
    json fits = json::array();
    for (int m = 1; m <= c.m_max; m += 2) {
      for (auto edge : {Edge::Minus, Edge::Plus}) {
        const auto e = sector_edges(model.lambda, m);
        if (edge == Edge::Minus && (model.lambda == 1.0 || e.t_minus <= 0.0)) continue;
        try {
          const auto f = fit_edge_exponent_analytic(model.lambda, m, model.n, edge, c.tolerance("edge_window_lo", 1e-6),
                                                    c.tolerance("edge_window_hi", 1e-3));
          auto j = fit_json(f);
          j["m"] = m;
          j["edge"] = edge == Edge::Minus ? "T-" : "T+";
          fits.push_back(j);
        } catch (const Error& err) {
          if (err.code() != ErrorCode::InsufficientRange) throw;
        }
      }
    }
    s["edge_fits"] = fits;
  }
  SvgPlot plot(fmt::format("Zero density, {}", model_key(model)), "T", "rho");
  plot.add("histogram", centers, counts);
  plot.add("analytic", grid, rho, SvgPlot::Style::Line);
  w.svg("density.svg", plot);
  return s;
}

// circle -----------------------------------------------------------------

json run_circle(const RunConfig& c, ArtifactWriter& w) {
  require_family(c, c.model.family == Family::TfiObc, "tfi-obc");
  const auto sets = enumerate_itzs(quasiparticle_spectrum(c.model), 1);
  const auto map = circle_map(sets.front());
  w.csv("circle.csv", [&](std::ostream& o, const auto& md) {
    write_csv_header(o, {"kind", "z_re", "z_im"}, md);
    for (const auto& z : map.points) o << "bulk," << format_real(z.real()) << ',' << format_real(z.imag()) << '\n';
    for (const auto& z : map.isolated_points)
      o << "isolated," << format_real(z.real()) << ',' << format_real(z.imag()) << '\n';
    for (const auto& z : map.points)
      o << "bulk_mirror," << format_real(z.real()) << ',' << format_real(-z.imag()) << '\n';
  });
  json s{{"w", map.w}, {"theta", map.theta}, {"theta_limit", map.theta_limit}};
  SvgPlot plot(fmt::format("Circle map, {}", model_key(c.model)), "Re z", "Im z");
  std::vector<double> x, y, xi, yi;
  for (const auto& z : map.points) {
    x.push_back(z.real());
    y.push_back(z.imag());
    x.push_back(z.real());
    y.push_back(-z.imag());
  }
  for (const auto& z : map.isolated_points) {
    xi.push_back(z.real());
    yi.push_back(z.imag());
  }
  plot.add("bulk", x, y).add("isolated", xi, yi);
  w.svg("circle.svg", plot);

  if (!c.sizes.empty()) {
    std::vector<double> inv_n, theta;
    for (int n : c.sizes) {
      ModelSpec m = c.model;
      m.n = n;
      inv_n.push_back(1.0 / n);
      theta.push_back(circle_map(enumerate_itzs(quasiparticle_spectrum(m), 1).front()).theta);
    }
    const auto fit = fit_line(inv_n, theta);
    w.csv("theta_scaling.csv", [&](std::ostream& o, const auto& md) {
      write_csv_header(o, {"N", "inv_N", "theta"}, md);
      for (std::size_t i = 0; i < inv_n.size(); ++i)
        o << c.sizes[i] << ',' << format_real(inv_n[i]) << ',' << format_real(theta[i]) << '\n';
    });
    s["theta_fit"] = {{"slope", fit.slope}, {"intercept", fit.intercept}, {"r_squared", fit.r_squared}};
    SvgPlot inset("Opening angle vs 1/N", "1/N", "theta");
    std::vector<double> fx{0.0, *std::max_element(inv_n.begin(), inv_n.end())};
    std::vector<double> fy{fit.intercept, fit.intercept + fit.slope * fx[1]};
    inset.add("theta", inv_n, theta).add("linear fit", fx, fy, SvgPlot::Style::Line);
    w.svg("theta_scaling.svg", inset);
  }
  return s;
}

// sff --------------------------------------------------------------------

json run_sff(const RunConfig& c, ArtifactWriter& w, const SpectrumCache* cache) {
  json s;
  const auto& model = c.model;
  const bool small = hilbert_dim(model) <= c.limits.max_dim ||
                     (is_free_fermion(model.family) && model.n <= c.limits.max_enumeration_n && model.probe_h == 0.0);
  if (small) {
    const auto mb = many_body(model, c, cache, false);
    const auto grid = c.time_grid.empty() ? log_grid(1e-3, 1e3, 400) : c.time_grid;
    const auto trace = sff(mb, grid, true);
    w.csv("sff.csv", [&](std::ostream& o, const auto& md) { write_sff_csv(o, trace, md); });
    s["zeros_found"] = trace.zeros_t.size();
    s["t_s"] = trace.t_s;
    if (model.family == Family::TfiObc || model.family == Family::XxObc) {
      const auto report = zero_correspondence(trace, enumerate_itzs(quasiparticle_spectrum(model), c.m_max),
                                              c.tolerance("sff_match", 1e-10));
      w.csv("sff_zeros.csv", [&](std::ostream& o, const auto& md) { write_sff_zeros_csv(o, report, md); });
      s["matched"] = report.matches.size();
      s["unmatched"] = report.unmatched.size();
      s["max_mismatch"] = report.max_mismatch;
      s["correspondence_pass"] = report.pass;
    }
    SvgPlot plot(fmt::format("Spectral form factor, {}", model_key(model)), "t", "K");
    plot.log_x().log_y();
    plot.add("K", trace.t_grid, trace.k, SvgPlot::Style::Line);
    for (double t : trace.zeros_t) plot.vline(t);
    w.svg("sff.svg", plot);
  }
  if (model.family == Family::TfiObc) {
    const double t_s = 1.0 / (4.0 * (1.0 + model.lambda));
    const auto hist = zero_density_t(quasiparticle_spectrum(model), t_s / 2.0, c.tolerance("hist_t_hi", 1.2), 100);
    w.csv("sff_density.csv", [&](std::ostream& o, const auto& md) { write_histogram_csv(o, hist, md); });
    s["chi2_per_bin"] = hist.chi2_per_bin;
    s["features"] = hist.features;
    std::vector<double> mid;
    for (std::size_t b = 0; b < hist.counts.size(); ++b) mid.push_back(0.5 * (hist.edges[b] + hist.edges[b + 1]));
    SvgPlot plot(fmt::format("Density of SFF zeros, {}", model_key(model)), "t", "count");
    plot.add("histogram", mid, hist.counts).add("analytic", mid, hist.expected, SvgPlot::Style::Line);
    w.svg("sff_density.svg", plot);
  } else if (!small) {
    throw Error(ErrorCode::DimensionCapExceeded, "spectrum too large for the form factor");
  }
  return s;
}

// magnetize --------------------------------------------------------------

json run_magnetize(const RunConfig& c, ArtifactWriter& w, const SpectrumCache* cache) {
  const auto& model = c.model;
  require_family(c, model.family != Family::XxObc, "a TFI or Potts family");
  const auto mb = cached_exact_spectrum(model, true, cache, c.limits);
  const Axis axis = model.probe_h != 0.0 ? Axis::Z : Axis::X;
  json s{{"axis", axis == Axis::X ? "x" : "z"}};

  ComplexTemperature zero;
  if (is_tfi(model.family)) {
    double t_top = 0.0;
    if (model.family == Family::TfiObc && model.probe_h == 0.0) {
      const auto sets = enumerate_itzs(quasiparticle_spectrum(model), 1);
      t_top = sets.front().zeros.back();
    } else {
      t_top = sector_edges(model.lambda, 1).t_plus;
    }
    zero = {0.0, refine_imaginary_zero(mb, t_top)};
  } else {
    zero = track_lowest_zero(mb).zero.tau;
  }
  s["zero"] = {zero.re, zero.im};

  std::vector<ComplexTemperature> taus;
  const auto grid = c.t_grid.empty() ? linspace(0.02, 1.2 * std::abs(zero.value()) + 0.5, 600) : c.t_grid;
  for (double t : grid) taus.push_back(is_tfi(model.family) ? ComplexTemperature{0.0, t} : ComplexTemperature{zero.re, t});
  const auto curve = magnetization_curve(mb, taus, axis);
  w.csv("magnetization.csv", [&](std::ostream& o, const auto& md) { write_magnetization_csv(o, curve, md); });

  json fits = json::array();
  const std::vector<std::pair<const char*, cplx>> dirs{{"imaginary", cplx(0.0, 1.0)}, {"real", cplx(1.0, 0.0)}};
  for (const auto& [name, dir] : dirs) {
    const auto path_curve = magnetization_curve(mb, approach_path(zero, dir, 1e-6, 1e-2, 24), axis);
    const auto f = fit_divergence(path_curve, zero);
    auto j = fit_json(f);
    j["direction"] = name;
    fits.push_back(j);
    w.csv(fmt::format("approach_{}.csv", name),
          [&](std::ostream& o, const auto& md) { write_magnetization_csv(o, path_curve, md); });
  }
  s["divergence_fits"] = fits;
  std::vector<double> t, m;
  for (const auto& p : curve.samples) {
    t.push_back(p.tau.im);
    m.push_back(std::abs(p.m));
  }
  SvgPlot plot(fmt::format("|M| along the imaginary-temperature line, {}", model_key(model)), "Im tau", "|M|");
  plot.log_y().add("|M|", t, m, SvgPlot::Style::Line).vline(zero.im);
  w.svg("magnetization.svg", plot);
  return s;
}

// collapse ---------------------------------------------------------------

json run_collapse(const RunConfig& c, ArtifactWriter& w, const SpectrumCache* cache) {
  CollapseOptions opt;
  if (!c.sizes.empty()) opt.sizes = c.sizes;
  opt.cache = cache;
  opt.fixed_scaling_var = c.tolerance("scaling_var", opt.fixed_scaling_var);
  opt.beta = c.tolerance("beta", opt.beta);
  opt.delta = c.tolerance("delta", opt.delta);
  opt.nu = c.tolerance("nu", opt.nu);
  const auto data = collapse_data(opt);
  const auto result = rescale_collapse(data, opt.fixed_scaling_var, opt.beta, opt.delta, opt.nu);
  w.csv("collapse.csv", [&](std::ostream& o, const auto& md) { write_collapse_csv(o, data, result, md); });
  json s{{"collapse_residual", result.collapse_residual}, {"beta", opt.beta}, {"delta", opt.delta}, {"nu", opt.nu}};
  json perturbed = json::object();
  for (double f : {0.5, 1.5}) {
    const auto r = rescale_collapse(data, opt.fixed_scaling_var, f * opt.beta, opt.delta, opt.nu);
    perturbed[fmt::format("beta_x{}", f)] = r.collapse_residual;
  }
  s["perturbed_residuals"] = perturbed;
  json points = json::array();
  for (const auto& d : data)
    points.push_back({{"N", d.n}, {"lambda", d.lambda}, {"T_eval", d.t_eval},
                      {"edge_argument", d.t_eval * std::pow(d.lambda - 1.0, -opt.nu)}});
  s["evaluation"] = points;
  SvgPlot raw("|M_z| at the lower sector edge", "h", "|M_z|"), scaled("Rescaled |M_z|", "h N^(beta delta/nu)",
                                                                     "|M_z| N^(beta/nu)");
  raw.log_x().log_y();
  scaled.log_x().log_y();
  for (const auto& d : data) {
    raw.add(fmt::format("N={}", d.n), d.h, d.mz, SvgPlot::Style::Line);
    std::vector<double> x, y;
    for (const auto& [a, b] : result.curves.at(d.n)) {
      x.push_back(a);
      y.push_back(b);
    }
    scaled.add(fmt::format("N={}", d.n), x, y);
  }
  w.svg("collapse_raw.svg", raw);
  w.svg("collapse.svg", scaled);
  return s;
}

// potts-scan -------------------------------------------------------------

json run_potts_scan(const RunConfig& c, ArtifactWriter& w, const SpectrumCache* cache) {
  require_family(c, is_potts(c.model.family), "a Potts family");
  SearchOptions opt;
  opt.target_residual = c.tolerance("newton_residual", opt.target_residual);
  std::vector<double> lams, mod;
  std::vector<FirstSector> sectors;
  for (double l : lambdas_or_model(c)) {
    ModelSpec m = c.model;
    m.lambda = l;
    const auto mb = cached_exact_spectrum(m, false, cache, c.limits);
    if (lambdas_or_model(c).size() == 1) {
      sectors.push_back(first_sector(mb, opt));
    } else {
      // a coupling scan follows the isolated zero line only
      FirstSector fs;
      fs.lowest = track_lowest_zero(mb).zero;
      fs.zeros = {fs.lowest};
      fs.d_plus = fs.d_minus = std::numeric_limits<double>::quiet_NaN();
      sectors.push_back(fs);
    }
    lams.push_back(l);
  }
  w.csv("potts_zeros.csv", [&](std::ostream& o, const auto& md) {
    write_csv_header(o, {"lambda", "T_re", "T_im", "residual", "winding"}, md);
    for (std::size_t i = 0; i < lams.size(); ++i)
      for (const auto& z : sectors[i].zeros)
        o << format_real(lams[i]) << ',' << format_real(z.tau.re) << ',' << format_real(z.tau.im) << ','
          << format_real(z.newton_residual) << ',' << z.winding_certificate << '\n';
  });
  w.csv("potts_line.csv", [&](std::ostream& o, const auto& md) {
    write_csv_header(o, {"lambda", "T_re", "T_im", "abs_T", "d_plus", "d_minus"}, md);
    for (std::size_t i = 0; i < lams.size(); ++i) {
      const auto& l = sectors[i].lowest.tau;
      mod.push_back(std::abs(l.value()));
      o << format_real(lams[i]) << ',' << format_real(l.re) << ',' << format_real(l.im) << ','
        << format_real(mod.back()) << ',' << format_real(sectors[i].d_plus) << ','
        << format_real(sectors[i].d_minus) << '\n';
    }
  });
  json s{{"lambdas", lams}};
  std::vector<double> fl, fm;
  for (std::size_t i = 0; i < lams.size(); ++i)
    if (lams[i] > 1.0) {
      fl.push_back(lams[i]);
      fm.push_back(mod[i]);
    }
  if (fl.size() >= 3) s["line_fit"] = fit_json(edge_scaling_vs_lambda(fl, fm, 1.0));
  SvgPlot plot(fmt::format("Complex zeros, {}", family_name(c.model.family)), "Re tau", "Im tau");
  for (std::size_t i = 0; i < lams.size(); ++i) {
    std::vector<double> x, y;
    for (const auto& z : sectors[i].zeros) {
      x.push_back(z.tau.re);
      y.push_back(z.tau.im);
    }
    plot.add(fmt::format("lambda={}", lams[i]), x, y);
  }
  w.svg("potts_zeros.svg", plot);
  if (lams.size() > 1) {
    SvgPlot line("Isolated zero line", "lambda", "|tau|");
    line.add("|tau|", lams, mod);
    w.svg("potts_line.svg", line);
  }
  return s;
}

}  // namespace

ArtifactWriter::ArtifactWriter(std::filesystem::path dir, std::vector<std::string> metadata)
    : dir_(std::move(dir)), metadata_(std::move(metadata)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::ConfigInvalid, fmt::format("cannot create output directory {}", dir_.string()));
}

namespace {

std::ofstream open_artifact(const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error(ErrorCode::ConfigInvalid, fmt::format("cannot write {}", p.string()));
  return out;
}

}  // namespace

void ArtifactWriter::csv(const std::string& name,
                         const std::function<void(std::ostream&, const std::vector<std::string>&)>& body) {
  const auto p = dir_ / name;
  auto out = open_artifact(p);
  body(out, metadata_);
  files_.push_back(p);
}

void ArtifactWriter::json(const std::string& name, nlohmann::json value) {
  const auto p = dir_ / name;
  auto out = open_artifact(p);
  value["metadata"] = metadata_;
  out << value.dump(2) << '\n';
  files_.push_back(p);
}

void ArtifactWriter::svg(const std::string& name, const SvgPlot& plot) {
  const auto p = dir_ / name;
  auto out = open_artifact(p);
  plot.write(out, metadata_);
  files_.push_back(p);
}

std::unique_ptr<SpectrumCache> make_cache(const RunConfig& config) {
  if (!config.cache) return nullptr;
  return std::make_unique<SpectrumCache>(config.cache_dir.empty() ? std::filesystem::path{}
                                                                  : std::filesystem::path{config.cache_dir});
}

RunResult run(const RunConfig& config) {
  if (config.command == Command::ReproduceFig) return reproduce_fig(config.figure, config);
  const auto cache = make_cache(config);
  ArtifactWriter w(config.output_dir, config.metadata());
  json s;
  switch (config.command) {
    case Command::Spectrum: s = run_spectrum(config, w, cache.get()); break;
    case Command::Zeros: s = run_zeros(config, w); break;
    case Command::Density: s = run_density(config, w); break;
    case Command::Circle: s = run_circle(config, w); break;
    case Command::Sff: s = run_sff(config, w, cache.get()); break;
    case Command::Magnetize: s = run_magnetize(config, w, cache.get()); break;
    case Command::Collapse: s = run_collapse(config, w, cache.get()); break;
    case Command::PottsScan: s = run_potts_scan(config, w, cache.get()); break;
    case Command::ReproduceFig: break;
  }
  s["config"] = config.to_json();
  w.json("summary.json", s);
  return {w.files(), s};
}

}  // namespace itz
