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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "itz/cache.hpp"
#include "itz/complex_zeros.hpp"
#include "itz/error.hpp"
#include "itz/fit.hpp"
#include "itz/manybody.hpp"
#include "itz/observables.hpp"
#include "itz/partition.hpp"
#include "itz/sff.hpp"
#include "itz/spectra.hpp"
#include "itz/zeros.hpp"

using namespace itz;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<Outcome()> body;
};

const SpectrumCache& cache() {
  static const SpectrumCache c;
  return c;
}

Outcome oracle_equivalence() {
  double worst = 0.0;
  for (int n : {8, 10, 12})
    for (double lambda : {0.5, 0.7, 1.0, 1.3, 2.0}) {
      const ModelSpec m{Family::TfiObc, n, lambda, 0.0};
      const auto r = oracle_compare(exact_spectrum(m), free_fermion_manybody(solve_obc_momenta(m)), 1e-8);
      worst = std::max(worst, r.max_deviation);
    }
  return {worst < 1e-8, fmt::format("max deviation {:.2e} (< 1e-8)", worst)};
}

Outcome mode_counting() {
  auto count = [](double lambda) {
    const auto s = solve_obc_momenta({Family::TfiObc, 12, lambda, 0.0});
    const auto c = std::count_if(s.modes.begin(), s.modes.end(), [](const Mode& m) { return m.kind == ModeKind::ComplexPi; });
    return std::pair<long, long>(static_cast<long>(s.modes.size()) - c, c);
  };
  const auto a = count(0.7), b = count(1.3);
  return {a == std::pair<long, long>(11, 1) && b == std::pair<long, long>(12, 0),
          fmt::format("lambda=0.7: {} real + {} complex; lambda=1.3: {} real + {} complex", a.first, a.second, b.first,
                      b.second)};
}

Outcome pi_mode() {
  const auto s = solve_obc_momenta({Family::TfiObc, 40, 0.7, 0.0});
  const Mode* p = s.pi_mode();
  if (!p) return {false, "no pi-mode"};
  const double r = p->epsilon / (std::pow(0.7, 40) * (1 - 0.49));
  return {r >= 0.99 && r <= 1.01, fmt::format("ratio {:.6f} (in [0.99, 1.01])", r)};
}

Outcome edges() {
  const auto sets = enumerate_itzs(solve_obc_momenta({Family::TfiObc, 2000, 1.3, 0.0}), 1);
  const auto e = sector_edges(1.3, 1);
  const double dm = std::abs(sets[0].zeros.front() - e.t_minus), dp = std::abs(sets[0].zeros.back() - e.t_plus);
  return {dm < 1e-5 && dp < 1e-5, fmt::format("|min - T-| = {:.2e}, |max - T+| = {:.2e} (< 1e-5)", dm, dp)};
}

Outcome critical_density() {
  const auto sets = enumerate_itzs(solve_obc_momenta({Family::TfiObc, 1000, 1.0, 0.0}), 1);
  std::vector<double> low;
  for (double t : sets[0].zeros)
    if (t < 0.1) low.push_back(t);
  if (low.size() < 3) return {false, "too few zeros below T = 0.1"};
  const double rho = (low.size() - 1) / (low.back() - low.front());
  const double rel = std::abs(rho / 500.0 - 1.0);
  return {rel < 0.01, fmt::format("{} zeros below 0.1, density {:.2f} vs N/2 = 500 (rel {:.2e}, < 1%)", low.size(), rho, rel)};
}

Outcome edge_exponent() {
  std::string d;
  bool ok = true;
  auto probe = [&](double lambda, Edge edge) {
    const auto f = fit_edge_exponent_analytic(lambda, 1, 1000, edge, 1e-6, 1e-3);
    ok = ok && std::abs(f.exponent + 0.5) <= 0.02;
    d += fmt::format("{}@{}={:.4f} ", edge == Edge::Plus ? "T+" : "T-", lambda, f.exponent);
  };
  for (double l : {0.7, 1.0, 1.3}) probe(l, Edge::Plus);
  for (double l : {0.7, 1.3}) probe(l, Edge::Minus);
  return {ok, d + "(-0.50 +/- 0.02)"};
}

double side_fit(const ManyBodySpectrum& s, ComplexTemperature zero, cplx dir, double sign) {
  std::vector<ComplexTemperature> taus;
  for (double d : logspace(1e-6, 1e-2, 40)) taus.push_back(ComplexTemperature::from(zero.value() + sign * d * dir));
  return fit_divergence(magnetization_curve(s, taus, Axis::X), zero).exponent;
}

Outcome magnetization_exponent() {
  const ModelSpec tfi{Family::TfiObc, 8, 1.0, 0.0};
  const auto s = cached_exact_spectrum(tfi, true, &cache());
  const double t0 = enumerate_itzs(solve_obc_momenta(tfi), 1)[0].zeros.back();
  const ComplexTemperature z{0.0, refine_imaginary_zero(s, t0)};
  const double e1 = fit_divergence(magnetization_curve(s, approach_path(z, {0, 1}, 1e-6, 1e-2, 40), Axis::X), z).exponent;

  const auto p = cached_exact_spectrum({Family::Potts3, 6, 1.2, 0.0}, true, &cache());
  const auto pz = track_lowest_zero(p).zero.tau;
  const double below = side_fit(p, pz, {0, 1}, -1.0), above = side_fit(p, pz, {0, 1}, 1.0);
  const bool ok = std::abs(e1 + 1) <= 0.05 && std::abs(below + 1) <= 0.1 && std::abs(above + 1) <= 0.1;
  return {ok, fmt::format("TFI N=8 slope {:.4f} (-1 +/- 0.05); Potts3 N=6 slopes {:.4f}, {:.4f} (-1 +/- 0.1)", e1, below,
                          above)};
}

Outcome sff_correspondence() {
  const ModelSpec m{Family::TfiObc, 12, 1.0, 0.0};
  const auto trace = sff(free_fermion_manybody(solve_obc_momenta(m)), log_grid(0.05, 5.0, 400));
  const auto r = zero_correspondence(trace, enumerate_itzs(solve_obc_momenta(m), 1), 1e-10);
  const double ts = trace.t_s;
  const bool ok = r.pass && std::abs(ts - 0.125) <= 1e-8;
  return {ok, fmt::format("{} of {} m=1 zeros matched (max mismatch {:.1e}); t_s = {:.10f} vs 1/8 +/- 1e-8", r.matches.size(),
                          r.matches.size() + r.unmatched.size(), r.max_mismatch, ts)};
}

bool near_any(double t, const std::vector<double>& marks, double tol) {
  return std::any_of(marks.begin(), marks.end(), [&](double s) { return std::abs(t - s) <= tol; });
}

Outcome sff_density() {
  bool ok = true;
  std::string d;
  for (double lambda : {0.7, 1.0, 1.3}) {
    const double ts = 1.0 / (4.0 * (1.0 + lambda));
    const auto h = zero_density_t(solve_obc_momenta({Family::TfiObc, 1000, lambda, 0.0}), ts / 2, 1.2, 100);
    const double width = h.edges[1] - h.edges[0];
    int plus = 0, minus = 0, stray = 0;
    for (double f : h.features) {
      if (near_any(f, h.plus_singularities, 4 * width))
        ++plus;
      else if (near_any(f, h.minus_singularities, 4 * width))
        ++minus;
      else
        ++stray;
    }
    const bool structure = lambda == 1.0 ? (plus > 0 && minus == 0 && stray == 0) : (plus > 0 && minus > 0 && stray == 0);
    ok = ok && structure && h.chi2_per_bin < 0.05;
    d += fmt::format("lambda={}: chi2/bin {:.3f}, peaks T+ {} T- {} other {}; ", lambda, h.chi2_per_bin, plus, minus, stray);
  }
  return {ok, d + "(chi2 < 0.05)"};
}

Outcome collapse() {
  CollapseOptions opt;
  opt.sizes = {6, 8, 10, 12};
  opt.cache = &cache();
  const auto data = collapse_data(opt);
  const double r0 = rescale_collapse(data, opt.fixed_scaling_var, opt.beta, opt.delta, opt.nu).collapse_residual;
  const double rl = rescale_collapse(data, opt.fixed_scaling_var, 0.5 * opt.beta, opt.delta, opt.nu).collapse_residual;
  const double rh = rescale_collapse(data, opt.fixed_scaling_var, 1.5 * opt.beta, opt.delta, opt.nu).collapse_residual;
  const bool ok = r0 < 0.05 && rl >= 2 * r0 && rh >= 2 * r0;
  return {ok, fmt::format("residual {:.4f} (< 0.05); beta x0.5 -> {:.4f}, x1.5 -> {:.4f} (>= 2x)", r0, rl, rh)};
}

Outcome pbc_consistency() {
  const ModelSpec m{Family::TfiPbc, 8, 1.3, 0.0};
  const auto s = exact_spectrum(m);
  double worst = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    const cplx a = z_pbc(pbc_momenta(m, Channel::Odd), pbc_momenta(m, Channel::Even), t);
    const cplx b = z_trace(s, {0.0, t});
    worst = std::max(worst, std::abs(a - b) / std::abs(b));
  }
  std::vector<double> gaps, per_site;
  for (int n : {8, 12, 16}) {
    const ModelSpec p{Family::TfiPbc, n, 1.3, 0.0};
    const cplx a = z_pbc(pbc_momenta(p, Channel::Odd), pbc_momenta(p, Channel::Even), 1.0);
    const double b = z_product_obc(solve_obc_momenta({Family::TfiObc, n, 1.3, 0.0}), 1.0);
    gaps.push_back(std::abs(a - b) / std::abs(a));
    const cplx a2 = z_pbc(pbc_momenta(p, Channel::Odd), pbc_momenta(p, Channel::Even), 2.0);
    const double b2 = z_product_obc(solve_obc_momenta({Family::TfiObc, n, 1.3, 0.0}), 2.0);
    per_site.push_back(std::abs(std::log(std::abs(a2)) - std::log(std::abs(b2))) / n);
  }
  const bool ok = worst < 1e-8 && gaps[1] < gaps[0] && gaps[2] < gaps[1];
  return {ok, fmt::format("trace rel error {:.1e} (< 1e-8); PBC vs OBC {:.3e}, {:.3e}, {:.3e} (decreasing); "
                          "per-site |log|Z|| gap at T=2 {:.3e}, {:.3e}, {:.3e}",
                          worst, gaps[0], gaps[1], gaps[2], per_site[0], per_site[1], per_site[2])};
}

Outcome xx_chain() {
  const ModelSpec m{Family::XxObc, 10, 1.0, 0.0};
  const auto qp = xx_spectrum(m);
  const auto mb = free_fermion_manybody(qp);
  double worst = 0.0, formula = 0.0;
  for (const auto& set : enumerate_itzs(qp, 3)) {
    std::vector<double> expect;
    for (const auto& mode : qp.modes) {
      const double t = 2 * std::abs(1.0 + 2 * std::cos(mode.q.real())) / (set.m * kPi);
      if (t > 0.0) expect.push_back(t);
    }
    std::sort(expect.begin(), expect.end());
    if (expect.size() != set.zeros.size()) return {false, "zero count differs from the closed form"};
    for (std::size_t k = 0; k < expect.size(); ++k) {
      formula = std::max(formula, std::abs(expect[k] - set.zeros[k]));
      worst = std::max(worst, std::abs(z_trace(mb, {0.0, set.zeros[k]})) / static_cast<double>(mb.dim));
    }
  }
  const ModelSpec m8{Family::XxObc, 8, 1.0, 0.0};
  const auto oracle = oracle_compare(exact_spectrum(m8), free_fermion_manybody(xx_spectrum(m8)), 1e-8);

  // histogram at N = 1000, lambda = 1 (both branches present)
  const ModelSpec big{Family::XxObc, 1000, 1.0, 0.0};
  const auto zs = enumerate_itzs(xx_spectrum(big), 1)[0].zeros;
  const double a = 2.0 / kPi, tp = xx_sector_edges(1.0, 1).t_plus;
  const int bins = 40;
  const double w = tp / bins;
  std::vector<double> counts(bins, 0.0);
  for (double t : zs) counts[std::min(bins - 1, static_cast<int>(t / w))] += 1.0;
  double l1 = 0.0, total = 0.0;
  for (int b = 0; b < bins; ++b) {
    const double lo = b * w, hi = lo + w;
    if (std::abs(lo - a) < 1.5 * w || std::abs(hi - a) < 1.5 * w || hi > tp - 1.5 * w) continue;
    double e = 0.0;
    constexpr int kSub = 200;
    for (int k = 0; k < kSub; ++k) e += density_xx(lo + (k + 0.5) * w / kSub, 1.0, 1) * w / kSub;
    e *= 1000.0;
    l1 += std::abs(counts[b] - e);
    total += e;
  }
  const double rel = l1 / total;
  const bool ok = worst < 1e-10 && formula < 1e-12 && oracle.pass && rel < 0.03;
  return {ok, fmt::format("closed form dev {:.1e}; max |Z(iT*)|/D {:.1e}; ED oracle N=8 dev {:.1e}; histogram L1 rel {:.4f} (< 0.03)", formula, worst,
                          oracle.max_deviation, rel)};
}

struct LineFit {
  double exponent = 0.0;
  double shifted = 0.0;  // exponent of |tau(lambda)| - |tau(1)|
};

LineFit line_exponent(Family f, int n) {
  const auto lowest = [&](double lambda) {
    return std::abs(track_lowest_zero(cached_exact_spectrum({f, n, lambda, 0.0}, false, &cache())).zero.tau.value());
  };
  const double t1 = lowest(1.0);
  std::vector<double> l, t, dt;
  for (double lambda : {1.05, 1.1, 1.2, 1.3, 1.4, 1.5}) {
    l.push_back(lambda);
    t.push_back(lowest(lambda));
    dt.push_back(t.back() - t1);
  }
  return {edge_scaling_vs_lambda(l, t, 1.0).exponent, edge_scaling_vs_lambda(l, dt, 1.0).exponent};
}

Outcome potts() {
  const auto p3 = line_exponent(Family::Potts3, 8);
  const auto p4 = line_exponent(Family::Potts4, 6);
  std::vector<double> dp, dm;
  for (int n : {4, 6, 8}) {
    const auto fs = first_sector(cached_exact_spectrum({Family::Potts3, n, 2.0, 0.0}, false, &cache()));
    dp.push_back(fs.d_plus * n);
    dm.push_back(fs.d_minus * n);
  }
  const bool e3 = std::abs(p3.exponent / (5.0 / 6.0) - 1) <= 0.15, e4 = std::abs(p4.exponent / (2.0 / 3.0) - 1) <= 0.20;
  const bool dec = dp[1] < dp[0] && dp[2] < dp[1] && dm[1] < dm[0] && dm[2] < dm[1];
  return {e3 && e4 && dec,
          fmt::format("Potts3 exponent {:.3f} (5/6 +/- 15%), Potts4 {:.3f} (2/3 +/- 20%); relative to lambda=1: {:.3f}, {:.3f}; "
                      "d+N {:.3f} {:.3f} {:.3f}, d-N {:.3f} {:.3f} {:.3f} (decreasing)",
                      p3.exponent, p4.exponent, p3.shifted, p4.shifted, dp[0], dp[1], dp[2], dm[0], dm[1], dm[2])};
}

Outcome symmetry() {
  bool mirror = true;
  for (double lambda : {0.7, 1.0, 1.3})
    for (const auto& set : enumerate_itzs(solve_obc_momenta({Family::TfiObc, 12, lambda, 0.0}), 5)) {
      const auto neg = set.mirror();
      for (std::size_t k = 0; k < neg.size(); ++k) mirror = mirror && neg[k] == -set.zeros[neg.size() - 1 - k];
    }
  const auto p = exact_spectrum({Family::Potts3, 4, 1.3, 0.0});
  const auto zeros = complex_zero_search(p, {-0.5, 1.0, 0.1, 1.5});
  bool pairs = !zeros.empty();
  for (const auto& z : zeros)
    pairs = pairs && std::any_of(zeros.begin(), zeros.end(), [&](const ComplexZero& y) {
              return std::abs(y.tau.re - z.tau.re) < 1e-9 && std::abs(y.tau.im + z.tau.im) < 1e-9;
            });
  double mz = 0.0;
  const auto s = exact_spectrum({Family::TfiObc, 8, 1.1, 0.0}, true);
  for (auto tau : {ComplexTemperature{0.0, 0.37}, ComplexTemperature{0.3, 0.9}, ComplexTemperature{2.0, 0.0}})
    mz = std::max(mz, std::abs(magnetization(s, tau, Axis::Z)));
  return {mirror && pairs && mz < 1e-10,
          fmt::format("mirror {}, {} complex zeros paired {}, max |M_z| at h=0 {:.1e}", mirror ? "exact" : "broken",
                      zeros.size(), pairs ? "yes" : "no", mz)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "oracle equivalence", 60, oracle_equivalence},
      {2, "mode counting", 1e9, mode_counting},
      {3, "pi-mode asymptotics", 1, pi_mode},
      {4, "sector edges", 5, edges},
      {5, "critical density limit", 5, critical_density},
      {6, "edge exponent sigma1", 10, edge_exponent},
      {7, "magnetization exponent sigma2", 300, magnetization_exponent},
      {8, "SFF correspondence", 30, sff_correspondence},
      {9, "SFF zero-density structure", 60, sff_density},
      {10, "scaling collapse", 600, collapse},
      {11, "PBC consistency", 120, pbc_consistency},
      {12, "XX chain", 120, xx_chain},
      {13, "Potts zero-line exponents", 1200, potts},
      {14, "symmetry properties", 1e9, symmetry},
  };
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::cout << fmt::format("criterion {:2d} {} {}: {} [{:.1f} s{}]", c.id, pass ? "PASS" : "FAIL", c.title, o.detail,
                             secs, in_time ? "" : fmt::format(" > budget {:.0f} s", c.budget_s))
              << std::endl;
  }
  std::cout << fmt::format("{} criteria failed", failed) << std::endl;
  return failed == 0 ? 0 : 1;
}
