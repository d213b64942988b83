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

#include "itz/complex_zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include <fmt/format.h>

#include "itz/csv.hpp"
#include "itz/error.hpp"

namespace itz {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxStepPhase = kPi / 4.0;
constexpr int kMaxPhaseDepth = 24;

struct PhaseResult {
  double dphase = 0.0;
  bool ambiguous = false;
};

class SegmentPhase {
 public:
  SegmentPhase(const PartitionEvaluator& z, double ambiguity) : z_(z), ambiguity_(ambiguity) {}

  // Continuous change of arg Z(tau) from a to b.
  PhaseResult operator()(cplx a, cplx b, int samples) const {
    if ((a.real() < 0.0 && b.real() > 0.0) || (a.real() > 0.0 && b.real() < 0.0)) {
      const cplx c = a + (b - a) * (-a.real() / (b.real() - a.real()));
      const cplx cross(0.0, c.imag());
      auto left = (*this)(a, cross, std::max(2, samples / 2));
      auto right = (*this)(cross, b, std::max(2, samples / 2));
      return {left.dphase + right.dphase, left.ambiguous || right.ambiguous};
    }
    const double shift = (a.real() + b.real()) >= 0.0 ? z_.min_level() : z_.max_level();
    PhaseResult out;
    cplx prev_tau = a;
    cplx prev = eval(a, shift, out);
    for (int k = 1; k <= samples; ++k) {
      const cplx tau = a + (b - a) * (static_cast<double>(k) / samples);
      const cplx cur = eval(tau, shift, out);
      out.dphase += refine(prev_tau, prev, tau, cur, shift, 0, out);
      prev_tau = tau;
      prev = cur;
    }
    // exp(-shift u) contributes -shift Im(u) exactly.
    out.dphase -= shift * ((1.0 / b).imag() - (1.0 / a).imag());
    return out;
  }

 private:
  cplx eval(cplx tau, double shift, PhaseResult& out) const {
    const auto s = z_.at_u(1.0 / tau, shift);
    if (s.relative() < ambiguity_) out.ambiguous = true;
    return s.sum;
  }

  double refine(cplx ta, cplx sa, cplx tb, cplx sb, double shift, int depth, PhaseResult& out) const {
    const double d = std::arg(sb / sa);
    if (std::abs(d) <= kMaxStepPhase) return d;
    if (depth >= kMaxPhaseDepth) {
      out.ambiguous = true;
      return d;
    }
    const cplx tm = 0.5 * (ta + tb);
    const cplx sm = eval(tm, shift, out);
    return refine(ta, sa, tm, sm, shift, depth + 1, out) + refine(tm, sm, tb, sb, shift, depth + 1, out);
  }

  const PartitionEvaluator& z_;
  double ambiguity_;
};

int rounded_winding(double total, bool& ambiguous) {
  const double w = total / (2.0 * kPi);
  const double r = std::round(w);
  if (std::abs(w - r) > 0.1) ambiguous = true;
  return static_cast<int>(r);
}

cplx center(const Region& r) { return {0.5 * (r.re_lo + r.re_hi), 0.5 * (r.im_lo + r.im_hi)}; }

bool contains(const Region& r, cplx tau, double margin) {
  const double mx = margin * (r.re_hi - r.re_lo), my = margin * (r.im_hi - r.im_lo);
  return tau.real() >= r.re_lo - mx && tau.real() <= r.re_hi + mx && tau.imag() >= r.im_lo - my &&
         tau.imag() <= r.im_hi + my;
}

void add_unique(std::vector<ComplexZero>& zeros, const ComplexZero& z) {
  const cplx t = z.tau.value();
  for (auto& other : zeros) {
    if (std::abs(other.tau.value() - t) <= 1e-7 * std::max(1.0, std::abs(t))) {
      other.winding_certificate = std::max(other.winding_certificate, z.winding_certificate);
      return;
    }
  }
  zeros.push_back(z);
}

struct CellSearch {
  const PartitionEvaluator& z;
  const SearchOptions& opt;
  std::vector<ComplexZero>& found;

  bool try_newton(const Region& cell, cplx seed, int winding) {
    try {
      auto zero = refine_zero(z, ComplexTemperature::from(seed), opt.newton_max_iter, opt.target_residual);
      if (!contains(cell, zero.tau.value(), 0.05)) return false;
      zero.winding_certificate = winding;
      add_unique(found, zero);
      return true;
    } catch (const Error&) {
      return false;
    }
  }

  void resolve(const Region& cell, int winding, int depth) {
    if (winding <= 0) return;
    if (winding == 1 || depth >= opt.max_subdivision) {
      const double dx = cell.re_hi - cell.re_lo, dy = cell.im_hi - cell.im_lo;
      const cplx c = center(cell);
      const cplx seeds[] = {c,
                            c + cplx(-0.25 * dx, -0.25 * dy),
                            c + cplx(0.25 * dx, -0.25 * dy),
                            c + cplx(-0.25 * dx, 0.25 * dy),
                            c + cplx(0.25 * dx, 0.25 * dy)};
      int hits = 0;
      for (const cplx& s : seeds) {
        if (try_newton(cell, s, winding)) ++hits;
        if (hits >= winding) break;
      }
      return;
    }
    const double xm = 0.5 * (cell.re_lo + cell.re_hi), ym = 0.5 * (cell.im_lo + cell.im_hi);
    const Region parts[] = {{cell.re_lo, xm, cell.im_lo, ym},
                            {xm, cell.re_hi, cell.im_lo, ym},
                            {cell.re_lo, xm, ym, cell.im_hi},
                            {xm, cell.re_hi, ym, cell.im_hi}};
    for (const auto& p : parts) {
      int w = 0;
      try {
        w = winding_number(z, p, opt.samples_per_side, opt.ambiguity);
      } catch (const Error&) {
        // a zero sits on the split line; Newton from the parent cell instead
        resolve(cell, winding, opt.max_subdivision);
        return;
      }
      resolve(p, w, depth + 1);
    }
  }
};

}  // namespace

int winding_number(const PartitionEvaluator& z, const Region& cell, int samples_per_side, double ambiguity) {
  SegmentPhase phase(z, ambiguity);
  const cplx a(cell.re_lo, cell.im_lo), b(cell.re_hi, cell.im_lo), c(cell.re_hi, cell.im_hi),
      d(cell.re_lo, cell.im_hi);
  double total = 0.0;
  bool ambiguous = false;
  for (auto [p, q] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, d}, std::pair{d, a}}) {
    const auto r = phase(p, q, samples_per_side);
    total += r.dphase;
    ambiguous = ambiguous || r.ambiguous;
  }
  const int w = rounded_winding(total, ambiguous);
  if (ambiguous) throw Error(ErrorCode::WindingAmbiguous, "zero on or near the contour");
  return w;
}

ComplexZero refine_zero(const PartitionEvaluator& z, ComplexTemperature start, int max_iter, double target) {
  cplx tau = start.value();
  if (std::abs(tau) <= 1e-12) throw Error(ErrorCode::TauZero, "Newton start at tau = 0");
  cplx u = 1.0 / tau;
  auto log_abs = [](const ShiftedZ& s, cplx uu) { return std::log(std::abs(s.sum)) - s.shift * uu.real(); };
  ShiftedZ cur = z.at_u(u);
  int polish = 0;
  for (int it = 0; it < max_iter; ++it) {
    if (cur.relative() < target && ++polish > 2) break;
    if (cur.dsum == 0.0) break;
    cplx step = cur.sum / cur.dsum;
    const double base = log_abs(cur, u);
    bool accepted = false;
    for (int bt = 0; bt < 40; ++bt) {
      const cplx trial = u - step;
      if (std::abs(trial) > 1e-300) {
        const auto next = z.at_u(trial);
        if (log_abs(next, trial) < base || next.relative() < target) {
          u = trial;
          cur = next;
          accepted = true;
          break;
        }
      }
      step *= 0.5;
    }
    if (!accepted) break;
    if (std::abs(step) < 1e-15 * std::abs(u) && cur.relative() < target) break;
  }
  if (!(cur.relative() < target))
    throw Error(ErrorCode::NoZeroFound, fmt::format("Newton stalled at relative |Z| = {:.3e}", cur.relative()));
  ComplexZero out;
  out.tau = ComplexTemperature::from(1.0 / u);
  out.newton_residual = cur.relative();
  out.winding_certificate = 1;
  return out;
}

std::vector<ComplexZero> complex_zero_search(const PartitionEvaluator& z, const Region& region,
                                             const SearchOptions& options) {
  if (options.grid < 1 || options.samples_per_side < 2)
    throw Error(ErrorCode::InvalidArgument, "grid and samples per side must be positive");
  if (!(region.re_hi > region.re_lo) || !(region.im_hi > region.im_lo))
    throw Error(ErrorCode::InvalidArgument, "search region is empty");
  if (region.re_lo <= 0.0 && region.re_hi >= 0.0 && region.im_lo <= 0.0 && region.im_hi >= 0.0)
    throw Error(ErrorCode::TauZero, "search region contains tau = 0");

  const int g = options.grid;
  const double dx = (region.re_hi - region.re_lo) / g, dy = (region.im_hi - region.im_lo) / g;
  for (int nudge = 0; nudge <= options.max_nudges; ++nudge) {
    const double ox = nudge == 0 ? 0.0 : dx * 0.0173 * nudge * (nudge % 2 == 0 ? 1 : -1);
    const double oy = nudge == 0 ? 0.0 : dy * 0.0291 * nudge * (nudge % 3 == 0 ? -1 : 1);
    std::vector<double> xs(g + 1), ys(g + 1);
    for (int i = 0; i <= g; ++i) {
      xs[i] = region.re_lo + ox + dx * i;
      ys[i] = region.im_lo + oy + dy * i;
    }
    if (xs.front() <= 0.0 && xs.back() >= 0.0 && ys.front() <= 0.0 && ys.back() >= 0.0) continue;

    SegmentPhase phase(z, options.ambiguity);
    bool ambiguous = false;
    // horizontal[i][j]: (x_i, y_j) -> (x_{i+1}, y_j); vertical[i][j]: (x_i, y_j) -> (x_i, y_{j+1})
    std::vector<std::vector<double>> horizontal(g, std::vector<double>(g + 1));
    std::vector<std::vector<double>> vertical(g + 1, std::vector<double>(g));
    for (int i = 0; i < g && !ambiguous; ++i) {
      for (int j = 0; j <= g && !ambiguous; ++j) {
        const auto r = phase({xs[i], ys[j]}, {xs[i + 1], ys[j]}, options.samples_per_side);
        horizontal[i][j] = r.dphase;
        ambiguous = r.ambiguous;
      }
    }
    for (int i = 0; i <= g && !ambiguous; ++i) {
      for (int j = 0; j < g && !ambiguous; ++j) {
        const auto r = phase({xs[i], ys[j]}, {xs[i], ys[j + 1]}, options.samples_per_side);
        vertical[i][j] = r.dphase;
        ambiguous = r.ambiguous;
      }
    }
    if (ambiguous) continue;

    std::vector<ComplexZero> found;
    CellSearch search{z, options, found};
    for (int i = 0; i < g && !ambiguous; ++i) {
      for (int j = 0; j < g; ++j) {
        const double total = horizontal[i][j] + vertical[i + 1][j] - horizontal[i][j + 1] - vertical[i][j];
        bool amb = false;
        const int w = rounded_winding(total, amb);
        if (amb) {
          ambiguous = true;
          break;
        }
        search.resolve({xs[i], xs[i + 1], ys[j], ys[j + 1]}, w, 0);
      }
    }
    if (ambiguous) continue;

    if (options.add_conjugates) {
      const auto n = found.size();
      for (std::size_t k = 0; k < n; ++k) {
        if (found[k].tau.im == 0.0) continue;
        auto partner = found[k];
        partner.tau.im = -partner.tau.im;
        add_unique(found, partner);
      }
    }
    std::sort(found.begin(), found.end(), [](const ComplexZero& a, const ComplexZero& b) {
      const double ma = std::abs(a.tau.value()), mb = std::abs(b.tau.value());
      if (ma != mb) return ma > mb;
      return a.tau.im > b.tau.im;
    });
    return found;
  }
  throw Error(ErrorCode::WindingAmbiguous,
              fmt::format("zeros remain on the grid after {} nudges", options.max_nudges));
}

std::vector<ComplexZero> complex_zero_search(const ManyBodySpectrum& spectrum, const Region& region,
                                             const SearchOptions& options) {
  return complex_zero_search(PartitionEvaluator(spectrum), region, options);
}

LowestZeroTrack track_lowest_zero(const ManyBodySpectrum& spectrum, double degeneracy_tol) {
  std::vector<double> e = spectrum.energies;
  std::sort(e.begin(), e.end());
  if (e.size() < 2) throw Error(ErrorCode::NoZeroFound, "need at least two levels");
  auto same = [degeneracy_tol](double a, double b) { return std::abs(a - b) <= degeneracy_tol * std::max(1.0, std::abs(a)); };
  std::size_t k0 = 1;
  while (k0 < e.size() && same(e[k0], e[0])) ++k0;
  if (k0 == e.size()) throw Error(ErrorCode::NoZeroFound, "spectrum is fully degenerate");
  std::size_t k1 = k0 + 1;
  while (k1 < e.size() && same(e[k1], e[k0])) ++k1;
  const double g0 = static_cast<double>(k0), g1 = static_cast<double>(k1 - k0);
  const double gap = e[k0] - e[0];
  const std::vector<double> low(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k1));
  const std::vector<double> rest(e.begin() + static_cast<std::ptrdiff_t>(k1), e.end());
  const PartitionEvaluator z_low(low, 0.0), z_rest(rest.empty() ? low : rest, 0.0);
  const PartitionEvaluator z_full(spectrum);

  auto homotopy = [&](cplx u, double s, cplx& f, cplx& df, double& scale) {
    const double shift = u.real() >= 0.0 ? e.front() : e.back();
    const auto a = z_low.at_u(u, shift);
    f = a.sum;
    df = a.dsum;
    scale = a.abs_sum;
    if (!rest.empty()) {
      const auto b = z_rest.at_u(u, shift);
      f += s * b.sum;
      df += s * b.dsum;
      scale += s * b.abs_sum;
    }
  };
  auto newton = [&](cplx& u, double s) {
    for (int it = 0; it < 40; ++it) {
      cplx f, df;
      double scale;
      homotopy(u, s, f, df, scale);
      if (std::abs(f) < 1e-13 * scale) return true;
      if (df == 0.0) return false;
      u -= f / df;
    }
    return false;
  };

  LowestZeroTrack out;
  const cplx u0 = cplx(std::log(g1 / g0), -kPi) / gap;
  out.seed = ComplexTemperature::from(1.0 / u0);
  cplx u = u0;
  double s = 0.0, ds = 0.02;
  while (s < 1.0) {
    const double next = std::min(1.0, s + ds);
    cplx trial = u;
    if (newton(trial, next) && std::abs(trial - u) < 0.25 * std::abs(u)) {
      u = trial;
      s = next;
      ds = std::min(0.1, ds * 1.5);
      ++out.steps;
    } else {
      ds *= 0.5;
      if (ds < 1e-7) throw Error(ErrorCode::NoZeroFound, fmt::format("continuation stalled at s = {}", s));
    }
  }
  out.zero = refine_zero(z_full, ComplexTemperature::from(1.0 / u));
  return out;
}

FirstSector first_sector(const ManyBodySpectrum& spectrum, const SearchOptions& options) {
  FirstSector out;
  out.lowest = track_lowest_zero(spectrum).zero;
  const cplx low = out.lowest.tau.value();
  const double r0 = std::abs(low);
  if (!(low.imag() > 0.0)) throw Error(ErrorCode::NoZeroFound, "lowest zero is not in the upper half plane");
  const PartitionEvaluator z(spectrum);
  SearchOptions opt = options;
  opt.add_conjugates = false;
  double top = 3.0 * r0;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const Region region{-0.3 * top, 0.5 * top, 0.9 * low.imag(), top};
    auto zeros = complex_zero_search(z, region, opt);
    bool touches = false;
    out.zeros.clear();
    for (const auto& zz : zeros) {
      const cplx t = zz.tau.value();
      if (t.imag() > 0.85 * top || t.real() > 0.45 * top || t.real() < -0.25 * top) touches = true;
      if (std::abs(t) >= r0 * (1.0 - 1e-9)) out.zeros.push_back(zz);
    }
    if (!touches) break;
    top *= 1.5;
  }
  bool has_lowest = false;
  for (const auto& zz : out.zeros) has_lowest = has_lowest || std::abs(zz.tau.value() - low) < 1e-7 * r0;
  if (!has_lowest) out.zeros.push_back(out.lowest);
  std::sort(out.zeros.begin(), out.zeros.end(),
            [](const ComplexZero& a, const ComplexZero& b) { return std::abs(a.tau.value()) > std::abs(b.tau.value()); });
  const auto n = out.zeros.size();
  if (n >= 2) {
    out.d_plus = std::abs(out.zeros[0].tau.value() - out.zeros[1].tau.value());
    out.d_minus = std::abs(out.zeros[n - 1].tau.value() - out.zeros[n - 2].tau.value());
  }
  return out;
}

void write_complex_zeros_csv(std::ostream& out, const std::vector<ComplexZero>& zeros,
                             const std::vector<std::string>& metadata) {
  write_csv_header(out, {"T_re", "T_im", "residual", "winding"}, metadata);
  for (const auto& z : zeros)
    out << format_real(z.tau.re) << ',' << format_real(z.tau.im) << ',' << format_real(z.newton_residual) << ','
        << z.winding_certificate << '\n';
}

}  // namespace itz
