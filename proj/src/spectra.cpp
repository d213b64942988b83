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

#include "itz/spectra.hpp"

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

constexpr double kPi = std::numbers::pi;
constexpr double kTrivialLambda = 1e-12;

// (lambda sin((N+1)q) + sin(Nq)) / sin q, i.e. the OBC quantization condition
// multiplied through by its poles. Smooth on [0, pi] with the limits
// h(0) = lambda (N+1) + N and h(pi) = (-1)^N (lambda (N+1) - N).
double bracket_function(double q, int n, double lambda) {
  const double sn = std::sin(n * q);
  return lambda * std::cos(n * q) + sn * (1.0 + lambda * std::cos(q)) / std::sin(q);
}

double bracket_derivative(double q, int n, double lambda) {
  const double s = std::sin(q);
  const double g = (1.0 + lambda * std::cos(q)) / s;
  const double dg = -(lambda + std::cos(q)) / (s * s);
  return -lambda * n * std::sin(n * q) + n * std::cos(n * q) * g + std::sin(n * q) * dg;
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

double parity_sign(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// Bisection to floating-point resolution on a bracket with known end signs.
template <class F>
double bisect(F&& f, double lo, double hi, int sign_lo, int max_iter = 200) {
  for (int it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const int s = sign_of(f(mid));
    if (s == 0) return mid;
    if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Scaled sinh(a x) / sinh(b x) for 0 < a <= b without overflow.
double sinh_ratio(double a, double b, double x) {
  return std::exp((a - b) * x) * std::expm1(-2.0 * a * x) / std::expm1(-2.0 * b * x);
}

void sort_modes(std::vector<Mode>& modes) {
  std::stable_sort(modes.begin(), modes.end(), [](const Mode& a, const Mode& b) {
    if (a.kind != b.kind) return a.kind == ModeKind::RealBulk;
    return a.q.real() < b.q.real();
  });
}

}  // namespace

std::vector<double> QuasiparticleSpectrum::energies() const {
  std::vector<double> out;
  out.reserve(modes.size());
  for (const auto& m : modes) out.push_back(m.epsilon);
  return out;
}

const Mode* QuasiparticleSpectrum::pi_mode() const {
  for (const auto& m : modes)
    if (m.kind == ModeKind::ComplexPi) return &m;
  return nullptr;
}

double dispersion(double q, double lambda) {
  const double c = std::cos(0.5 * q);
  return std::sqrt((1.0 - lambda) * (1.0 - lambda) + 4.0 * lambda * c * c);
}

double xx_dispersion(double q, double lambda) { return std::abs(lambda + 2.0 * std::cos(q)); }

double obc_momentum_residual(double q, int n, double lambda) {
  return std::sin((n + 1) * q) / std::sin(n * q) + 1.0 / lambda;
}

double solve_pi_mode_q_prime(int n, double lambda) {
  if (lambda * (n + 1) >= n) return 0.0;
  if (lambda < kTrivialLambda) return std::numeric_limits<double>::infinity();
  // cosh x + sinh x coth(N x) equals sinh((N+1)x)/sinh(Nx) and stays finite.
  auto f = [n, lambda](double x) { return std::cosh(x) + std::sinh(x) / std::tanh(n * x) - 1.0 / lambda; };
  double lo = 1e-12;
  double hi = -std::log(lambda) + 1.0;
  for (int i = 0; i < 60 && f(hi) <= 0.0; ++i) hi *= 2.0;
  if (f(lo) >= 0.0 || f(hi) <= 0.0) throw Error(ErrorCode::NumericalFailure, "pi-mode bracket has no sign change");
  return bisect(f, lo, hi, -1);
}

double pi_mode_energy(double q_prime, int n, double lambda) {
  if (std::isinf(q_prime)) return 0.0;
  return std::exp(-n * q_prime) * (1.0 - lambda * std::exp(-q_prime));
}

QuasiparticleSpectrum solve_obc_momenta(const ModelSpec& model) {
  if (model.family != Family::TfiObc) throw Error(ErrorCode::InvalidArgument, "solve_obc_momenta needs tfi-obc");
  model.validate();
  const int n = model.n;
  const double lambda = model.lambda;
  QuasiparticleSpectrum out{model, {}, Channel::None};

  if (lambda < kTrivialLambda) {
    // Classical Ising limit: roots of sin(Nq) = 0 plus a zero-energy pi-mode.
    for (int k = 1; k < n; ++k) out.modes.push_back({kPi * k / n, 1.0, ModeKind::RealBulk});
    out.modes.push_back({{kPi, std::numeric_limits<double>::infinity()}, 0.0, ModeKind::ComplexPi});
    return out;
  }

  auto h = [n, lambda](double q) { return bracket_function(q, n, lambda); };
  const double h_pi = parity_sign(n) * (lambda * (n + 1) - n);

  for (int k = 0; k < n; ++k) {
    const double lo = kPi * k / n;
    const double hi = (k + 1 == n) ? kPi : kPi * (k + 1) / n;
    const int s_lo = (k == 0) ? 1 : sign_of(parity_sign(k));
    const int s_hi = (k + 1 == n) ? sign_of(h_pi) : sign_of(parity_sign(k + 1));
    if (s_hi == 0) {
      out.modes.push_back({kPi, std::abs(1.0 - lambda), ModeKind::RealBulk});
      continue;
    }
    if (s_lo == s_hi) continue;
    double q = bisect(h, lo, hi, s_lo);
    for (int step = 0; step < 3; ++step) {
      const double d = bracket_derivative(q, n, lambda);
      if (!std::isfinite(d) || std::abs(d) < 1e-300) break;
      const double trial = q - h(q) / d;
      if (!(trial > lo && trial < hi) || std::abs(h(trial)) >= std::abs(h(q))) break;
      q = trial;
    }
    out.modes.push_back({q, dispersion(q, lambda), ModeKind::RealBulk});
  }

  if (static_cast<int>(out.modes.size()) == n - 1) {
    const double qp = solve_pi_mode_q_prime(n, lambda);
    if (qp > 0.0) out.modes.push_back({{kPi, qp}, pi_mode_energy(qp, n, lambda), ModeKind::ComplexPi});
  }
  if (static_cast<int>(out.modes.size()) != n)
    throw Error(ErrorCode::RootCountMismatch,
                fmt::format("found {} modes for N={} lambda={}", out.modes.size(), n, lambda));
  sort_modes(out.modes);
  return out;
}

QuasiparticleSpectrum pbc_momenta(const ModelSpec& model, Channel channel) {
  if (model.family != Family::TfiPbc) throw Error(ErrorCode::InvalidArgument, "pbc_momenta needs tfi-pbc");
  if (channel == Channel::None) throw Error(ErrorCode::InvalidArgument, "pbc_momenta needs the odd or even channel");
  model.validate();
  const int n = model.n;
  QuasiparticleSpectrum out{model, {}, channel};
  const int offset = channel == Channel::Odd ? 0 : 1;
  for (int j = 0; j < n; ++j) {
    const int num = 2 * j + offset;  // q = num * pi / N before folding
    double q;
    if (num == n) {
      q = kPi;
    } else if (num > n) {
      q = -kPi * (2 * n - num) / n;
    } else {
      q = kPi * num / n;
    }
    out.modes.push_back({q, dispersion(q, model.lambda), ModeKind::RealBulk});
  }
  sort_modes(out.modes);
  return out;
}

std::vector<double> pbc_signed_energies(const QuasiparticleSpectrum& channel) {
  std::vector<double> out;
  out.reserve(channel.modes.size());
  for (const auto& m : channel.modes)
    out.push_back(m.q.real() == kPi ? channel.model.lambda - 1.0 : m.epsilon);
  return out;
}

QuasiparticleSpectrum xx_spectrum(const ModelSpec& model) {
  if (model.family != Family::XxObc) throw Error(ErrorCode::InvalidArgument, "xx_spectrum needs xx-obc");
  model.validate();
  QuasiparticleSpectrum out{model, {}, Channel::None};
  for (int j = 1; j <= model.n; ++j) {
    const double q = kPi * j / (model.n + 1);
    out.modes.push_back({q, xx_dispersion(q, model.lambda), ModeKind::RealBulk});
  }
  return out;
}

QuasiparticleSpectrum quasiparticle_spectrum(const ModelSpec& model) {
  switch (model.family) {
    case Family::TfiObc: return solve_obc_momenta(model);
    case Family::XxObc: return xx_spectrum(model);
    default:
      throw Error(ErrorCode::InvalidArgument,
                  fmt::format("{} has no single product-form spectrum", family_name(model.family)));
  }
}

EdgeModeProfile edge_mode_profile(const ModelSpec& model) {
  if (model.family != Family::TfiObc) throw Error(ErrorCode::InvalidArgument, "edge modes need tfi-obc");
  model.validate();
  const int n = model.n;
  const double qp = solve_pi_mode_q_prime(n, model.lambda);
  if (!(qp > 0.0))
    throw Error(ErrorCode::NoPiMode, fmt::format("no complex pi-mode at N={} lambda={}", n, model.lambda));

  EdgeModeProfile out;
  out.q_prime = qp;
  out.phi.assign(n, 0.0);
  out.psi.assign(n, 0.0);
  if (std::isinf(qp)) {
    out.phi.front() = 1.0;
    out.psi.back() = 1.0;
    return out;
  }
  for (int i = 1; i <= n; ++i) {
    // phi ~ (sinh Nq', -sinh (N-1)q', ...), psi ~ (-sinh q', sinh 2q', ...)
    out.phi[i - 1] = parity_sign(i + 1) * sinh_ratio(n + 1 - i, n, qp);
    out.psi[i - 1] = parity_sign(i) * sinh_ratio(i, n, qp);
  }
  for (auto* v : {&out.phi, &out.psi}) {
    double norm = 0.0;
    for (double x : *v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : *v) x /= norm;
  }
  return out;
}

void write_spectrum_csv(std::ostream& out, const QuasiparticleSpectrum& spectrum,
                        const std::vector<std::string>& metadata) {
  auto lines = metadata;
  if (lines.empty()) lines.push_back("model=" + model_key(spectrum.model));
  write_csv_header(out, {"j", "q_re", "q_im", "epsilon", "kind"}, lines);
  int j = 1;
  for (const auto& m : spectrum.modes) {
    out << j++ << ',' << format_real(m.q.real()) << ',' << format_real(m.q.imag()) << ','
        << format_real(m.epsilon) << ',' << (m.kind == ModeKind::RealBulk ? "REAL_BULK" : "COMPLEX_PI") << '\n';
  }
}

}  // namespace itz
