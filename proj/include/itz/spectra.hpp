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

#ifndef ITZ_SPECTRA_HPP
#define ITZ_SPECTRA_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "itz/model.hpp"

namespace itz {

enum class ModeKind { RealBulk, ComplexPi };
enum class Channel { None, Odd, Even };

/// One quasiparticle mode. For ComplexPi modes q = pi + i q'.
struct Mode {
  std::complex<double> q;
  double epsilon = 0.0;
  ModeKind kind = ModeKind::RealBulk;
};

struct QuasiparticleSpectrum {
  ModelSpec model;
  std::vector<Mode> modes;  // ascending Re q, ComplexPi last
  Channel channel = Channel::None;

  std::vector<double> energies() const;
  const Mode* pi_mode() const;
};

/// Majorana edge-mode profiles of the complex pi-mode (OBC TFI, lambda < 1).
struct EdgeModeProfile {
  std::vector<double> phi;  // localized at site 1
  std::vector<double> psi;  // localized at site N
  double q_prime = 0.0;
};

/// TFI quasiparticle energy sqrt(1 + lambda^2 + 2 lambda cos q), evaluated in
/// the cancellation-free form (1 - lambda)^2 + 4 lambda cos^2(q/2).
double dispersion(double q, double lambda);

/// XX quasiparticle energy |lambda + 2 cos q|.
double xx_dispersion(double q, double lambda);

/// sin((N+1) q) / sin(N q) + 1/lambda. Zero at every allowed real OBC momentum.
double obc_momentum_residual(double q, int n, double lambda);

/// Root q' > 0 of sinh((N+1) q') / sinh(N q') = 1/lambda, or 0 if none exists
/// (lambda >= N/(N+1)).
double solve_pi_mode_q_prime(int n, double lambda);

/// Energy of the complex pi-mode, sqrt(1 + lambda^2 - 2 lambda cosh q'),
/// evaluated through the exact identity e^{-N q'} (1 - lambda e^{-q'}) that
/// holds on the root and avoids catastrophic cancellation.
double pi_mode_energy(double q_prime, int n, double lambda);

/// Real OBC momenta from bracketed bisection plus, when only N-1 real roots
/// exist, the complex pi-mode. Throws RootCountMismatch if the total is not N.
QuasiparticleSpectrum solve_obc_momenta(const ModelSpec& model);

/// PBC momenta of one fermion-parity channel: Odd = 2 pi k / N, Even =
/// (2k+1) pi / N, both folded into (-pi, pi].
QuasiparticleSpectrum pbc_momenta(const ModelSpec& model, Channel channel);

/// OBC XX chain: q = j pi / (N+1), epsilon = |lambda + 2 cos q|.
QuasiparticleSpectrum xx_spectrum(const ModelSpec& model);

/// Energies of a PBC channel with the q = pi mode carrying its signed value
/// lambda - 1 instead of |1 - lambda|. The four-term partition function and
/// the parity-projected many-body spectrum are exact only with this sign.
std::vector<double> pbc_signed_energies(const QuasiparticleSpectrum& channel);

/// Dispatches to solve_obc_momenta or xx_spectrum.
QuasiparticleSpectrum quasiparticle_spectrum(const ModelSpec& model);

EdgeModeProfile edge_mode_profile(const ModelSpec& model);

/// Columns j,q_re,q_im,epsilon,kind with 17 significant digits.
void write_spectrum_csv(std::ostream& out, const QuasiparticleSpectrum& spectrum,
                        const std::vector<std::string>& metadata = {});

}  // namespace itz

#endif  // ITZ_SPECTRA_HPP
