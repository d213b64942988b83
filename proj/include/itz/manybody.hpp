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

#ifndef ITZ_MANYBODY_HPP
#define ITZ_MANYBODY_HPP

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "itz/model.hpp"
#include "itz/spectra.hpp"

namespace itz {

/// Full many-body spectrum. diag_sx / diag_sz are either empty or hold
/// <n|S|n> for every level, with S = N^-1 sum_j of the site operator.
struct ManyBodySpectrum {
  ModelSpec model;
  std::vector<double> energies;  // ascending
  std::vector<double> diag_sx;
  std::vector<double> diag_sz;
  std::size_t dim = 0;

  bool has_diagonals() const { return !diag_sx.empty() && diag_sx.size() == energies.size(); }
};

/// Dense Hamiltonian in the computational basis.
///  TFI:   -sum sz_j sz_{j+1} - lambda sum sx_j - h sum sz_j (PBC adds the bond N-1,0)
///  XX:    -sum (sx_j sx_{j+1} + sy_j sy_{j+1}) - lambda sum sz_j
///  Potts: -sum_j sum_d M_j^d M_{j+1}^{q-d} - lambda sum_j S_j^x
/// Spin-1/2 basis index bit j is site j with bit value 0 meaning sz = +1.
/// Potts basis index digit j (base q) is the Potts state at site j, with M the
/// cyclic shift |k> -> |k-1> and S^x = diag(q-1, -1, ..., -1).
Eigen::MatrixXd build_hamiltonian(const ModelSpec& model, const Limits& limits = {});

/// Symmetric eigensolver (LAPACK dsyevd). With diagonals the eigenvectors are
/// formed and <n|S_x|n>, <n|S_z|n> evaluated for the model's operators.
ManyBodySpectrum diagonalize(const Eigen::MatrixXd& h, const ModelSpec& model, bool with_diagonals = false);

/// build_hamiltonian followed by diagonalize. Without diagonals and at zero
/// probe field the eigenvalues come from conserved-charge blocks instead.
ManyBodySpectrum exact_spectrum(const ModelSpec& model, bool with_diagonals = false, const Limits& limits = {});

/// All 2^N patterns E = sum_q s_q eps_q, ascending.
ManyBodySpectrum free_fermion_manybody(const QuasiparticleSpectrum& spectrum, const Limits& limits = {});

/// PBC spectrum assembled from both channels: even-channel patterns with an
/// even number of s_q = -1 and odd-channel patterns with an odd number, using
/// the signed q = pi energy.
ManyBodySpectrum free_fermion_manybody_pbc(const QuasiparticleSpectrum& odd, const QuasiparticleSpectrum& even,
                                           const Limits& limits = {});

struct OracleReport {
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Max elementwise deviation of two sorted spectra.
OracleReport oracle_compare(const ManyBodySpectrum& a, const ManyBodySpectrum& b, double tol);

}  // namespace itz

#endif  // ITZ_MANYBODY_HPP
