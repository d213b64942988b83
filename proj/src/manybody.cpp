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

#include "itz/manybody.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <fmt/format.h>
#include <lapacke.h>

#include "itz/error.hpp"

namespace itz {
namespace {

void check_dim(const ModelSpec& model, const Limits& limits) {
  const std::size_t dim = hilbert_dim(model);
  if (dim > limits.max_dim)
    throw Error(ErrorCode::DimensionCapExceeded,
                fmt::format("{} has dimension {} above the cap {}", model_key(model), dim, limits.max_dim));
}

std::vector<std::size_t> powers(int q, int n) {
  std::vector<std::size_t> p(n + 1, 1);
  for (int j = 1; j <= n; ++j) p[j] = p[j - 1] * static_cast<std::size_t>(q);
  return p;
}

int digit(std::size_t s, const std::vector<std::size_t>& pw, int q, int j) {
  return static_cast<int>((s / pw[j]) % static_cast<std::size_t>(q));
}

std::size_t with_digit(std::size_t s, const std::vector<std::size_t>& pw, int q, int j, int value) {
  const int old = digit(s, pw, q, j);
  return s + (static_cast<std::size_t>(value) - static_cast<std::size_t>(old)) * pw[j];
}

// Visits the nonzero elements H(t, s) of column s as emit(t, value).
template <class Emit>
void spin_half_column(const ModelSpec& model, std::size_t s, Emit&& emit) {
  const int n = model.n;
  const bool periodic = model.family == Family::TfiPbc && n > 2;
  const int bonds = periodic ? n : n - 1;
  auto z = [s](int j) { return ((s >> j) & 1U) ? -1.0 : 1.0; };
  double diag = 0.0;
  if (model.family == Family::XxObc) {
    for (int j = 0; j < n; ++j) diag -= model.lambda * z(j);
    for (int b = 0; b < bonds; ++b) {
      const int i = b, k = (b + 1) % n;
      if (z(i) != z(k)) emit((s ^ (std::size_t{1} << i)) ^ (std::size_t{1} << k), -2.0);
    }
  } else {
    for (int b = 0; b < bonds; ++b) diag -= z(b) * z((b + 1) % n);
    for (int j = 0; j < n; ++j) {
      diag -= model.probe_h * z(j);
      emit(s ^ (std::size_t{1} << j), -model.lambda);
    }
  }
  emit(s, diag);
}

// TFI at zero probe field in the sigma^x eigenbasis, where the fermion parity
// prod_j sigma^x_j is diagonal: -sum X_j X_{j+1} - lambda sum Z_j.
template <class Emit>
void tfi_dual_column(const ModelSpec& model, std::size_t s, Emit&& emit) {
  const int n = model.n;
  const bool periodic = model.family == Family::TfiPbc && n > 2;
  const int bonds = periodic ? n : n - 1;
  double diag = 0.0;
  for (int j = 0; j < n; ++j) diag -= model.lambda * (((s >> j) & 1U) ? -1.0 : 1.0);
  for (int b = 0; b < bonds; ++b) emit((s ^ (std::size_t{1} << b)) ^ (std::size_t{1} << ((b + 1) % n)), -1.0);
  emit(s, diag);
}

template <class Emit>
void potts_column(const ModelSpec& model, const std::vector<std::size_t>& pw, std::size_t s, Emit&& emit) {
  const int n = model.n;
  const int q = local_dim(model.family);
  double diag = 0.0;
  for (int j = 0; j < n; ++j) diag -= model.lambda * (digit(s, pw, q, j) == 0 ? q - 1.0 : -1.0);
  emit(s, diag);
  for (int j = 0; j + 1 < n; ++j) {
    const int a = digit(s, pw, q, j);
    const int b = digit(s, pw, q, j + 1);
    for (int d = 1; d < q; ++d) {
      std::size_t t = with_digit(s, pw, q, j, (a - d + q) % q);
      t = with_digit(t, pw, q, j + 1, (b + d) % q);
      emit(t, -1.0);
    }
  }
}

std::vector<double> solve_block(Eigen::MatrixXd& a) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  std::vector<double> w(static_cast<std::size_t>(n));
  const lapack_int info = n == 0 ? 0 : LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'U', n, a.data(), n, w.data());
  if (info != 0) throw Error(ErrorCode::EigensolverFailure, fmt::format("dsyevd returned info={}", info));
  return w;
}

// Eigenvalues only, one dense block per conserved-charge sector: fermion
// parity (TFI, zero probe field), particle number (XX), Z_q charge (Potts).
std::vector<double> blocked_eigenvalues(const ModelSpec& model) {
  const std::size_t dim = hilbert_dim(model);
  const int q = local_dim(model.family);
  const auto pw = powers(q, model.n);
  std::vector<int> label(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    if (is_potts(model.family)) {
      int c = 0;
      for (int j = 0; j < model.n; ++j) c += digit(s, pw, q, j);
      label[s] = c % q;
    } else {
      const int pop = std::popcount(s);
      label[s] = model.family == Family::XxObc ? pop : pop % 2;
    }
  }
  const int sectors = *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<std::size_t>> members(sectors);
  std::vector<std::size_t> index(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    index[s] = members[label[s]].size();
    members[label[s]].push_back(s);
  }
  std::vector<double> all;
  all.reserve(dim);
  for (const auto& m : members) {
    const auto k = static_cast<Eigen::Index>(m.size());
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index c = 0; c < k; ++c) {
      auto emit = [&](std::size_t t, double v) { block(static_cast<Eigen::Index>(index[t]), c) += v; };
      if (is_potts(model.family))
        potts_column(model, pw, m[c], emit);
      else if (model.family == Family::XxObc)
        spin_half_column(model, m[c], emit);
      else
        tfi_dual_column(model, m[c], emit);
    }
    const auto w = solve_block(block);
    all.insert(all.end(), w.begin(), w.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

void fill_diagonals(const Eigen::MatrixXd& v, const ModelSpec& model, ManyBodySpectrum& out) {
  const int n = model.n;
  const std::size_t dim = static_cast<std::size_t>(v.rows());
  out.diag_sx.assign(dim, 0.0);
  out.diag_sz.assign(dim, 0.0);
  if (is_potts(model.family)) {
    const int q = local_dim(model.family);
    const auto pw = powers(q, n);
    std::vector<double> sx(dim, 0.0);
    std::vector<std::vector<std::size_t>> shifted(n, std::vector<std::size_t>(dim));
    for (std::size_t s = 0; s < dim; ++s) {
      for (int j = 0; j < n; ++j) {
        const int a = digit(s, pw, q, j);
        sx[s] += a == 0 ? q - 1.0 : -1.0;
        shifted[j][s] = with_digit(s, pw, q, j, (a - 1 + q) % q);
      }
    }
    for (std::size_t c = 0; c < dim; ++c) {
      const double* col = v.col(c).data();
      double ax = 0.0, az = 0.0;
      for (std::size_t s = 0; s < dim; ++s) {
        ax += col[s] * col[s] * sx[s];
        for (int j = 0; j < n; ++j) az += col[shifted[j][s]] * col[s];
      }
      out.diag_sx[c] = ax / n;
      out.diag_sz[c] = az / n;
    }
    return;
  }
  std::vector<double> zsum(dim, 0.0);
  for (std::size_t s = 0; s < dim; ++s)
    for (int j = 0; j < n; ++j) zsum[s] += ((s >> j) & 1U) ? -1.0 : 1.0;
  for (std::size_t c = 0; c < dim; ++c) {
    const double* col = v.col(c).data();
    double ax = 0.0, az = 0.0;
    for (std::size_t s = 0; s < dim; ++s) {
      az += col[s] * col[s] * zsum[s];
      double flip = 0.0;
      for (int j = 0; j < n; ++j) flip += col[s ^ (std::size_t{1} << j)];
      ax += col[s] * flip;
    }
    out.diag_sx[c] = ax / n;
    out.diag_sz[c] = az / n;
  }
}

ManyBodySpectrum enumerate(const ModelSpec& model, const std::vector<double>& eps) {
  std::vector<double> e{0.0};
  e.reserve(std::size_t{1} << eps.size());
  for (double x : eps) {
    const std::size_t k = e.size();
    e.resize(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
      e[k + i] = e[i] + x;
      e[i] -= x;
    }
  }
  std::sort(e.begin(), e.end());
  ManyBodySpectrum out;
  out.model = model;
  out.dim = e.size();
  out.energies = std::move(e);
  return out;
}

}  // namespace

Eigen::MatrixXd build_hamiltonian(const ModelSpec& model, const Limits& limits) {
  model.validate(limits);
  check_dim(model, limits);
  const std::size_t dim = hilbert_dim(model);
  const auto pw = powers(local_dim(model.family), model.n);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t s = 0; s < dim; ++s) {
    auto emit = [&](std::size_t t, double v) { h(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(s)) += v; };
    if (is_potts(model.family))
      potts_column(model, pw, s, emit);
    else
      spin_half_column(model, s, emit);
  }
  return h;
}

ManyBodySpectrum diagonalize(const Eigen::MatrixXd& h, const ModelSpec& model, bool with_diagonals) {
  if (h.rows() != h.cols()) throw Error(ErrorCode::DimensionMismatch, "Hamiltonian is not square");
  const lapack_int n = static_cast<lapack_int>(h.rows());
  Eigen::MatrixXd a = h;
  std::vector<double> w(static_cast<std::size_t>(n));
  const lapack_int info =
      n == 0 ? 0 : LAPACKE_dsyevd(LAPACK_COL_MAJOR, with_diagonals ? 'V' : 'N', 'U', n, a.data(), n, w.data());
  if (info != 0) throw Error(ErrorCode::EigensolverFailure, fmt::format("dsyevd returned info={}", info));
  ManyBodySpectrum out;
  out.model = model;
  out.dim = static_cast<std::size_t>(n);
  out.energies = std::move(w);
  if (with_diagonals) fill_diagonals(a, model, out);
  return out;
}

ManyBodySpectrum exact_spectrum(const ModelSpec& model, bool with_diagonals, const Limits& limits) {
  if (with_diagonals || model.probe_h != 0.0) return diagonalize(build_hamiltonian(model, limits), model, with_diagonals);
  model.validate(limits);
  check_dim(model, limits);
  ManyBodySpectrum out;
  out.model = model;
  out.energies = blocked_eigenvalues(model);
  out.dim = out.energies.size();
  return out;
}

ManyBodySpectrum free_fermion_manybody(const QuasiparticleSpectrum& spectrum, const Limits& limits) {
  if (!is_free_fermion(spectrum.model.family))
    throw Error(ErrorCode::InvalidArgument, "free-fermion construction needs a TFI or XX spectrum");
  if (static_cast<int>(spectrum.modes.size()) > limits.max_enumeration_n)
    throw Error(ErrorCode::DimensionCapExceeded,
                fmt::format("2^{} patterns exceed the enumeration cap 2^{}", spectrum.modes.size(),
                            limits.max_enumeration_n));
  return enumerate(spectrum.model, spectrum.energies());
}

ManyBodySpectrum free_fermion_manybody_pbc(const QuasiparticleSpectrum& odd, const QuasiparticleSpectrum& even,
                                           const Limits& limits) {
  if (odd.channel != Channel::Odd || even.channel != Channel::Even || odd.model.n != even.model.n ||
      odd.model.lambda != even.model.lambda)
    throw Error(ErrorCode::ChannelMismatch, "need odd and even channels of the same chain");
  const int n = odd.model.n;
  if (n > limits.max_enumeration_n)
    throw Error(ErrorCode::DimensionCapExceeded, fmt::format("N={} exceeds the enumeration cap", n));
  const auto eo = pbc_signed_energies(odd);
  const auto ee = pbc_signed_energies(even);
  std::vector<double> e;
  e.reserve(std::size_t{1} << n);
  const std::size_t patterns = std::size_t{1} << n;
  for (std::size_t p = 0; p < patterns; ++p) {
    // bit set = s_q = -1
    const bool odd_count = (__builtin_popcountll(p) & 1) != 0;
    const auto& eps = odd_count ? eo : ee;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) sum += ((p >> k) & 1U) ? -eps[k] : eps[k];
    e.push_back(sum);
  }
  std::sort(e.begin(), e.end());
  ManyBodySpectrum out;
  out.model = odd.model;
  out.dim = e.size();
  out.energies = std::move(e);
  return out;
}

OracleReport oracle_compare(const ManyBodySpectrum& a, const ManyBodySpectrum& b, double tol) {
  if (a.energies.size() != b.energies.size())
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("spectra have {} and {} levels", a.energies.size(), b.energies.size()));
  auto x = a.energies;
  auto y = b.energies;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  OracleReport r;
  r.tolerance = tol;
  for (std::size_t i = 0; i < x.size(); ++i) r.max_deviation = std::max(r.max_deviation, std::abs(x[i] - y[i]));
  r.pass = r.max_deviation < tol;
  return r;
}

}  // namespace itz
