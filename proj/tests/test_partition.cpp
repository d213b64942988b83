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

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "itz/csv.hpp"
#include "itz/error.hpp"
#include "itz/manybody.hpp"
#include "itz/partition.hpp"
#include "itz/spectra.hpp"

using namespace itz;

namespace {

cplx brute_z(const std::vector<double>& e, cplx tau) {
  cplx z = 0.0;
  for (double x : e) z += std::exp(-x / tau);
  return z;
}

}  // namespace

TEST_CASE("trace matches a direct sum") {
  const auto s = exact_spectrum({Family::TfiObc, 6, 0.8, 0.0});
  for (cplx tau : {cplx(0.0, 0.4), cplx(0.3, 1.1), cplx(-0.7, 0.2), cplx(2.0, 0.0), cplx(-1.5, -0.5)}) {
    const cplx z = z_trace(s, ComplexTemperature::from(tau));
    const cplx ref = brute_z(s.energies, tau);
    CHECK(std::abs(z - ref) <= 1e-10 * std::abs(ref) + 1e-12);
  }
  CHECK_THROWS_AS((z_trace(s, {0.0, 0.0})), Error);
  CHECK_THROWS_AS((z_trace(s, {1e-13, 0.0})), Error);
}

TEST_CASE("shifted evaluation survives large exponents") {
  const auto s = exact_spectrum({Family::TfiObc, 10, 1.0, 0.0});
  const PartitionEvaluator z(s.energies);
  const auto v = z.at({0.01, 0.0});
  CHECK(std::isfinite(std::abs(v.sum)));
  CHECK(v.relative() > 0.0);
  CHECK(v.relative() <= 1.0);
  const auto w = z.at({-0.01, 0.0});
  CHECK(std::isfinite(std::abs(w.sum)));
}

TEST_CASE("degenerate levels are merged") {
  const PartitionEvaluator z({-1.0, -1.0, 0.0, 2.0, 2.0, 2.0});
  CHECK(z.levels().size() == 3);
  CHECK(z.weights()[2] == 3.0);
  CHECK(z.dim() == 6);
  const cplx tau(0.2, 0.9);
  const auto v = z.at(ComplexTemperature::from(tau));
  CHECK((std::abs(v.z(1.0 / tau) - brute_z({-1, -1, 0, 2, 2, 2}, tau)) < 1e-12));
}

TEST_CASE("imaginary-temperature product equals the trace") {
  for (double lambda : {0.5, 1.0, 1.3}) {
    const ModelSpec m{Family::TfiObc, 8, lambda, 0.0};
    const auto q = solve_obc_momenta(m);
    const auto s = exact_spectrum(m);
    for (double t : {0.3, 0.77, 1.9}) {
      const cplx z = z_trace(s, {0.0, t});
      CHECK(std::abs(z.imag()) < 1e-9 * 256);
      CHECK(z_product_obc(q, t) == doctest::Approx(z.real()).epsilon(1e-9).scale(256));
    }
  }
  CHECK_THROWS_AS((z_product_obc(solve_obc_momenta({Family::TfiObc, 4, 1.0, 0.0}), 0.0)), Error);
}

TEST_CASE("log form of the product agrees for long chains") {
  const auto q = solve_obc_momenta({Family::TfiObc, 30, 1.2, 0.0});
  const auto l = z_product_obc_log(q, 0.8);
  CHECK(l.value() == doctest::Approx(z_product_obc(q, 0.8)).epsilon(1e-10));
  const auto big = solve_obc_momenta({Family::TfiObc, 200, 1.2, 0.0});
  CHECK(std::isfinite(z_product_obc_log(big, 0.8).log_abs));
}

TEST_CASE("periodic four-term formula equals the trace") {
  for (int n : {4, 5, 8}) {
    for (double lambda : {0.6, 1.3}) {
      const ModelSpec m{Family::TfiPbc, n, lambda, 0.0};
      const auto odd = pbc_momenta(m, Channel::Odd), even = pbc_momenta(m, Channel::Even);
      const auto s = exact_spectrum(m);
      for (double t : {0.5, 1.0, 2.0}) {
        const cplx a = z_pbc(odd, even, t), b = z_trace(s, {0.0, t});
        CHECK(std::abs(a - b) <= 1e-9 * std::abs(b));
      }
    }
  }
  const ModelSpec m{Family::TfiPbc, 4, 1.0, 0.0};
  CHECK_THROWS_AS(z_pbc(pbc_momenta(m, Channel::Odd), pbc_momenta(m, Channel::Odd), 1.0), Error);
}

TEST_CASE("conjugate symmetry of Z") {
  const auto s = exact_spectrum({Family::Potts3, 3, 0.9, 0.0});
  for (cplx tau : {cplx(0.3, 0.5), cplx(-0.2, 1.3)}) {
    const cplx a = z_trace(s, ComplexTemperature::from(tau));
    const cplx b = z_trace(s, ComplexTemperature::from(std::conj(tau)));
    CHECK(std::abs(a - std::conj(b)) < 1e-10 * std::abs(a));
  }
}

TEST_CASE("scan csv") {
  const auto s = exact_spectrum({Family::TfiObc, 4, 1.0, 0.0});
  const auto pts = scan(s, {{0.0, 0.5}, {0.1, 0.5}});
  std::ostringstream out;
  write_scan_csv(out, pts);
  std::istringstream in(out.str());
  const auto rows = read_csv_rows(in);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].size() == 5);
}
