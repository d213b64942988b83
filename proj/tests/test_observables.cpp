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
#include <numbers>
#include <sstream>

#include "itz/complex_zeros.hpp"
#include "itz/error.hpp"
#include "itz/manybody.hpp"
#include "itz/observables.hpp"
#include "itz/spectra.hpp"
#include "itz/zeros.hpp"

using namespace itz;

TEST_CASE("magnetization at a real temperature is a thermal average") {
  const auto s = exact_spectrum({Family::TfiObc, 5, 0.8, 0.0}, true);
  const cplx m = magnetization(s, {0.7, 0.0}, Axis::X);
  CHECK(std::abs(m.imag()) < 1e-14);
  CHECK(m.real() > 0.0);
  CHECK(m.real() < 1.0);
  const auto bare = exact_spectrum({Family::TfiObc, 5, 0.8, 0.0}, false);
  CHECK_THROWS_AS((magnetization(bare, {0.7, 0.0}, Axis::X)), Error);
}

TEST_CASE("magnetization pole at a zero") {
  const ModelSpec m{Family::TfiObc, 6, 1.0, 0.0};
  const auto s = exact_spectrum(m, true);
  const double t = enumerate_itzs(solve_obc_momenta(m), 1)[0].zeros.back();
  const double t_ref = refine_imaginary_zero(s, t);
  CHECK(t_ref == doctest::Approx(t).epsilon(1e-12));
  CHECK_THROWS_AS((magnetization(s, {0.0, t_ref}, Axis::X)), Error);
  const auto curve = magnetization_curve(s, {{0.0, t_ref}, {0.0, t_ref + 0.01}}, Axis::X);
  CHECK(curve.samples.size() == 1);
}

TEST_CASE("divergence exponent at a zero") {
  const auto s = exact_spectrum({Family::TfiObc, 6, 1.0, 0.0}, true);
  const double t = refine_imaginary_zero(s, enumerate_itzs(solve_obc_momenta(s.model), 1)[0].zeros.back());
  const ComplexTemperature zero{0.0, t};
  for (cplx dir : {cplx(0.0, 1.0), cplx(1.0, 0.0), cplx(1.0, 1.0)}) {
    const auto curve = magnetization_curve(s, approach_path(zero, dir, 1e-6, 1e-2, 20), Axis::X);
    CHECK(fit_divergence(curve, zero).exponent == doctest::Approx(-1.0).epsilon(0.02));
  }
  CHECK_THROWS_AS(fit_divergence(magnetization_curve(s, approach_path(zero, {0, 1}, 1e-6, 1e-5, 2), Axis::X), zero),
                  Error);
}

TEST_CASE("approach path is symmetric about the zero") {
  const auto p = approach_path({0.1, 0.5}, cplx(0.0, 2.0), 1e-3, 1e-1, 3);
  REQUIRE(p.size() == 6);
  CHECK(p[0].im == doctest::Approx(0.5 - 1e-3));
  CHECK(p[1].im == doctest::Approx(0.5 + 1e-3));
  CHECK(p[0].re == doctest::Approx(0.1));
}

TEST_CASE("monotone cubic interpolation") {
  const std::vector<double> x{0, 1, 2, 3, 4}, y{0, 1, 1, 2, 10};
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(pchip(x, y, x[i]) == doctest::Approx(y[i]));
  double prev = -1;
  for (int k = 0; k <= 400; ++k) {
    const double v = pchip(x, y, k / 100.0);
    CHECK(v >= prev - 1e-14);
    prev = v;
  }
  CHECK(pchip(x, y, 1.5) == doctest::Approx(1.0));
  CHECK(pchip(x, y, -1.0) == 0.0);
}

TEST_CASE("collapse residual") {
  std::vector<std::pair<double, double>> a, b, c;
  for (double h : {0.1, 0.3, 1.0, 3.0, 10.0}) {
    a.emplace_back(h, std::sqrt(h));
    b.emplace_back(h * 1.1, std::sqrt(h * 1.1));
    c.emplace_back(h, 1.2 * std::sqrt(h));
  }
  CHECK((collapse_residual({a, b}) < 0.02));
  CHECK((collapse_residual({a, c}) == doctest::Approx(0.2 / 1.1).epsilon(1e-6)));
  std::vector<std::pair<double, double>> far{{100.0, 1.0}, {200.0, 2.0}};
  CHECK_THROWS_AS((collapse_residual({a, far})), Error);
  CHECK_THROWS_AS((collapse_residual({a})), Error);
}

TEST_CASE("collapse pipeline on small chains") {
  CollapseOptions opt;
  opt.sizes = {4, 5};
  opt.h_rescaled = {0.5, 1.0, 2.0};
  const auto data = collapse_data(opt);
  REQUIRE(data.size() == 2);
  for (const auto& d : data) {
    CHECK(d.lambda == doctest::Approx(1 + 0.1 / d.n));
    CHECK(d.mz.size() == 3);
    for (double m : d.mz) CHECK(m > 0.0);
  }
  const auto r = rescale_collapse(data, 0.1, 0.125, 15, 1);
  CHECK(r.curves.size() == 2);
  CHECK(r.collapse_residual >= 0.0);
  std::ostringstream out;
  write_collapse_csv(out, data, r);
  CHECK(out.str().rfind("N,h,h_rescaled,Mz_rescaled\n", 0) == 0);
}
