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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "itz/csv.hpp"
#include "itz/error.hpp"
#include "itz/partition.hpp"
#include "itz/spectra.hpp"
#include "itz/zeros.hpp"

using namespace itz;
using std::numbers::pi;

namespace {

// integral over [a, b] with T = a + (b - a)(1 - cos th) / 2, which absorbs
// inverse square-root endpoint singularities
template <class F>
double cos_quadrature(F f, double a, double b, int n = 20000) {
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    const double th = (k + 0.5) * pi / n;
    const double t = a + (b - a) * (1 - std::cos(th)) / 2;
    s += f(t) * (b - a) / 2 * std::sin(th) * pi / n;
  }
  return s;
}

}  // namespace

TEST_CASE("sector enumeration") {
  const auto q = solve_obc_momenta({Family::TfiObc, 12, 1.0, 0.0});
  const auto sets = enumerate_itzs(q, 5);
  REQUIRE(sets.size() == 3);
  for (const auto& s : sets) {
    CHECK(s.zeros.size() == 12);
    CHECK(std::is_sorted(s.zeros.begin(), s.zeros.end()));
    CHECK(s.max_residual < 1e-10);
    CHECK(s.m % 2 == 1);
  }
  for (std::size_t k = 0; k < 12; ++k) {
    CHECK(sets[1].zeros[k] == doctest::Approx(sets[0].zeros[k] / 3).epsilon(1e-14));
    CHECK(sets[2].zeros[k] == doctest::Approx(sets[0].zeros[k] / 5).epsilon(1e-14));
  }
  CHECK_THROWS_AS(enumerate_itzs(q, 4), Error);
  CHECK_THROWS_AS(enumerate_itzs(q, 0), Error);
  CHECK_THROWS_AS((enumerate_itzs(pbc_momenta({Family::TfiPbc, 4, 1.0, 0.0}, Channel::Odd), 1)), Error);
}

TEST_CASE("zeros are zeros of the product and of the trace") {
  const auto q = solve_obc_momenta({Family::TfiObc, 10, 0.6, 0.0});
  for (const auto& s : enumerate_itzs(q, 3))
    for (double t : s.zeros) CHECK(std::abs(z_product_obc(q, t)) / 1024.0 < 1e-10);
}

TEST_CASE("mirror symmetry") {
  const auto sets = enumerate_itzs(solve_obc_momenta({Family::TfiObc, 9, 1.4, 0.0}), 3);
  for (const auto& s : sets) {
    const auto neg = s.mirror();
    REQUIRE(neg.size() == s.zeros.size());
    for (std::size_t k = 0; k < neg.size(); ++k) CHECK(neg[k] == -s.zeros[neg.size() - 1 - k]);
  }
}

TEST_CASE("sector edges") {
  const auto e = sector_edges(1.3, 1);
  CHECK(e.t_minus == doctest::Approx(2 * 0.3 / pi));
  CHECK(e.t_plus == doctest::Approx(2 * 2.3 / pi));
  const auto e3 = sector_edges(0.7, 3);
  CHECK(e3.t_minus == doctest::Approx(2 * 0.3 / (3 * pi)));
  CHECK(sector_edges(1.0, 1).t_minus == 0.0);
  CHECK_THROWS_AS(sector_edges(1.0, 2), Error);

  const auto sets = enumerate_itzs(solve_obc_momenta({Family::TfiObc, 400, 1.3, 0.0}), 1);
  CHECK(sets[0].zeros.front() == doctest::Approx(e.t_minus).epsilon(1e-3));
  CHECK(sets[0].zeros.back() == doctest::Approx(e.t_plus).epsilon(1e-3));
  for (double t : sets[0].bulk_zeros()) {
    CHECK(t >= e.t_minus - 1e-12);
    CHECK(t <= e.t_plus + 1e-12);
  }
}

TEST_CASE("pi-mode zero sits outside the bulk") {
  const auto sets = enumerate_itzs(solve_obc_momenta({Family::TfiObc, 12, 0.7, 0.0}), 1);
  const auto& s = sets[0];
  REQUIRE(std::count(s.kinds.begin(), s.kinds.end(), ModeKind::ComplexPi) == 1);
  CHECK(s.bulk_zeros().size() == 11);
  const auto it = std::find(s.kinds.begin(), s.kinds.end(), ModeKind::ComplexPi);
  CHECK(s.zeros[it - s.kinds.begin()] < s.t_minus);
}

TEST_CASE("analytic density integrates to N per sector") {
  for (double lambda : {0.7, 1.0, 1.3}) {
    for (int m : {1, 3}) {
      const auto e = sector_edges(lambda, m);
      const double total = cos_quadrature([&](double t) { return density_analytic(t, lambda, m, 50); }, e.t_minus, e.t_plus);
      CHECK(total == doctest::Approx(50.0).epsilon(1e-6));
    }
  }
  CHECK(density_analytic(3.0, 1.3, 1, 10) == 0.0);
  CHECK(density_analytic(0.01, 1.3, 1, 10) == 0.0);
  CHECK_THROWS_AS(density_analytic(2 * 2.3 / pi, 1.3, 1, 10), Error);
  // critical limit near T = 0
  CHECK(density_analytic(1e-4, 1.0, 1, 1000) == doctest::Approx(500.0).epsilon(1e-6));
}

TEST_CASE("xx density integrates to one per mode") {
  for (double lambda : {0.5, 1.0, 1.9, 2.5}) {
    const double a = (4 - 2 * lambda) / pi, tp = xx_sector_edges(lambda, 1).t_plus;
    std::vector<double> cuts{0.0, std::abs(a), tp};
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
      if (cuts[k + 1] > cuts[k])
        total += cos_quadrature([&](double t) { return density_xx(t, lambda, 1); }, cuts[k], cuts[k + 1]);
    CHECK_MESSAGE(total == doctest::Approx(1.0).epsilon(1e-4), "lambda=", lambda);
  }
}

TEST_CASE("edge exponent of the analytic density") {
  for (double lambda : {0.7, 1.0, 1.3}) {
    const auto f = fit_edge_exponent_analytic(lambda, 1, 100, Edge::Plus, 1e-6, 1e-3);
    CHECK(f.exponent == doctest::Approx(-0.5).epsilon(0.02));
    if (lambda != 1.0) {
      const auto g = fit_edge_exponent_analytic(lambda, 1, 100, Edge::Minus, 1e-6, 1e-3);
      CHECK(g.exponent == doctest::Approx(-0.5).epsilon(0.02));
    }
  }
  std::vector<double> t{1.0, 1.1};
  CHECK_THROWS_AS(fit_edge_exponent(t, t, 0.0), Error);
}

TEST_CASE("circle map") {
  const auto crit = circle_map(enumerate_itzs(solve_obc_momenta({Family::TfiObc, 12, 1.0, 0.0}), 1)[0]);
  CHECK(crit.theta_limit == 0.0);
  CHECK(crit.theta > 0.0);
  for (const auto& z : crit.points) CHECK(std::abs(z) == doctest::Approx(1.0));
  const auto off = circle_map(enumerate_itzs(solve_obc_momenta({Family::TfiObc, 12, 0.7, 0.0}), 1)[0]);
  CHECK(off.isolated_points.size() == 1);
  CHECK(off.theta_limit == doctest::Approx(2 * pi * 0.3 / (2 * 1.7)));
  double prev = 1e9;
  for (int n : {12, 24, 48, 96}) {
    const auto c = circle_map(enumerate_itzs(solve_obc_momenta({Family::TfiObc, n, 1.0, 0.0}), 1)[0]);
    CHECK(c.theta < prev);
    prev = c.theta;
  }
}

TEST_CASE("edge spacing shrinks with N") {
  std::map<int, double> d;
  for (int n : {50, 100, 200, 400})
    d[n] = edge_spacing(enumerate_itzs(solve_obc_momenta({Family::TfiObc, n, 1.3, 0.0}), 1)[0], Edge::Plus);
  const auto s = spacing_scaling(d);
  CHECK(s.fit.exponent < -1.0);
  CHECK(s.faster_than_inverse_n);
  CHECK_THROWS_AS((spacing_scaling({{10, 0.1}, {20, 0.05}})), Error);
}

TEST_CASE("edge location scaling in lambda") {
  std::vector<double> l, t;
  for (double x : {1.1, 1.2, 1.4, 1.8}) {
    l.push_back(x);
    t.push_back(sector_edges(x, 1).t_minus);
  }
  const auto f = edge_scaling_vs_lambda(l, t, 1.0);
  CHECK(f.exponent == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(f.amplitude == doctest::Approx(2 / pi).epsilon(1e-10));
}

TEST_CASE("zeros and edges csv") {
  const auto sets = enumerate_itzs(solve_obc_momenta({Family::TfiObc, 6, 1.0, 0.0}), 3);
  std::ostringstream out;
  write_zeros_csv(out, sets, {"config_hash=abc"});
  std::istringstream in(out.str());
  CHECK(read_csv_rows(in).size() == 12);
  CHECK(out.str().rfind("# config_hash=abc\nm,T_star\n", 0) == 0);
  std::ostringstream e;
  write_edges_csv(e, {{1.3, sector_edges(1.3, 1)}});
  CHECK(e.str().find("lambda,T_minus,T_plus") != std::string::npos);
}
