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

#include "itz/complex_zeros.hpp"
#include "itz/error.hpp"
#include "itz/manybody.hpp"
#include "itz/spectra.hpp"
#include "itz/zeros.hpp"

using namespace itz;
using std::numbers::pi;

TEST_CASE("two-level zeros") {
  // Z = 1 + exp(-1/tau) vanishes at tau = i / ((2k+1) pi) and conjugates
  const PartitionEvaluator z({0.0, 1.0});
  const Region r{-0.2, 0.2, 0.05, 0.5};
  const auto zeros = complex_zero_search(z, r);
  std::vector<double> upper;
  for (const auto& c : zeros) {
    CHECK(std::abs(c.tau.re) < 1e-10);
    CHECK(c.newton_residual < 1e-10);
    if (c.tau.im > 0) upper.push_back(c.tau.im);
  }
  std::sort(upper.begin(), upper.end());
  REQUIRE(upper.size() == 3);
  CHECK(upper[2] == doctest::Approx(1 / pi));
  CHECK(upper[1] == doctest::Approx(1 / (3 * pi)));
  CHECK(upper[0] == doctest::Approx(1 / (5 * pi)));
  CHECK(zeros.size() == 6);
}

TEST_CASE("winding number counts enclosed zeros") {
  const PartitionEvaluator z({0.0, 1.0});
  CHECK((winding_number(z, {-0.05, 0.05, 0.3, 0.34}) == 1));
  CHECK((winding_number(z, {0.1, 0.2, 0.3, 0.34}) == 0));
  CHECK((winding_number(z, {-0.05, 0.05, 0.09, 0.34}) == 2));
}

TEST_CASE("refinement converges to a zero") {
  const PartitionEvaluator z({0.0, 1.0});
  const auto c = refine_zero(z, {0.01, 0.3});
  CHECK(c.tau.re == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(c.tau.im == doctest::Approx(1 / pi).epsilon(1e-12));
}

TEST_CASE("complex search recovers TFI imaginary-temperature zeros") {
  const ModelSpec m{Family::TfiObc, 4, 1.3, 0.0};
  const auto sets = enumerate_itzs(solve_obc_momenta(m), 1);
  const auto s = exact_spectrum(m);
  const double lo = sets[0].zeros.front() * 0.9, hi = sets[0].zeros.back() * 1.05;
  const auto zeros = complex_zero_search(s, {-0.2, 0.2, lo, hi});
  std::vector<double> found;
  for (const auto& c : zeros)
    if (c.tau.im > 0) found.push_back(c.tau.im);
  std::sort(found.begin(), found.end());
  std::vector<double> expect;
  for (double t : sets[0].zeros)
    if (t >= lo && t <= hi) expect.push_back(t);
  // higher sectors can leak into the window; every m = 1 zero must be present
  for (double t : expect) {
    const bool hit = std::any_of(found.begin(), found.end(), [&](double f) { return std::abs(f - t) < 1e-9; });
    CHECK_MESSAGE(hit, "missing T*=", t);
  }
}

TEST_CASE("complex zeros come in conjugate pairs") {
  const auto s = exact_spectrum({Family::Potts3, 3, 1.4, 0.0});
  const auto zeros = complex_zero_search(s, {-0.5, 1.0, 0.1, 1.5});
  REQUIRE(!zeros.empty());
  for (const auto& c : zeros) {
    const bool pair = std::any_of(zeros.begin(), zeros.end(), [&](const ComplexZero& d) {
      return std::abs(d.tau.re - c.tau.re) < 1e-9 && std::abs(d.tau.im + c.tau.im) < 1e-9;
    });
    CHECK(pair);
    CHECK(std::abs(z_trace(s, c.tau)) < 1e-8 * static_cast<double>(s.dim));
  }
}

TEST_CASE("lowest zero track") {
  const ModelSpec m{Family::TfiObc, 6, 1.5, 0.0};
  const auto q = solve_obc_momenta(m);
  double emin = 1e9;
  for (double e : q.energies()) emin = std::min(emin, e);
  const auto t = track_lowest_zero(exact_spectrum(m));
  CHECK(t.zero.tau.re == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(std::abs(t.zero.tau.im) == doctest::Approx(2 * emin / pi).epsilon(1e-10));

  const auto p = track_lowest_zero(exact_spectrum({Family::Potts3, 4, 1.3, 0.0}));
  CHECK(p.zero.newton_residual < 1e-10);
  CHECK(p.zero.tau.re > 0.0);
}

TEST_CASE("potts first sector spacings") {
  const auto a = first_sector(exact_spectrum({Family::Potts3, 4, 2.0, 0.0}));
  CHECK(a.zeros.size() >= 3);
  CHECK(a.d_plus > 0.0);
  CHECK(a.d_minus > 0.0);
  for (const auto& z : a.zeros) CHECK(std::abs(z.tau.value()) >= std::abs(a.lowest.tau.value()) * (1 - 1e-12));
}
