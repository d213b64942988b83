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

#include "itz/error.hpp"
#include "itz/model.hpp"

using namespace itz;

TEST_CASE("family names round-trip") {
  for (auto f : {Family::TfiObc, Family::TfiPbc, Family::XxObc, Family::Potts3, Family::Potts4})
    CHECK(parse_family(family_name(f)) == f);
  CHECK_THROWS_AS(parse_family("ising"), Error);
}

TEST_CASE("hilbert dimension") {
  CHECK((hilbert_dim({Family::TfiObc, 10, 1.0, 0.0}) == 1024));
  CHECK((hilbert_dim({Family::Potts3, 4, 1.0, 0.0}) == 81));
  CHECK((hilbert_dim({Family::Potts4, 3, 1.0, 0.0}) == 64));
}

TEST_CASE("model validation") {
  CHECK_NOTHROW((ModelSpec{Family::TfiObc, 12, 0.7, 0.0}.validate()));
  CHECK_THROWS_AS((ModelSpec{Family::TfiObc, 0, 0.7, 0.0}.validate()), Error);
  CHECK_THROWS_AS((ModelSpec{Family::TfiObc, 12, -0.1, 0.0}.validate()), Error);
  CHECK_THROWS_AS((ModelSpec{Family::Potts3, 11, 1.0, 0.0}.validate()), Error);
  CHECK_THROWS_AS((ModelSpec{Family::Potts4, 9, 1.0, 0.0}.validate()), Error);
  Limits roomy;
  roomy.potts3_max_n = 11;
  CHECK_NOTHROW((ModelSpec{Family::Potts3, 11, 1.0, 0.0}.validate(roomy)));
}

TEST_CASE("model keys differ by parameter") {
  const ModelSpec a{Family::TfiObc, 8, 1.0, 0.0};
  ModelSpec b = a;
  b.probe_h = 1e-3;
  CHECK(model_key(a) != model_key(b));
  CHECK((model_key(a) == model_key(ModelSpec{Family::TfiObc, 8, 1.0, 0.0})));
}

TEST_CASE("error taxonomy") {
  const Error e(ErrorCode::NoPiMode, "x");
  CHECK(e.code() == ErrorCode::NoPiMode);
  CHECK(to_string(ErrorCode::RootCountMismatch) == "ROOT_COUNT_MISMATCH");
  CHECK_FALSE(is_numerical(ErrorCode::ConfigInvalid));
  CHECK(is_numerical(ErrorCode::NoZeroFound));
}
