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

#include "itz/model.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "itz/error.hpp"

namespace itz {

bool is_tfi(Family family) { return family == Family::TfiObc || family == Family::TfiPbc; }

bool is_free_fermion(Family family) { return !is_potts(family); }

bool is_potts(Family family) { return family == Family::Potts3 || family == Family::Potts4; }

int local_dim(Family family) {
  switch (family) {
    case Family::Potts3: return 3;
    case Family::Potts4: return 4;
    default: return 2;
  }
}

std::size_t hilbert_dim(const ModelSpec& model) {
  const std::size_t q = static_cast<std::size_t>(local_dim(model.family));
  std::size_t dim = 1;
  for (int i = 0; i < model.n; ++i) {
    if (dim > std::numeric_limits<std::size_t>::max() / q) return std::numeric_limits<std::size_t>::max();
    dim *= q;
  }
  return dim;
}

void ModelSpec::validate(const Limits& limits) const {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, fmt::format("chain length must be >= 1, got {}", n));
  if (!std::isfinite(lambda) || lambda < 0.0)
    throw Error(ErrorCode::InvalidArgument, fmt::format("lambda must be finite and >= 0, got {}", lambda));
  if (!std::isfinite(probe_h) || probe_h < 0.0)
    throw Error(ErrorCode::InvalidArgument, fmt::format("probe_h must be finite and >= 0, got {}", probe_h));
  if (probe_h != 0.0 && !is_tfi(family))
    throw Error(ErrorCode::InvalidArgument, "probe_h is only defined for TFI chains");
  if (family == Family::Potts3 && n > limits.potts3_max_n)
    throw Error(ErrorCode::InvalidArgument, fmt::format("potts3 supports N <= {}", limits.potts3_max_n));
  if (family == Family::Potts4 && n > limits.potts4_max_n)
    throw Error(ErrorCode::InvalidArgument, fmt::format("potts4 supports N <= {}", limits.potts4_max_n));
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::TfiObc: return "tfi-obc";
    case Family::TfiPbc: return "tfi-pbc";
    case Family::XxObc: return "xx-obc";
    case Family::Potts3: return "potts3";
    case Family::Potts4: return "potts4";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::TfiObc, Family::TfiPbc, Family::XxObc, Family::Potts3, Family::Potts4}) {
    if (family_name(f) == name) return f;
  }
  throw Error(ErrorCode::ConfigInvalid, fmt::format("unknown model family '{}'", name));
}

std::string model_key(const ModelSpec& model) {
  return fmt::format("{}_N{}_lambda{:.17g}_h{:.17g}", family_name(model.family), model.n, model.lambda,
                     model.probe_h);
}

}  // namespace itz
