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

#ifndef ITZ_MODEL_HPP
#define ITZ_MODEL_HPP

#include <cstddef>
#include <string>
#include <string_view>

namespace itz {

enum class Family { TfiObc, TfiPbc, XxObc, Potts3, Potts4 };

/// Feasibility guards for exact diagonalization and 2^N enumeration.
struct Limits {
  int potts3_max_n = 10;
  int potts4_max_n = 8;
  std::size_t max_dim = std::size_t{1} << 14;
  int max_enumeration_n = 20;
};

/// A spin chain: family, length, transverse-field strength and an optional
/// longitudinal probe field (TFI families only).
struct ModelSpec {
  Family family = Family::TfiObc;
  int n = 2;
  double lambda = 1.0;
  double probe_h = 0.0;

  /// Throws Error(InvalidArgument) on a malformed spec.
  void validate(const Limits& limits = {}) const;
};

bool is_tfi(Family family);
bool is_free_fermion(Family family);
bool is_potts(Family family);

/// Local Hilbert-space dimension: 2 for spin-1/2 chains, q for q-state Potts.
int local_dim(Family family);

/// Full many-body dimension local_dim^N. Saturates at SIZE_MAX on overflow.
std::size_t hilbert_dim(const ModelSpec& model);

/// CLI spelling: "tfi-obc", "tfi-pbc", "xx-obc", "potts3", "potts4".
std::string_view family_name(Family family);
Family parse_family(std::string_view name);

/// Stable identifier used for cache file names and metadata headers.
std::string model_key(const ModelSpec& model);

}  // namespace itz

#endif  // ITZ_MODEL_HPP
