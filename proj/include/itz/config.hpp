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

#ifndef ITZ_CONFIG_HPP
#define ITZ_CONFIG_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "itz/model.hpp"

namespace itz {

enum class Command { Spectrum, Zeros, Density, Circle, Sff, Magnetize, Collapse, PottsScan, ReproduceFig };

std::string_view command_name(Command command);
Command parse_command(std::string_view name);

/// One batch run. Grids may be empty, in which case the command picks its own
/// default; a grid given explicitly must be non-empty and strictly increasing.
struct RunConfig {
  Command command = Command::Spectrum;
  ModelSpec model;
  Limits limits;
  int m_max = 1;
  std::vector<double> t_grid;       // real temperatures
  std::vector<double> lambda_grid;
  std::vector<double> time_grid;    // SFF times
  std::vector<int> sizes;
  std::string figure;
  std::filesystem::path output_dir = "itz_out";
  bool cache = true;
  std::string cache_dir;            // empty: ITZ_CACHE_DIR or .itz_cache
  std::map<std::string, double> tolerances;

  double tolerance(const std::string& key, double fallback) const;

  nlohmann::json to_json() const;
  /// 16 hex digits of FNV-1a over the canonical JSON form.
  std::string hash() const;
  /// Metadata header lines embedded in every artifact.
  std::vector<std::string> metadata() const;
};

/// Built-in defaults as a JSON object.
nlohmann::json default_config_json();

/// Schema check and conversion. Throws Error(ConfigInvalid) with the
/// offending key in the message.
RunConfig config_from_json(const nlohmann::json& j);

/// Recursive merge, values of `over` win.
nlohmann::json merge_json(nlohmann::json base, const nlohmann::json& over);

}  // namespace itz

#endif  // ITZ_CONFIG_HPP
