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

#include "itz/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

#include <fmt/format.h>

#include "itz/error.hpp"

namespace itz {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<Command, std::string_view>, 9> kCommands{{
    {Command::Spectrum, "spectrum"},
    {Command::Zeros, "zeros"},
    {Command::Density, "density"},
    {Command::Circle, "circle"},
    {Command::Sff, "sff"},
    {Command::Magnetize, "magnetize"},
    {Command::Collapse, "collapse"},
    {Command::PottsScan, "potts-scan"},
    {Command::ReproduceFig, "reproduce-fig"},
}};

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::ConfigInvalid, msg); }

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) invalid(fmt::format("missing key '{}'", key));
  return j.at(key);
}

double get_number(const json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_number()) invalid(fmt::format("'{}' must be a number", key));
  return v.get<double>();
}

int get_int(const json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_number_integer()) invalid(fmt::format("'{}' must be an integer", key));
  return v.get<int>();
}

std::vector<double> get_grid(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return {};
  const auto& v = j.at(key);
  std::vector<double> out;
  if (v.is_array()) {
    for (const auto& x : v) {
      if (!x.is_number()) invalid(fmt::format("'{}' entries must be numbers", key));
      out.push_back(x.get<double>());
    }
  } else if (v.is_object()) {
    const double lo = get_number(v, "lo"), hi = get_number(v, "hi");
    const int n = get_int(v, "n");
    const bool log = v.value("log", false);
    if (n < 1) invalid(fmt::format("'{}.n' must be positive", key));
    if (log && !(lo > 0.0 && hi > 0.0)) invalid(fmt::format("'{}' log grid needs positive bounds", key));
    for (int k = 0; k < n; ++k) {
      const double f = n == 1 ? 0.0 : static_cast<double>(k) / (n - 1);
      out.push_back(log ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f);
    }
  } else {
    invalid(fmt::format("'{}' must be an array or {{lo, hi, n}}", key));
  }
  if (out.empty()) invalid(fmt::format("'{}' grid is empty", key));
  for (std::size_t i = 1; i < out.size(); ++i)
    if (!(out[i] > out[i - 1])) invalid(fmt::format("'{}' grid must be strictly increasing", key));
  return out;
}

}  // namespace

std::string_view command_name(Command command) {
  for (const auto& [c, name] : kCommands)
    if (c == command) return name;
  return "unknown";
}

Command parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommands)
    if (n == name) return c;
  invalid(fmt::format("unknown command '{}'", name));
}

double RunConfig::tolerance(const std::string& key, double fallback) const {
  const auto it = tolerances.find(key);
  return it == tolerances.end() ? fallback : it->second;
}

json default_config_json() {
  return json{
      {"command", "spectrum"},
      {"family", "tfi-obc"},
      {"N", 12},
      {"lambda", 1.0},
      {"h", 0.0},
      {"m_max", 1},
      {"t_grid", nullptr},
      {"lambda_grid", nullptr},
      {"time_grid", nullptr},
      {"sizes", nullptr},
      {"figure", ""},
      {"output_dir", "itz_out"},
      {"cache", true},
      {"cache_dir", ""},
      {"tolerances", json::object()},
      {"limits", {{"potts3_max_n", 10}, {"potts4_max_n", 8}, {"max_dim", 1 << 14}, {"max_enumeration_n", 20}}},
  };
}

json merge_json(json base, const json& over) {
  if (!base.is_object() || !over.is_object()) return over;
  for (auto it = over.begin(); it != over.end(); ++it) {
    if (base.contains(it.key()) && base[it.key()].is_object() && it.value().is_object())
      base[it.key()] = merge_json(base[it.key()], it.value());
    else
      base[it.key()] = it.value();
  }
  return base;
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) invalid("config must be a JSON object");
  static const std::vector<std::string> known{"command", "family", "N", "lambda", "h", "m_max", "t_grid",
                                              "lambda_grid", "time_grid", "sizes", "figure", "output_dir",
                                              "cache", "cache_dir", "tolerances", "limits"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end()) invalid(fmt::format("unknown key '{}'", it.key()));

  RunConfig c;
  const auto& cmd = require(j, "command");
  if (!cmd.is_string()) invalid("'command' must be a string");
  c.command = parse_command(cmd.get<std::string>());
  const auto& fam = require(j, "family");
  if (!fam.is_string()) invalid("'family' must be a string");
  try {
    c.model.family = parse_family(fam.get<std::string>());
  } catch (const Error& e) {
    invalid(e.what());
  }
  c.model.n = get_int(j, "N");
  c.model.lambda = get_number(j, "lambda");
  c.model.probe_h = get_number(j, "h");
  c.m_max = get_int(j, "m_max");
  if (c.m_max < 1 || c.m_max % 2 == 0) invalid("'m_max' must be a positive odd integer");

  if (j.contains("limits")) {
    const auto& l = j.at("limits");
    if (!l.is_object()) invalid("'limits' must be an object");
    c.limits.potts3_max_n = get_int(l, "potts3_max_n");
    c.limits.potts4_max_n = get_int(l, "potts4_max_n");
    const int dim = get_int(l, "max_dim");
    if (dim < 1) invalid("'limits.max_dim' must be positive");
    c.limits.max_dim = static_cast<std::size_t>(dim);
    c.limits.max_enumeration_n = get_int(l, "max_enumeration_n");
  }
  try {
    c.model.validate(c.limits);
  } catch (const Error& e) {
    invalid(e.what());
  }

  c.t_grid = get_grid(j, "t_grid");
  c.lambda_grid = get_grid(j, "lambda_grid");
  c.time_grid = get_grid(j, "time_grid");
  for (double t : c.t_grid)
    if (t == 0.0) invalid("'t_grid' contains T = 0");
  for (double l : c.lambda_grid)
    if (l < 0.0) invalid("'lambda_grid' entries must be non-negative");
  for (double t : c.time_grid)
    if (!(t > 0.0)) invalid("'time_grid' entries must be positive");
  if (j.contains("sizes") && !j.at("sizes").is_null()) {
    const auto& s = j.at("sizes");
    if (!s.is_array() || s.empty()) invalid("'sizes' must be a non-empty array");
    for (const auto& x : s) {
      if (!x.is_number_integer() || x.get<int>() < 1) invalid("'sizes' entries must be positive integers");
      c.sizes.push_back(x.get<int>());
    }
  }
  if (j.contains("figure")) {
    if (!j.at("figure").is_string()) invalid("'figure' must be a string");
    c.figure = j.at("figure").get<std::string>();
  }
  if (c.command == Command::ReproduceFig && c.figure.empty()) invalid("'figure' is required for reproduce-fig");
  const auto& out = require(j, "output_dir");
  if (!out.is_string() || out.get<std::string>().empty()) invalid("'output_dir' must be a non-empty string");
  c.output_dir = out.get<std::string>();
  const auto& cache = require(j, "cache");
  if (!cache.is_boolean()) invalid("'cache' must be a boolean");
  c.cache = cache.get<bool>();
  if (j.contains("cache_dir")) {
    if (!j.at("cache_dir").is_string()) invalid("'cache_dir' must be a string");
    c.cache_dir = j.at("cache_dir").get<std::string>();
  }
  if (j.contains("tolerances")) {
    const auto& t = j.at("tolerances");
    if (!t.is_object()) invalid("'tolerances' must be an object");
    for (auto it = t.begin(); it != t.end(); ++it) {
      if (!it.value().is_number() || !(it.value().get<double>() > 0.0))
        invalid(fmt::format("tolerance '{}' must be a positive number", it.key()));
      c.tolerances[it.key()] = it.value().get<double>();
    }
  }
  return c;
}

json RunConfig::to_json() const {
  json j{
      {"command", std::string(command_name(command))},
      {"family", std::string(family_name(model.family))},
      {"N", model.n},
      {"lambda", model.lambda},
      {"h", model.probe_h},
      {"m_max", m_max},
      {"t_grid", t_grid},
      {"lambda_grid", lambda_grid},
      {"time_grid", time_grid},
      {"sizes", sizes},
      {"figure", figure},
      {"tolerances", tolerances},
      {"limits",
       {{"potts3_max_n", limits.potts3_max_n},
        {"potts4_max_n", limits.potts4_max_n},
        {"max_dim", limits.max_dim},
        {"max_enumeration_n", limits.max_enumeration_n}}},
  };
  return j;
}

std::string RunConfig::hash() const {
  // output location and caching do not change results
  const std::string text = to_json().dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return fmt::format("{:016x}", h);
}

std::vector<std::string> RunConfig::metadata() const {
  return {fmt::format("config_hash={}", hash()), fmt::format("command={}", command_name(command)),
          fmt::format("model={}", model_key(model))};
}

}  // namespace itz
