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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "itz/config.hpp"
#include "itz/error.hpp"
#include "itz/run.hpp"

namespace {

using nlohmann::json;

struct Flags {
  std::string config_file;
  std::optional<std::string> family;
  std::optional<int> n;
  std::optional<double> lambda;
  std::optional<double> h;
  std::optional<int> m_max;
  std::optional<std::string> t_grid, lambda_grid, time_grid, sizes;
  std::optional<std::string> output_dir, cache_dir;
  bool no_cache = false;
  std::vector<std::string> tolerances;
  std::string figure;
};

double number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw itz::Error(itz::ErrorCode::ConfigInvalid, fmt::format("'{}' is not a number", s));
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// "a,b,c", "lo:hi:n" or "log:lo:hi:n"
json grid(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() == 3 || (parts.size() == 4 && parts[0] == "log")) {
    const bool log = parts.size() == 4;
    if (log) parts.erase(parts.begin());
    const double n = number(parts[2]);
    if (n != static_cast<int>(n)) throw itz::Error(itz::ErrorCode::ConfigInvalid, "grid point count must be an integer");
    return json{{"lo", number(parts[0])}, {"hi", number(parts[1])}, {"n", static_cast<int>(n)}, {"log", log}};
  }
  json arr = json::array();
  for (const auto& p : split(text, ',')) arr.push_back(number(p));
  return arr;
}

json int_list(const std::string& text) {
  json arr = json::array();
  for (const auto& p : split(text, ',')) {
    const double v = number(p);
    if (v != static_cast<int>(v)) throw itz::Error(itz::ErrorCode::ConfigInvalid, "sizes must be integers");
    arr.push_back(static_cast<int>(v));
  }
  return arr;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw itz::Error(itz::ErrorCode::ConfigInvalid, fmt::format("cannot read config file {}", path));
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw itz::Error(itz::ErrorCode::ConfigInvalid, fmt::format("{}: {}", path, e.what()));
  }
}

json overrides(const std::string& command, const Flags& f) {
  json j{{"command", command}};
  if (f.family) j["family"] = *f.family;
  if (f.n) j["N"] = *f.n;
  if (f.lambda) j["lambda"] = *f.lambda;
  if (f.h) j["h"] = *f.h;
  if (f.m_max) j["m_max"] = *f.m_max;
  if (f.t_grid) j["t_grid"] = grid(*f.t_grid);
  if (f.lambda_grid) j["lambda_grid"] = grid(*f.lambda_grid);
  if (f.time_grid) j["time_grid"] = grid(*f.time_grid);
  if (f.sizes) j["sizes"] = int_list(*f.sizes);
  if (f.output_dir) j["output_dir"] = *f.output_dir;
  if (f.cache_dir) j["cache_dir"] = *f.cache_dir;
  if (f.no_cache) j["cache"] = false;
  if (!f.figure.empty()) j["figure"] = f.figure;
  for (const auto& t : f.tolerances) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw itz::Error(itz::ErrorCode::ConfigInvalid, fmt::format("tolerance '{}' is not key=value", t));
    j["tolerances"][t.substr(0, eq)] = number(t.substr(eq + 1));
  }
  return j;
}

void add_model_options(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config_file, "JSON config file (flags override it)");
  app->add_option("--family", f.family, "tfi-obc, tfi-pbc, xx-obc, potts3 or potts4");
  app->add_option("--N", f.n, "chain length");
  app->add_option("--lambda", f.lambda, "transverse field");
  app->add_option("--h", f.h, "longitudinal probe field");
  app->add_option("--m-max", f.m_max, "largest odd sector");
  app->add_option("--t-grid", f.t_grid, "temperatures: a,b,c or lo:hi:n or log:lo:hi:n");
  app->add_option("--lambda-grid", f.lambda_grid, "couplings: a,b,c or lo:hi:n");
  app->add_option("--time-grid", f.time_grid, "form-factor times: a,b,c or log:lo:hi:n");
  app->add_option("--sizes", f.sizes, "chain lengths, comma separated");
  app->add_option("--output-dir", f.output_dir, "artifact directory");
  app->add_option("--cache-dir", f.cache_dir, "spectrum cache directory (default $ITZ_CACHE_DIR)");
  app->add_flag("--no-cache", f.no_cache, "do not read or write the spectrum cache");
  app->add_option("--tol", f.tolerances, "tolerance override key=value")->take_all();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Imaginary-temperature zeros of quantum spin chains"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"spectrum", "quasiparticle or many-body spectrum"},
      {"zeros", "imaginary-temperature zeros by sector"},
      {"density", "zero density with edge exponent fits"},
      {"circle", "unit-circle map of a zero sector"},
      {"sff", "spectral form factor and its zeros"},
      {"magnetize", "magnetization near a zero"},
      {"collapse", "finite-size scaling collapse of |M_z|"},
      {"potts-scan", "complex zeros of the Potts chain"},
      {"reproduce-fig", "run a figure recipe"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_model_options(sub, flags);
    if (name == "reproduce-fig") sub->add_option("figure", flags.figure, "figure name")->required();
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    json j = itz::default_config_json();
    if (!flags.config_file.empty()) j = itz::merge_json(j, load_file(flags.config_file));
    j = itz::merge_json(j, overrides(command, flags));
    const auto config = itz::config_from_json(j);
    const auto result = itz::run(config);
    for (const auto& f : result.files) std::cout << f.string() << '\n';
    return 0;
  } catch (const itz::Error& e) {
    std::cerr << "itz: " << e.what() << '\n';
    return itz::is_numerical(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "itz: " << e.what() << '\n';
    return 3;
  }
}
