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

#include <algorithm>

#include <fmt/format.h>

#include "itz/error.hpp"
#include "itz/fit.hpp"
#include "itz/run.hpp"

namespace itz {
namespace {

using nlohmann::json;

struct Panel {
  std::string dir;
  RunConfig config;
};

RunConfig panel(const RunConfig& base, Command command, Family family, int n, double lambda) {
  RunConfig c = base;
  c.command = command;
  c.figure.clear();
  c.model = ModelSpec{family, n, lambda, 0.0};
  c.m_max = 1;
  c.t_grid.clear();
  c.lambda_grid.clear();
  c.time_grid.clear();
  c.sizes.clear();
  return c;
}

std::vector<Panel> recipe(const std::string& name, const RunConfig& base) {
  std::vector<Panel> p;
  if (name == "fig1a") {
    auto c = panel(base, Command::Zeros, Family::TfiObc, 12, 1.0);
    c.lambda_grid = linspace(0.05, 2.0, 40);
    p.push_back({"zeros", c});
  } else if (name == "fig1b") {
    for (double l : {0.7, 1.0, 1.3}) p.push_back({fmt::format("circle_lambda{}", l), panel(base, Command::Circle, Family::TfiObc, 12, l)});
    auto c = panel(base, Command::Circle, Family::TfiObc, 12, 1.0);
    c.sizes = {12, 16, 24, 32, 48, 64, 96, 128, 200};
    p.push_back({"inset_theta", c});
  } else if (name == "fig2") {
    for (double l : {0.7, 1.0, 1.3}) p.push_back({fmt::format("density_lambda{}", l), panel(base, Command::Density, Family::TfiObc, 1000, l)});
    p.push_back({"magnetization", panel(base, Command::Magnetize, Family::TfiObc, 8, 1.0)});
  } else if (name == "fig3") {
    auto c = panel(base, Command::Sff, Family::TfiObc, 12, 1.0);
    c.time_grid = logspace(1e-3, 1e3, 2401);
    p.push_back({"sff", c});
    for (const auto& q : recipe("fig3b", base)) p.push_back(q);
  } else if (name == "fig3b") {
    for (double l : {0.7, 1.0, 1.3}) p.push_back({fmt::format("histogram_lambda{}", l), panel(base, Command::Sff, Family::TfiObc, 1000, l)});
  } else if (name == "fig4") {
    auto c = panel(base, Command::Collapse, Family::TfiObc, 12, 1.0);
    c.sizes = {6, 8, 10, 12};
    p.push_back({"collapse", c});
  } else if (name == "fig5") {
    auto c = panel(base, Command::Zeros, Family::XxObc, 12, 1.0);
    c.lambda_grid = linspace(0.05, 3.0, 60);
    p.push_back({"zeros", c});
    for (double l : {1.0, 3.0}) p.push_back({fmt::format("density_lambda{}", l), panel(base, Command::Density, Family::XxObc, 1000, l)});
  } else if (name == "figS6" || name == "figS7") {
    const Family f = name == "figS6" ? Family::Potts3 : Family::Potts4;
    const int n = name == "figS6" ? 8 : 6;
    auto c = panel(base, Command::PottsScan, f, n, 1.2);
    c.lambda_grid = {1.05, 1.1, 1.2, 1.3, 1.4, 1.5};
    p.push_back({"zero_line", c});
    p.push_back({"first_sector", panel(base, Command::PottsScan, f, n, 2.0)});
    p.push_back({"magnetization", panel(base, Command::Magnetize, f, 6, 1.2)});
  } else {
    throw Error(ErrorCode::UnknownFigure, fmt::format("unknown figure '{}'", name));
  }
  return p;
}

}  // namespace

std::vector<std::string> figure_names() {
  return {"fig1a", "fig1b", "fig2", "fig3", "fig3b", "fig4", "fig5", "figS6", "figS7"};
}

RunResult reproduce_fig(const std::string& name, const RunConfig& config) {
  const auto panels = recipe(name, config);
  RunResult result;
  json index{{"figure", name}, {"panels", json::array()}};
  for (const auto& p : panels) {
    RunConfig c = p.config;
    c.output_dir = config.output_dir / name / p.dir;
    auto r = run(c);
    result.files.insert(result.files.end(), r.files.begin(), r.files.end());
    index["panels"].push_back({{"dir", p.dir}, {"summary", r.summary}});
  }
  ArtifactWriter w(config.output_dir / name, config.metadata());
  w.json("figure.json", index);
  result.files.insert(result.files.end(), w.files().begin(), w.files().end());
  result.summary = index;
  return result;
}

}  // namespace itz
