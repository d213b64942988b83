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

#ifndef ITZ_RUN_HPP
#define ITZ_RUN_HPP

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "itz/cache.hpp"
#include "itz/config.hpp"
#include "itz/svg.hpp"

namespace itz {

/// Writes artifacts into one directory, stamping each with the metadata lines
/// of the run (CSV '#' lines, SVG comments, a "metadata" JSON field).
class ArtifactWriter {
 public:
  ArtifactWriter(std::filesystem::path dir, std::vector<std::string> metadata);

  void csv(const std::string& name, const std::function<void(std::ostream&, const std::vector<std::string>&)>& body);
  void json(const std::string& name, nlohmann::json value);
  void svg(const std::string& name, const SvgPlot& plot);

  const std::filesystem::path& dir() const { return dir_; }
  const std::vector<std::filesystem::path>& files() const { return files_; }
  const std::vector<std::string>& metadata() const { return metadata_; }

 private:
  std::filesystem::path dir_;
  std::vector<std::string> metadata_;
  std::vector<std::filesystem::path> files_;
};

struct RunResult {
  std::vector<std::filesystem::path> files;
  nlohmann::json summary;
};

/// Executes one command and writes its artifacts to config.output_dir.
/// Throws Error; the CLI maps validation codes to exit 2 and numerical codes
/// to exit 3.
RunResult run(const RunConfig& config);

/// Figure recipes: fig1a fig1b fig2 fig3 fig3b fig4 fig5 figS6 figS7.
std::vector<std::string> figure_names();

/// Throws UnknownFigure for other names.
RunResult reproduce_fig(const std::string& name, const RunConfig& config);

/// Cache chosen by the config, or null when caching is off.
std::unique_ptr<SpectrumCache> make_cache(const RunConfig& config);

}  // namespace itz

#endif  // ITZ_RUN_HPP
