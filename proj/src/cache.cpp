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

#include "itz/cache.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <string>

#include <fmt/format.h>

#include "itz/csv.hpp"
#include "itz/error.hpp"

namespace itz {

SpectrumCache::SpectrumCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (dir_.empty()) {
    const char* env = std::getenv("ITZ_CACHE_DIR");
    dir_ = (env != nullptr && *env != '\0') ? std::filesystem::path(env) : std::filesystem::path(".itz_cache");
  }
}

std::filesystem::path SpectrumCache::path_for(const ModelSpec& model) const {
  return dir_ / (model_key(model) + ".csv");
}

std::optional<ManyBodySpectrum> SpectrumCache::load(const ModelSpec& model, bool need_diagonals) const {
  std::ifstream in(path_for(model));
  if (!in) return std::nullopt;
  ManyBodySpectrum out;
  out.model = model;
  bool diagonals = true;
  try {
    for (const auto& row : read_csv_rows(in)) {
      if (row.size() != 4) return std::nullopt;
      out.energies.push_back(std::stod(row[1]));
      if (row[2] == "nan") {
        diagonals = false;
      } else {
        out.diag_sx.push_back(std::stod(row[2]));
        out.diag_sz.push_back(std::stod(row[3]));
      }
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (out.energies.size() != hilbert_dim(model)) return std::nullopt;
  if (!diagonals) {
    out.diag_sx.clear();
    out.diag_sz.clear();
  }
  if (need_diagonals && !out.has_diagonals()) return std::nullopt;
  out.dim = out.energies.size();
  return out;
}

void SpectrumCache::store(const ManyBodySpectrum& spectrum) const {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(spectrum.model);
  auto tmp = target;
  tmp += fmt::format(".tmp{}", static_cast<long>(std::hash<std::string>{}(target.string()) & 0xffff));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidArgument, fmt::format("cannot write cache file {}", tmp.string()));
    write_csv_header(out, {"n", "E", "diag_Sx", "diag_Sz"}, {"model=" + model_key(spectrum.model)});
    const bool diag = spectrum.has_diagonals();
    for (std::size_t i = 0; i < spectrum.energies.size(); ++i) {
      out << i << ',' << format_real(spectrum.energies[i]) << ','
          << (diag ? format_real(spectrum.diag_sx[i]) : std::string("nan")) << ','
          << (diag ? format_real(spectrum.diag_sz[i]) : std::string("nan")) << '\n';
    }
  }
  std::filesystem::rename(tmp, target);
}

ManyBodySpectrum cached_exact_spectrum(const ModelSpec& model, bool with_diagonals, const SpectrumCache* cache,
                                       const Limits& limits) {
  if (cache != nullptr) {
    if (auto hit = cache->load(model, with_diagonals)) return *hit;
  }
  auto spectrum = exact_spectrum(model, with_diagonals, limits);
  if (cache != nullptr) cache->store(spectrum);
  return spectrum;
}

}  // namespace itz
