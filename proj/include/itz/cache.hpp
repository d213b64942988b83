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

#ifndef ITZ_CACHE_HPP
#define ITZ_CACHE_HPP

#include <filesystem>
#include <optional>

#include "itz/manybody.hpp"

namespace itz {

/// On-disk ED spectrum cache, one CSV per model (columns n,E,diag_Sx,diag_Sz).
class SpectrumCache {
 public:
  /// Empty directory means ITZ_CACHE_DIR, falling back to ".itz_cache".
  explicit SpectrumCache(std::filesystem::path dir = {});

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const ModelSpec& model) const;

  /// Cache hit only if the stored entry carries diagonals when they are needed.
  std::optional<ManyBodySpectrum> load(const ModelSpec& model, bool need_diagonals) const;

  /// Atomic write: temp file in the cache directory, then rename.
  void store(const ManyBodySpectrum& spectrum) const;

 private:
  std::filesystem::path dir_;
};

/// ED with optional cache lookup; cache == nullptr always diagonalizes.
ManyBodySpectrum cached_exact_spectrum(const ModelSpec& model, bool with_diagonals, const SpectrumCache* cache,
                                       const Limits& limits = {});

}  // namespace itz

#endif  // ITZ_CACHE_HPP
