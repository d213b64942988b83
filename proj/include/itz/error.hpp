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

#ifndef ITZ_ERROR_HPP
#define ITZ_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace itz {

enum class ErrorCode {
  RootCountMismatch,
  NoPiMode,
  DimensionCapExceeded,
  EigensolverFailure,
  DimensionMismatch,
  TauZero,
  TZero,
  ChannelMismatch,
  EdgeSingularity,
  InsufficientRange,
  WindingAmbiguous,
  InsufficientSizes,
  AtPole,
  NoOverlap,
  NoZeroFound,
  UnmatchedZero,
  ConfigInvalid,
  NumericalFailure,
  UnknownFigure,
  InvalidArgument,
};

/// Upper-snake-case name of an error code, e.g. "ROOT_COUNT_MISMATCH".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// True for error codes that stem from a failed numerical procedure rather
/// than from invalid input. The CLI maps these to exit code 3.
bool is_numerical(ErrorCode code);

}  // namespace itz

#endif  // ITZ_ERROR_HPP
