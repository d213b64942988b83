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

#include "itz/error.hpp"

namespace itz {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RootCountMismatch: return "ROOT_COUNT_MISMATCH";
    case ErrorCode::NoPiMode: return "NO_PI_MODE";
    case ErrorCode::DimensionCapExceeded: return "DIMENSION_CAP_EXCEEDED";
    case ErrorCode::EigensolverFailure: return "EIGENSOLVER_FAILURE";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::TauZero: return "TAU_ZERO";
    case ErrorCode::TZero: return "T_ZERO";
    case ErrorCode::ChannelMismatch: return "CHANNEL_MISMATCH";
    case ErrorCode::EdgeSingularity: return "EDGE_SINGULARITY";
    case ErrorCode::InsufficientRange: return "INSUFFICIENT_RANGE";
    case ErrorCode::WindingAmbiguous: return "WINDING_AMBIGUOUS";
    case ErrorCode::InsufficientSizes: return "INSUFFICIENT_SIZES";
    case ErrorCode::AtPole: return "AT_POLE";
    case ErrorCode::NoOverlap: return "NO_OVERLAP";
    case ErrorCode::NoZeroFound: return "NO_ZERO_FOUND";
    case ErrorCode::UnmatchedZero: return "UNMATCHED_ZERO";
    case ErrorCode::ConfigInvalid: return "CONFIG_INVALID";
    case ErrorCode::NumericalFailure: return "NUMERICAL_FAILURE";
    case ErrorCode::UnknownFigure: return "UNKNOWN_FIGURE";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

bool is_numerical(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConfigInvalid:
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnknownFigure:
    case ErrorCode::DimensionCapExceeded:
      return false;
    default:
      return true;
  }
}

}  // namespace itz
