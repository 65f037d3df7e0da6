// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coam/error.h"

namespace coam {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kNotSaturated: return "NotSaturated";
    case ErrorCode::kNotSpanning: return "NotSpanning";
    case ErrorCode::kNoAffineHyperplane: return "NoAffineHyperplane";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kNotInTropical: return "NotInTropical";
    case ErrorCode::kLevelSetNotAFlat: return "LevelSetNotAFlat";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnknownVariable: return "UnknownVariable";
    case ErrorCode::kOnArrangement: return "OnArrangement";
    case ErrorCode::kNearArrangement: return "NearArrangement";
    case ErrorCode::kSingularPoint: return "SingularPoint";
    case ErrorCode::kDimensionNot3: return "DimensionNot3";
    case ErrorCode::kDefective: return "Defective";
    case ErrorCode::kParallelRows: return "ParallelRows";
    case ErrorCode::kNonzeroSum: return "NonzeroSum";
    case ErrorCode::kDegenerateZonotope: return "DegenerateZonotope";
    case ErrorCode::kNonSimplePolygon: return "NonSimplePolygon";
    case ErrorCode::kNonIntegralDegree: return "NonIntegralDegree";
  }
  return "Unknown";
}

bool is_invariant_violation(ErrorCode code) {
  return code == ErrorCode::kNonIntegralDegree ||
         code == ErrorCode::kNonSimplePolygon ||
         code == ErrorCode::kLevelSetNotAFlat;
}

}  // namespace coam
