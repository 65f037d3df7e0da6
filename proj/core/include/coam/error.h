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

#ifndef COAM_ERROR_H_
#define COAM_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace coam {

enum class ErrorCode {
  kInvalidInput,
  kNotSaturated,
  kNotSpanning,
  kNoAffineHyperplane,
  kZeroVector,
  kDisconnected,
  kNotInTropical,
  kLevelSetNotAFlat,
  kSyntaxError,
  kUnknownVariable,
  kOnArrangement,
  kNearArrangement,
  kSingularPoint,
  kDimensionNot3,
  kDefective,
  kParallelRows,
  kNonzeroSum,
  kDegenerateZonotope,
  kNonSimplePolygon,
  kNonIntegralDegree,
};

std::string_view error_name(ErrorCode code);

// True for codes that signal a broken internal invariant rather than bad
// input.
bool is_invariant_violation(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coam

#endif  // COAM_ERROR_H_
