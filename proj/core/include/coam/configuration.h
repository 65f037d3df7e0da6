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

#ifndef COAM_CONFIGURATION_H_
#define COAM_CONFIGURATION_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coam/exact_linalg.h"

namespace coam {

// Points of A are the columns of an m x n matrix.
struct PointConfiguration {
  IntMatrix a_matrix;
  std::vector<std::string> labels;

  static PointConfiguration make(IntMatrix a,
                                 std::vector<std::string> labels = {});
  std::size_t dimension() const { return a_matrix.rows(); }
  std::size_t size() const { return a_matrix.cols(); }
};

// Vectors of B are the rows of an n x d matrix.
struct VectorConfiguration {
  IntMatrix b_matrix;
  std::vector<std::string> labels;

  static VectorConfiguration make(IntMatrix b,
                                  std::vector<std::string> labels = {});
  std::size_t size() const { return b_matrix.rows(); }
  std::size_t ambient_rank() const { return b_matrix.cols(); }
  IntVector row(std::size_t i) const { return b_matrix.row(i); }
  IntVector row_sum() const;
  bool has_zero_row() const;
};

struct ValidationReport {
  bool spans = false;
  std::optional<IntVector> u;
  bool pyramid = false;
};

struct GalePair {
  PointConfiguration a;
  VectorConfiguration b;
  IntVector u;
};

// Labels "1", "2", ..., "n".
std::vector<std::string> default_labels(std::size_t n);

ValidationReport validate_a(const PointConfiguration& a);
VectorConfiguration gale_dual(const PointConfiguration& a);
bool check_gale_pair(const GalePair& p);
bool check_gale_pair(const PointConfiguration& a, const VectorConfiguration& b);

// x = y * U for some unimodular U.
bool equal_up_to_unimodular(const IntMatrix& x, const IntMatrix& y);

}  // namespace coam

#endif  // COAM_CONFIGURATION_H_
