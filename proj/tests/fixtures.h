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

#ifndef COAM_TESTS_FIXTURES_H_
#define COAM_TESTS_FIXTURES_H_

#include "coam/configuration.h"
#include "coam/polynomial.h"
#include "oracles.h"

namespace coam::fixture {

inline PointConfiguration running_a() {
  return PointConfiguration::make(
      IntMatrix{{1, 1, 1, 1, 1, 1}, {0, 0, 1, 4, 2, 3}, {0, 1, 0, 2, 1, 2}});
}

inline VectorConfiguration running_b() {
  return VectorConfiguration::make(IntMatrix{
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, 0}, {-2, -1, -2}, {0, -2, 1}});
}

inline VectorConfiguration f_h() {
  return VectorConfiguration::make(IntMatrix{{3, 0}, {0, 1}, {-1, -2}, {-2, 1}});
}

inline VectorConfiguration line() {
  return VectorConfiguration::make(IntMatrix{{1, 0}, {0, 1}, {-1, -1}});
}

// Rows of the identity followed by the all minus-one row.
inline VectorConfiguration hyperplane(std::size_t d) {
  IntMatrix b(d + 1, d);
  for (std::size_t i = 0; i < d; ++i) {
    b(i, i) = 1;
    b(d, i) = -1;
  }
  return VectorConfiguration::make(b);
}

inline VectorConfiguration plane() { return hyperplane(3); }

inline PointConfiguration ones(std::size_t n) {
  IntMatrix a(1, n);
  for (std::size_t j = 0; j < n; ++j) a(0, j) = 1;
  return PointConfiguration::make(a);
}

// x1 + ... + xd + 1.
inline SparsePoly hyperplane_poly(std::size_t d) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < d; ++i) vars.push_back("x" + std::to_string(i + 1));
  SparsePoly f = SparsePoly::constant(vars, 1);
  for (std::size_t i = 0; i < d; ++i) f += SparsePoly::variable(vars, i);
  return f;
}

inline SparsePoly big_discriminant() {
  return read_polynomial_file(oracle::data_path("big_discriminant.txt"));
}

}  // namespace coam::fixture

#endif  // COAM_TESTS_FIXTURES_H_
