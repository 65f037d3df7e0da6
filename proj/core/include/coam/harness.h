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

#ifndef COAM_HARNESS_H_
#define COAM_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coam/exact_linalg.h"
#include "coam/matroid.h"
#include "coam/polynomial.h"

namespace coam {

// Samples are produced in chunks; chunk k draws from mt19937_64(seed + k).
inline constexpr std::size_t kSampleChunk = 1024;

// COAMOEBA_THREADS if set, otherwise the hardware concurrency.
unsigned default_thread_count();

struct PointCloud {
  std::vector<std::vector<double>> points;  // radians in (-pi, pi]
  std::size_t n_requested = 0;
  std::size_t n_rejected = 0;
};

// Arg(psi(y)) for y with independent complex standard normal coordinates;
// draws within kArrangementThreshold of the arrangement are dropped.
PointCloud sample_coamoeba(const Matroid& m, std::size_t n, std::uint64_t seed,
                           unsigned threads = 0);

// Primitive integer points ordered by max norm then lexicographically,
// first nonzero coordinate positive, off the arrangement of B.
std::vector<RatVector> grid_points(const Matroid& m, std::size_t n);

struct ResidueReport {
  Rat max_abs;
  std::size_t n_points = 0;
  std::optional<RatVector> worst_point;
};

ResidueReport residue_check(const SparsePoly& f, const Matroid& m,
                            std::size_t n);

struct RoundtripReport {
  bool pass = true;
  std::size_t n_checked = 0;
  std::size_t n_singular = 0;  // psi(y) where every partial vanishes, skipped
  std::optional<RatVector> counterexample;
  std::optional<RatVector> image;  // log_gauss at the counterexample
  std::string diagnosis;
};

RoundtripReport gauss_roundtrip(const SparsePoly& f, const Matroid& m,
                                std::size_t n);

struct SampleReport {
  std::size_t n_samples = 0;
  std::size_t n_valid = 0;
  double inside_fraction = 1.0;
  double max_boundary_distance = 0.0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;

  friend bool operator==(const SampleReport&, const SampleReport&) = default;
};

SampleReport conjecture_experiment_d3(const Matroid& m, std::size_t n,
                                      double tol, std::uint64_t seed,
                                      unsigned threads = 0);

}  // namespace coam

#endif  // COAM_HARNESS_H_
