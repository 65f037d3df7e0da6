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

#ifndef COAM_DISCRIMINANT_H_
#define COAM_DISCRIMINANT_H_

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "coam/configuration.h"
#include "coam/exact_linalg.h"
#include "coam/matroid.h"
#include "coam/polynomial.h"
#include "coam/tropical_fan.h"

namespace coam {

class HornKapranovMap {
 public:
  explicit HornKapranovMap(VectorConfiguration b);

  const VectorConfiguration& vectors() const { return b_; }
  std::size_t dimension() const { return b_.ambient_rank(); }

 private:
  VectorConfiguration b_;
};

RatVector psi_exact(const HornKapranovMap& h, std::span<const Rat> y);

struct ComplexImage {
  std::vector<std::complex<double>> value;
  std::vector<double> arg;  // in (-pi, pi]
};

inline constexpr double kArrangementThreshold = 1e-8;

ComplexImage psi_complex(const HornKapranovMap& h,
                         std::span<const std::complex<double>> y,
                         double threshold = kArrangementThreshold);

// Representative of x modulo 2 pi in (-pi, pi].
double reduce_angle(double x);

RatVector log_gauss(const SparsePoly& f, std::span<const Rat> y);
std::vector<std::complex<double>> log_gauss(
    const SparsePoly& f, std::span<const std::complex<double>> y);

bool projectively_equal(std::span<const Rat> a, std::span<const Rat> b);

// Sum of w(b) b over B.
RatVector phi_b(const Matroid& m, const Weight& w);

std::vector<FlagOfFlats> non_splitting_flags(const Matroid& m);
bool nondefective(const Matroid& m);
bool nondefective(const VectorConfiguration& b);
std::vector<Flat> non_splitting_flats(const Matroid& m);

std::vector<Flat> essential_flacets(const Matroid& m);

enum class RayType { kType1, kType2 };

struct TropRay {
  IntVector direction;  // primitive
  RayType type = RayType::kType1;
  std::optional<Flat> flat;
  bool essential = false;
};

std::vector<TropRay> tdiscr_rays(const Matroid& m);

struct ProjectedCone {
  std::vector<std::size_t> rays;    // indices into bergman_rays(m)
  std::vector<IntVector> generators;  // their images under phi_b
};

std::vector<ProjectedCone> projected_cones(const Matroid& m);

// Type-1 rays followed by the rays where two planar sectors cross.
std::vector<TropRay> tdiscr_fan_d3(const Matroid& m);

}  // namespace coam

#endif  // COAM_DISCRIMINANT_H_
