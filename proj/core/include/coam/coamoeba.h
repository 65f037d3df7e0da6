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

#ifndef COAM_COAMOEBA_H_
#define COAM_COAMOEBA_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "coam/configuration.h"
#include "coam/exact_linalg.h"
#include "coam/matroid.h"

namespace coam {

// Coordinates are rational multiples of pi. Half-coamoeba boundaries are
// oriented cycles and may cross themselves; membership counts winding.
struct Point2 {
  Rat x;
  Rat y;
  friend bool operator==(const Point2& a, const Point2& b) {
    return a.x == b.x && a.y == b.y;
  }
};

struct Polygon {
  std::vector<Point2> vertices;

  Rat signed_area() const;  // in units of pi^2, positive when CCW
  bool is_simple() const;
  Polygon reflected() const;  // p -> -p
};

struct CoamoebaCycle {
  VectorConfiguration generators;  // after merging parallel vectors
  Polygon zonotope;
  Polygon plus;
  Polygon minus;
  long degree = 0;
  std::array<int, 2> arg_shift = {0, 0};  // multiples of pi
  std::vector<std::size_t> order;          // generator indices f1, ..., fr
  bool simple = true;                      // plus has no self-crossings
};

struct Prism {
  Flat hyperplane_flat;
  IntMatrix projection;  // 2 x 3
  CoamoebaCycle base;
};

Polygon zonotope(const VectorConfiguration& f);

// Zonotope vertices whose incoming edge is +f for a generator f.
std::vector<std::size_t> valid_start_vertices(const VectorConfiguration& f);

struct HalfCycles {
  Polygon plus;
  Polygon minus;
  std::vector<std::size_t> order;
  bool simple = true;
};

// `start` indexes zonotope(f).vertices; defaults to the lexicographically
// largest valid vertex.
HalfCycles half_coamoeba_cycles(const VectorConfiguration& f,
                                std::optional<std::size_t> start = {});

long degree_dH(const CoamoebaCycle& c);

CoamoebaCycle build_cycle(const VectorConfiguration& b2,
                          std::optional<std::size_t> start = {});

inline constexpr double kMembershipTolerance = 1e-9;

// theta in radians, reduced to (-pi, pi]^2.
bool contains2(const CoamoebaCycle& c, std::array<double, 2> theta,
               double tol = kMembershipTolerance);
// theta given exactly in units of pi.
bool contains2_exact(const CoamoebaCycle& c, std::array<Rat, 2> theta);
// Radians from theta to the closed coamoeba, 0 inside.
double distance2(const CoamoebaCycle& c, std::array<double, 2> theta);

std::vector<Prism> prisms_d3(const Matroid& m);

std::array<double, 2> project_angles(const Prism& p,
                                     std::array<double, 3> theta);

struct PrismHit {
  bool inside = false;
  std::optional<std::size_t> witness;
};

PrismHit contains_pls3(std::span<const Prism> prisms,
                       std::array<double, 3> theta,
                       double tol = kMembershipTolerance);

}  // namespace coam

#endif  // COAM_COAMOEBA_H_
