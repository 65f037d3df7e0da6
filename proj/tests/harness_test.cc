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

#include "coam/harness.h"

#include <gtest/gtest.h>

#include <set>

#include "coam/coamoeba.h"
#include "coam/discriminant.h"
#include "fixtures.h"
#include "oracles.h"

namespace coam {
namespace {

TEST(SampleCoamoeba, LinePointsLieInTheCoamoeba) {
  Matroid m = Matroid::build(fixture::line());
  CoamoebaCycle c = build_cycle(fixture::line());
  PointCloud cloud = sample_coamoeba(m, 2000, 7);
  EXPECT_EQ(cloud.n_requested, 2000U);
  EXPECT_EQ(cloud.points.size() + cloud.n_rejected, 2000U);
  for (const auto& p : cloud.points) {
    ASSERT_EQ(p.size(), 2U);
    EXPECT_TRUE(contains2(c, {p[0], p[1]}, 1e-9));
    EXPECT_TRUE(!oracle::in_open_hexagon(p[0], p[1]) ||
                oracle::hexagon_margin(p[0], p[1]) < 1e-9);
  }
}

TEST(SampleCoamoeba, Empty) {
  Matroid m = Matroid::build(fixture::line());
  EXPECT_TRUE(sample_coamoeba(m, 0, 1).points.empty());
}

TEST(SampleCoamoeba, DeterministicAcrossThreadCounts) {
  Matroid m = Matroid::build(fixture::running_b());
  PointCloud a = sample_coamoeba(m, 3000, 42, 1);
  PointCloud b = sample_coamoeba(m, 3000, 42, 3);
  PointCloud c = sample_coamoeba(m, 3000, 42);
  EXPECT_EQ(a.points, b.points);
  EXPECT_EQ(a.points, c.points);
  EXPECT_NE(a.points, sample_coamoeba(m, 3000, 43, 1).points);
}

TEST(SampleCoamoeba, ArgumentsInHalfOpenInterval) {
  Matroid m = Matroid::build(fixture::running_b());
  for (const auto& p : sample_coamoeba(m, 500, 5).points) {
    for (double t : p) {
      EXPECT_GT(t, -std::numbers::pi);
      EXPECT_LE(t, std::numbers::pi);
    }
  }
}

TEST(GridPoints, PrimitiveDistinctAndOffArrangement) {
  Matroid m = Matroid::build(fixture::running_b());
  std::vector<RatVector> pts = grid_points(m, 50);
  ASSERT_EQ(pts.size(), 50U);
  std::set<RatVector> seen(pts.begin(), pts.end());
  EXPECT_EQ(seen.size(), 50U);
  for (const RatVector& y : pts) {
    IntVector yi;
    for (const Rat& v : y) yi.push_back(v.get_num());
    EXPECT_EQ(content(yi), 1);
    for (std::size_t i = 0; i < m.size(); ++i) EXPECT_NE(dot(m.vectors().row(i), yi), 0);
  }
}

TEST(ResidueCheck, HyperplaneFamily) {
  for (std::size_t d = 2; d <= 5; ++d) {
    ResidueReport r = residue_check(fixture::hyperplane_poly(d),
                                    Matroid::build(fixture::hyperplane(d)), 20);
    EXPECT_EQ(r.max_abs, 0) << d;
    EXPECT_EQ(r.n_points, 20U);
  }
}

TEST(ResidueCheck, RunningAgainstPrintedPolynomial) {
  ResidueReport r = residue_check(fixture::big_discriminant(),
                                  Matroid::build(fixture::running_b()), 20);
  EXPECT_EQ(r.max_abs, 0);
}

TEST(ResidueCheck, ConstantOne) {
  SparsePoly one = SparsePoly::constant({"x1", "x2"}, 1);
  EXPECT_EQ(residue_check(one, Matroid::build(fixture::line()), 5).max_abs, 1);
}

TEST(GaussRoundtrip, Hyperplane) {
  RoundtripReport r = gauss_roundtrip(fixture::hyperplane_poly(3),
                                      Matroid::build(fixture::hyperplane(3)), 20);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.n_checked, 20U);
}

TEST(GaussRoundtrip, Running) {
  RoundtripReport r = gauss_roundtrip(fixture::big_discriminant(),
                                      Matroid::build(fixture::running_b()), 20);
  EXPECT_TRUE(r.pass) << r.diagnosis;
  EXPECT_EQ(r.n_checked, 20U);
}

TEST(GaussRoundtrip, PerturbedPolynomialFails) {
  SparsePoly f = fixture::big_discriminant();
  f.add_term({2, 2, 2}, 1);
  RoundtripReport r = gauss_roundtrip(f, Matroid::build(fixture::running_b()), 20);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_FALSE(r.diagnosis.empty());
}

TEST(ConjectureExperiment, PlaneIsCovered) {
  SampleReport r = conjecture_experiment_d3(Matroid::build(fixture::plane()), 2000,
                                            1e-6, 3);
  EXPECT_EQ(r.inside_fraction, 1.0);
  EXPECT_EQ(r.n_samples, 2000U);
  EXPECT_GT(r.n_valid, 1990U);
}

TEST(ConjectureExperiment, Deterministic) {
  Matroid m = Matroid::build(fixture::running_b());
  EXPECT_EQ(conjecture_experiment_d3(m, 1500, 1e-6, 9, 1),
            conjecture_experiment_d3(m, 1500, 1e-6, 9, 2));
}

TEST(ConjectureExperiment, ZeroSamples) {
  SampleReport r = conjecture_experiment_d3(Matroid::build(fixture::plane()), 0, 1e-6, 1);
  EXPECT_EQ(r.n_valid, 0U);
  EXPECT_EQ(r.inside_fraction, 1.0);
}

}  // namespace
}  // namespace coam
