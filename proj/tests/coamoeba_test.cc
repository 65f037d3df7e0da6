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

#include "coam/coamoeba.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>

#include "coam/discriminant.h"
#include "coam/error.h"
#include "fixtures.h"
#include "oracles.h"

namespace coam {
namespace {

using std::numbers::pi;

Polygon poly(std::initializer_list<std::pair<long, long>> pts) {
  Polygon p;
  for (auto [x, y] : pts) p.vertices.push_back({Rat(x), Rat(y)});
  return p;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kInvalidInput;
}

TEST(Polygon, ShoelaceAndReflection) {
  Polygon square = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  EXPECT_EQ(square.signed_area(), 1);
  EXPECT_TRUE(square.is_simple());
  EXPECT_EQ(square.reflected().vertices[2], (Point2{-1, -1}));
  Polygon bowtie = poly({{0, 0}, {1, 1}, {1, 0}, {0, 1}});
  EXPECT_FALSE(bowtie.is_simple());
}

TEST(Zonotope, LineHexagon) {
  Polygon z = zonotope(fixture::line());
  EXPECT_EQ(z.signed_area(), 3);
  ASSERT_EQ(z.vertices.size(), 6U);
  std::vector<std::pair<long, long>> expected = {{1, 0}, {1, 1}, {0, 1},
                                                 {-1, 0}, {-1, -1}, {0, -1}};
  for (const auto& [x, y] : expected) {
    EXPECT_NE(std::find(z.vertices.begin(), z.vertices.end(), Point2{x, y}),
              z.vertices.end());
  }
}

TEST(Zonotope, FhArea) {
  EXPECT_EQ(zonotope(fixture::f_h()).signed_area(), 20);
}

TEST(Zonotope, Errors) {
  EXPECT_EQ(code_of([] {
              zonotope(VectorConfiguration::make(IntMatrix{{1, 0}, {2, 0}, {-3, 0}}));
            }),
            ErrorCode::kParallelRows);
  EXPECT_EQ(code_of([] {
              zonotope(VectorConfiguration::make(IntMatrix{{1, 0}, {0, 1}}));
            }),
            ErrorCode::kNonzeroSum);
  EXPECT_EQ(code_of([] {
              build_cycle(VectorConfiguration::make(IntMatrix{{1, 0}, {-1, 0}}));
            }),
            ErrorCode::kDegenerateZonotope);
}

TEST(HalfCycles, Fh) {
  HalfCycles h = half_coamoeba_cycles(fixture::f_h());
  EXPECT_EQ(h.plus.vertices, poly({{3, 1}, {3, 0}, {4, 2}, {1, 2}}).vertices);
  EXPECT_EQ(h.plus.signed_area(), 2);
  EXPECT_EQ(h.minus.vertices, h.plus.reflected().vertices);
  // f1 = (0,1), f2 = (-1,-2), f3 = (3,0), f4 = (-2,1).
  EXPECT_EQ(h.order, (std::vector<std::size_t>{1, 2, 0, 3}));
  EXPECT_TRUE(h.simple);
}

TEST(HalfCycles, LineTriangle) {
  HalfCycles h = half_coamoeba_cycles(fixture::line());
  EXPECT_EQ(h.plus.vertices, poly({{1, 1}, {1, 0}, {2, 1}}).vertices);
  EXPECT_EQ(h.plus.signed_area(), Rat(1, 2));
  EXPECT_EQ(h.minus.signed_area(), Rat(1, 2));
}

TEST(Degree, Examples) {
  EXPECT_EQ(build_cycle(fixture::f_h()).degree, 6);
  EXPECT_EQ(build_cycle(fixture::line()).degree, 1);
  Matroid plane = Matroid::build(fixture::plane());
  Restriction r = restrict_to_flat(plane, closure(plane, label_set({3})));
  EXPECT_EQ(build_cycle(r.b_restricted).degree, 1);
}

TEST(Degree, AreaQuotient) {
  CoamoebaCycle c = build_cycle(fixture::f_h());
  EXPECT_EQ(degree_dH(c), 6);
  Rat total = c.zonotope.signed_area() + c.plus.signed_area() + c.minus.signed_area();
  EXPECT_EQ(total, 24);
}

TEST(BuildCycle, MergesParallelAndRecordsShift) {
  CoamoebaCycle c = build_cycle(
      VectorConfiguration::make(IntMatrix{{1, 0}, {-2, 0}, {0, 1}, {1, -1}}));
  EXPECT_EQ(c.generators.size(), 3U);
  EXPECT_EQ(c.arg_shift, (std::array<int, 2>{1, 0}));
  EXPECT_EQ(c.degree, 1);
}

TEST(BuildCycle, RestrictionOfFirstHyperplaneIsFh) {
  Matroid m = Matroid::build(fixture::running_b());
  Restriction r = restrict_to_flat(m, closure(m, label_set({1})));
  CoamoebaCycle c = build_cycle(r.b_restricted);
  EXPECT_EQ(c.degree, 6);
  EXPECT_EQ(c.arg_shift, (std::array<int, 2>{0, 0}));
  EXPECT_TRUE(equal_up_to_unimodular(c.generators.b_matrix, fixture::f_h().b_matrix));
}

TEST(Contains2, LineExamples) {
  CoamoebaCycle c = build_cycle(fixture::line());
  EXPECT_TRUE(contains2(c, {pi / 2, -3 * pi / 4}));
  EXPECT_FALSE(contains2(c, {0, 0}));
  EXPECT_TRUE(contains2(c, {pi, pi}));
  EXPECT_TRUE(contains2_exact(c, {Rat(1, 2), Rat(-3, 4)}));
  EXPECT_FALSE(contains2_exact(c, {Rat(0), Rat(0)}));
  EXPECT_TRUE(contains2_exact(c, {Rat(1), Rat(1)}));
}

TEST(Contains2, LineMatchesHexagonComplement) {
  CoamoebaCycle c = build_cycle(fixture::line());
  std::size_t mismatches = 0;
  std::size_t checked = 0;
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const double x = -pi + (i + 0.5) * 2 * pi / 100;
      const double y = -pi + (j + 0.5) * 2 * pi / 100;
      if (oracle::hexagon_margin(x, y) < 1e-6) continue;
      ++checked;
      mismatches += contains2(c, {x, y}) == oracle::in_open_hexagon(x, y);
    }
  }
  EXPECT_GT(checked, 9000U);
  EXPECT_EQ(mismatches, 0U);
}

TEST(Contains2, StartVertexInvariance) {
  for (const VectorConfiguration& f : {fixture::f_h(), fixture::line()}) {
    CoamoebaCycle canonical = build_cycle(f);
    std::vector<std::size_t> starts = valid_start_vertices(f);
    ASSERT_FALSE(starts.empty());
    for (std::size_t s : starts) {
      CoamoebaCycle other = build_cycle(f, s);
      EXPECT_EQ(other.degree, canonical.degree);
      for (int i = 0; i < 41; ++i) {
        for (int j = 0; j < 41; ++j) {
          std::array<double, 2> t = {-pi + (i + 0.377) * 2 * pi / 41,
                                     -pi + (j + 0.611) * 2 * pi / 41};
          if (distance2(canonical, t) < 1e-6) continue;
          EXPECT_EQ(contains2(other, t), contains2(canonical, t))
              << "start " << s << " at " << t[0] << "," << t[1];
        }
      }
    }
  }
}

TEST(Contains2, ExactAgreesWithFloating) {
  CoamoebaCycle c = build_cycle(fixture::f_h());
  for (int i = -8; i <= 8; ++i) {
    for (int j = -8; j <= 8; ++j) {
      Rat x(i, 8);
      Rat y(j, 8);
      const bool exact = contains2_exact(c, {x, y});
      if (distance2(c, {x.get_d() * pi, y.get_d() * pi}) > 1e-6) {
        EXPECT_EQ(exact, contains2(c, {x.get_d() * pi, y.get_d() * pi}));
      }
    }
  }
}

TEST(Prisms, Running) {
  Matroid m = Matroid::build(fixture::running_b());
  std::vector<Prism> prisms = prisms_d3(m);
  ASSERT_EQ(prisms.size(), 6U);
  std::vector<long> degrees;
  for (const Prism& p : prisms) {
    EXPECT_EQ(p.hyperplane_flat.corank, 1U);
    EXPECT_EQ(p.projection.rows(), 2U);
    EXPECT_EQ(p.projection.cols(), 3U);
    degrees.push_back(p.base.degree);
  }
  EXPECT_EQ(degrees, (std::vector<long>{6, 4, 3, 3, 7, 6}));
}

TEST(Prisms, PlaneOverLines) {
  Matroid m = Matroid::build(fixture::plane());
  std::vector<Prism> prisms = prisms_d3(m);
  ASSERT_EQ(prisms.size(), 4U);
  for (const Prism& p : prisms) {
    EXPECT_EQ(p.base.degree, 1);
    EXPECT_EQ(p.base.zonotope.signed_area(), 3);
  }
}

TEST(Prisms, NeedsDimensionThree) {
  EXPECT_EQ(code_of([] { prisms_d3(Matroid::build(fixture::line())); }),
            ErrorCode::kDimensionNot3);
}

TEST(ContainsPls3, PlaneExamples) {
  std::vector<Prism> prisms = prisms_d3(Matroid::build(fixture::plane()));
  for (double t3 : {-3.0, -1.0, 0.0, 0.5, 2.0, pi}) {
    EXPECT_TRUE(contains_pls3(prisms, {pi / 2, -3 * pi / 4, t3}).inside) << t3;
  }
  // Every prism sends the origin to the center of its hexagon.
  for (const Prism& p : prisms) {
    std::array<double, 2> t = project_angles(p, {0, 0, 0});
    EXPECT_FALSE(contains2(p.base, t));
  }
  PrismHit origin = contains_pls3(prisms, {0, 0, 0});
  EXPECT_FALSE(origin.inside);
  EXPECT_FALSE(origin.witness.has_value());
  PrismHit vertex = contains_pls3(prisms, {std::numbers::pi, 0, 0});
  EXPECT_TRUE(vertex.inside);
  EXPECT_TRUE(vertex.witness.has_value());
  EXPECT_FALSE(contains_pls3({}, {0, 0, 0}).inside);
}

}  // namespace
}  // namespace coam
