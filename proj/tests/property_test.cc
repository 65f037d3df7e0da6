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

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "coam/coamoeba.h"
#include "coam/configuration.h"
#include "coam/discriminant.h"
#include "coam/error.h"
#include "coam/harness.h"
#include "coam/matroid.h"
#include "coam/polynomial.h"
#include "coam/tropical_fan.h"
#include "fixtures.h"
#include "oracles.h"

namespace coam {
namespace {

using std::numbers::pi;

oracle::RankFn rank_oracle(const VectorConfiguration& b) {
  oracle::Rows rows = oracle::to_rows(b.b_matrix);
  return [rows](std::uint64_t s) {
    oracle::Rows sub;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if ((s >> i) & 1U) sub.push_back(rows[i]);
    }
    return oracle::rank_by_minors(sub);
  };
}

VectorConfiguration random_b(std::mt19937_64& rng, std::size_t n, std::size_t d,
                             long range = 3) {
  return VectorConfiguration::make(
      oracle::to_matrix(oracle::random_gale_matrix(rng, n, d, range)));
}

// Spanning, nonzero rows, no zero-sum requirement.
VectorConfiguration random_spanning(std::mt19937_64& rng, std::size_t n, std::size_t d) {
  std::uniform_int_distribution<long> entry(-2, 2);
  std::bernoulli_distribution sparse(0.4);
  while (true) {
    oracle::Rows rows(n, std::vector<long>(d));
    bool zero_row = false;
    for (auto& r : rows) {
      for (long& v : r) v = sparse(rng) ? 0 : entry(rng);
      zero_row = zero_row || std::all_of(r.begin(), r.end(), [](long v) { return v == 0; });
    }
    if (!zero_row && oracle::rank_by_minors(rows) == d) {
      return VectorConfiguration::make(oracle::to_matrix(rows));
    }
  }
}

RatVector random_y(std::mt19937_64& rng, const VectorConfiguration& b) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  while (true) {
    RatVector y;
    for (std::size_t j = 0; j < b.ambient_rank(); ++j) {
      Rat v(num(rng), den(rng));
      v.canonicalize();
      y.push_back(v);
    }
    bool off = true;
    for (std::size_t i = 0; i < b.size() && off; ++i) {
      off = sgn(dot(b.row(i), std::span<const Rat>(y))) != 0;
    }
    if (off) return y;
  }
}

TEST(LinalgProperty, KernelOrthogonalAndComplementary) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + trial % 3;
    std::size_t cols = rows + 1 + trial % 3;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
    }
    LatticeBasis k = integer_kernel(m);
    EXPECT_EQ(k.rank() + rank_rational(m), cols);
    for (const IntVector& v : k.vectors) {
      for (std::size_t i = 0; i < rows; ++i) EXPECT_EQ(dot(m.row(i), v), 0);
    }
    // Saturated: the HNF of the basis has unit pivots.
    if (k.rank() > 0) {
      IntMatrix h = hermite_normal_form(k.as_rows()).h;
      for (std::size_t r = 0; r < h.rows(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          if (sgn(h(r, c)) != 0) {
            EXPECT_GT(h(r, c), 0);
            break;
          }
        }
      }
      IntMatrix p = quotient_projection(cols, k);
      EXPECT_EQ(p.rows(), cols - k.rank());
      for (const IntVector& v : k.vectors) {
        for (std::size_t r = 0; r < p.rows(); ++r) EXPECT_EQ(dot(p.row(r), v), 0);
      }
      if (p.rows() > 0) {
        IntMatrix hp = hermite_normal_form(p.transpose()).h;
        for (std::size_t r = 0; r < p.rows(); ++r) EXPECT_EQ(hp(r, r), 1);
      }
    }
  }
}

TEST(ConfigurationProperty, GaleDualOfRandomA) {
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<long> entry(0, 3);
  int checked = 0;
  while (checked < 40) {
    IntMatrix a(3, 6);
    for (std::size_t j = 0; j < 6; ++j) {
      a(0, j) = 1;
      a(1, j) = entry(rng);
      a(2, j) = entry(rng);
    }
    PointConfiguration pa = PointConfiguration::make(a);
    ValidationReport r = validate_a(pa);
    if (!r.spans || !r.u) continue;
    VectorConfiguration b = gale_dual(pa);
    EXPECT_TRUE(check_gale_pair(pa, b));
    EXPECT_TRUE(is_zero(b.row_sum()));
    EXPECT_EQ(r.pyramid, b.has_zero_row());
    ++checked;
  }
}

TEST(MatroidProperty, ClosureIdempotentAndMonotone) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 20; ++trial) {
    Matroid m = Matroid::build(random_spanning(rng, 6, 3));
    for (LabelSet s = 0; s <= m.ground_set(); ++s) {
      LabelSet c = closure(m, s).forms;
      EXPECT_EQ(c & s, s);
      EXPECT_EQ(closure(m, c).forms, c);
      for (std::size_t i = 0; i < m.size(); ++i) {
        EXPECT_EQ(closure(m, s | singleton(i)).forms & c, c);
      }
    }
    EXPECT_EQ(closure(m, 0).forms, 0U);
  }
}

TEST(MatroidProperty, ExchangeGraphMatchesCircuitOracle) {
  std::mt19937_64 rng(404);
  std::size_t connected = 0;
  std::size_t disconnected = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 2 + trial % 3;
    const std::size_t n = d + 1 + trial % (9 - d);
    VectorConfiguration b = random_spanning(rng, std::min<std::size_t>(n, 8), d);
    Matroid m = Matroid::build(b);
    const bool oracle_says = oracle::circuit_connected(b.size(), m.ground_set(), rank_oracle(b));
    EXPECT_EQ(is_connected(m), oracle_says) << "trial " << trial;
    (oracle_says ? connected : disconnected) += 1;
  }
  EXPECT_GT(connected, 5U);
  EXPECT_GT(disconnected, 5U);
}

TEST(MatroidProperty, FlacetsMatchCircuitOracle) {
  std::mt19937_64 rng(505);
  int checked = 0;
  while (checked < 25) {
    VectorConfiguration b = random_b(rng, 5 + checked % 3, 3, 2);
    Matroid m = Matroid::build(b);
    if (!is_connected(m)) continue;
    oracle::RankFn rank = rank_oracle(b);
    std::vector<LabelSet> expected;
    for (std::uint64_t f : oracle::flats_by_rank(b.size(), rank)) {
      if (f == 0 || rank(f) == 3) continue;
      const std::size_t rf = rank(f);
      oracle::RankFn quotient = [&](std::uint64_t s) { return rank(s | f) - rf; };
      if (oracle::circuit_connected(b.size(), f, rank) &&
          oracle::circuit_connected(b.size(), m.ground_set() & ~f, quotient)) {
        expected.push_back(f);
      }
    }
    std::vector<LabelSet> got;
    for (const Flat& f : flacets(m)) got.push_back(f.forms);
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(got, expected);
    ++checked;
  }
}

TEST(MatroidProperty, RestrictionPreservesZeroSum) {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 20; ++trial) {
    Matroid m = Matroid::build(random_b(rng, 6, 3));
    for (const Flat& f : flats(m)) {
      if (f.forms == 0 || f.corank == 3) continue;
      Restriction r = restrict_to_flat(m, f);
      EXPECT_TRUE(is_zero(r.b_restricted.row_sum()));
      EXPECT_FALSE(r.b_restricted.has_zero_row());
      EXPECT_EQ(r.b_restricted.size(), m.size() - cardinality(f.forms));
      for (std::size_t i : members(f.forms)) {
        IntVector row = m.vectors().row(i);
        for (std::size_t k = 0; k < r.projection.rows(); ++k) {
          EXPECT_EQ(dot(r.projection.row(k), row), 0);
        }
      }
    }
  }
}

TEST(MatroidProperty, MergeKeepsRowSum) {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 30; ++trial) {
    VectorConfiguration b = random_b(rng, 6, 2, 2);
    MergeResult r = merge_parallel(b);
    EXPECT_EQ(r.reduced.row_sum(), b.row_sum());
  }
}

// Appends multiples of existing rows so that parallel classes appear,
// some of them summing to zero.
VectorConfiguration with_parallels(std::mt19937_64& rng, VectorConfiguration b) {
  std::uniform_int_distribution<long> mult(1, 3);
  std::vector<IntVector> rows = b.b_matrix.row_list();
  const IntVector r0 = rows[0];
  const long a = mult(rng);
  IntVector plus;
  IntVector minus;
  for (const Int& v : r0) {
    plus.push_back(v * a);
    minus.push_back(-v * a);
  }
  rows.push_back(plus);
  rows.push_back(minus);
  // Cancel row 1 against a new opposite copy and move its value elsewhere.
  IntVector neg1;
  for (const Int& v : rows[1]) neg1.push_back(-v);
  rows.push_back(neg1);
  IntVector last = rows[2];
  for (std::size_t j = 0; j < last.size(); ++j) last[j] += rows[1][j];
  if (is_zero(last)) return b;
  rows[2] = last;
  return VectorConfiguration::make(IntMatrix::from_rows(rows, b.ambient_rank()));
}

TEST(DiscriminantProperty, PsiHomogeneous) {
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<long> scale(-7, 7);
  for (int trial = 0; trial < 50; ++trial) {
    VectorConfiguration b = random_b(rng, 5 + trial % 3, 2 + trial % 2);
    HornKapranovMap h(b);
    RatVector y = random_y(rng, b);
    long c = 0;
    while (c == 0) c = scale(rng);
    Rat cr(c, 1 + trial % 4);
    cr.canonicalize();
    RatVector cy;
    for (const Rat& v : y) cy.push_back(v * cr);
    RatVector psi = psi_exact(h, y);
    EXPECT_EQ(psi, psi_exact(h, cy));
    for (const Rat& v : psi) EXPECT_NE(sgn(v), 0);
  }
}

TEST(DiscriminantProperty, HyperplaneImageSumsToMinusOne) {
  std::mt19937_64 rng(909);
  for (std::size_t d = 2; d <= 5; ++d) {
    VectorConfiguration b = fixture::hyperplane(d);
    HornKapranovMap h(b);
    for (int trial = 0; trial < 100; ++trial) {
      RatVector psi = psi_exact(h, random_y(rng, b));
      Rat total = 0;
      for (const Rat& v : psi) total += v;
      EXPECT_EQ(total, -1);
    }
  }
}

TEST(DiscriminantProperty, HyperplaneRoundtripExact) {
  std::mt19937_64 rng(1010);
  for (std::size_t d = 2; d <= 5; ++d) {
    VectorConfiguration b = fixture::hyperplane(d);
    HornKapranovMap h(b);
    SparsePoly f = fixture::hyperplane_poly(d);
    for (int trial = 0; trial < 25; ++trial) {
      RatVector y = random_y(rng, b);
      EXPECT_TRUE(projectively_equal(log_gauss(f, psi_exact(h, y)), y));
    }
  }
}

TEST(DiscriminantProperty, MergeParallelArgShift) {
  std::mt19937_64 rng(1111);
  std::normal_distribution<double> normal(0.0, 1.0);
  int checked = 0;
  while (checked < 40) {
    VectorConfiguration b = with_parallels(rng, random_b(rng, 4, 2, 2));
    MergeResult merged = merge_parallel(b);
    if (merged.shifts.empty() || merged.reduced.size() == 0) continue;
    HornKapranovMap original(b);
    HornKapranovMap reduced(merged.reduced);
    // Exact identity: psi_j(B) = psi_j(reduced) * prod constant^(eta_j).
    RatVector y = random_y(rng, b);
    RatVector a = psi_exact(original, y);
    RatVector r = psi_exact(reduced, y);
    std::array<int, 2> shift = {0, 0};
    for (std::size_t j = 0; j < 2; ++j) {
      Rat factor = 1;
      for (const ParallelShift& s : merged.shifts) {
        factor *= rat_pow(s.constant, s.direction[j].get_si());
        shift[j] += s.arg_shift[j].get_si();
      }
      EXPECT_EQ(a[j], r[j] * factor);
    }
    // Arguments at a complex point differ by the recorded shifts.
    std::vector<std::complex<double>> z = {{normal(rng), normal(rng)},
                                           {normal(rng), normal(rng)}};
    ComplexImage ia = psi_complex(original, z);
    ComplexImage ir = psi_complex(reduced, z);
    for (std::size_t j = 0; j < 2; ++j) {
      const double diff = reduce_angle(ia.arg[j] - ir.arg[j] - pi * shift[j]);
      EXPECT_LT(std::min(std::fabs(diff), 2 * pi - std::fabs(diff)), 1e-7);
    }
    ++checked;
  }
}

TEST(DiscriminantProperty, EssentialDirectionsAreRays) {
  std::mt19937_64 rng(1212);
  int checked = 0;
  while (checked < 20) {
    Matroid m = Matroid::build(random_b(rng, 6, 3));
    if (!is_connected(m)) continue;
    std::vector<TropRay> rays = tdiscr_rays(m);
    for (const Flat& f : essential_flacets(m)) {
      IntVector dir = primitive(std::span<const Int>(m.sum_of(f.forms)));
      EXPECT_FALSE(is_zero(dir));
      EXPECT_TRUE(std::any_of(rays.begin(), rays.end(),
                              [&](const TropRay& r) { return r.direction == dir; }));
    }
    ++checked;
  }
}

TEST(TropicalProperty, LinealityAndFlags) {
  std::mt19937_64 rng(1313);
  std::uniform_int_distribution<long> entry(-3, 3);
  int checked = 0;
  while (checked < 15) {
    Matroid m = Matroid::build(random_b(rng, 6, 3));
    if (!is_connected(m)) continue;
    for (int k = 0; k < 40; ++k) {
      Weight w;
      for (std::size_t i = 0; i < m.size(); ++i) w.push_back(entry(rng));
      Weight shifted = w;
      const long c = entry(rng);
      for (Rat& v : shifted) v += c;
      const bool trop = in_tropical(m, w);
      EXPECT_EQ(trop, in_tropical(m, shifted));
      if (trop) {
        FlagOfFlats f = weight_to_flag(m, w);
        EXPECT_TRUE(flag_cone_contains(f, w));
      }
    }
    for (const BergmanRay& r : bergman_rays(m)) {
      EXPECT_TRUE(in_tropical(m, r.indicator));
      FlagOfFlats f = weight_to_flag(m, r.indicator);
      EXPECT_EQ(f.form_sets(),
                (std::vector<LabelSet>{m.ground_set(), r.flat.forms, 0}));
    }
    ++checked;
  }
}

// w lies in the closed cone of a complete flag when it is constant on each
// level and weakly increasing towards the smaller form sets.
bool in_closed_cone(const FlagOfFlats& f, const Weight& w) {
  std::vector<LabelSet> sets = f.form_sets();
  std::optional<Rat> previous;
  for (std::size_t i = 1; i < sets.size(); ++i) {
    std::optional<Rat> level;
    for (std::size_t b : members(sets[i - 1] & ~sets[i])) {
      if (level && *level != w[b]) return false;
      level = w[b];
    }
    if (previous && *level < *previous) return false;
    previous = level;
  }
  return true;
}

TEST(TropicalProperty, GridAgreesWithFlagCones) {
  std::mt19937_64 rng(1414);
  std::vector<VectorConfiguration> cases = {fixture::running_b(), fixture::plane()};
  while (cases.size() < 5) {
    VectorConfiguration b = random_b(rng, 6, 3);
    if (is_connected(Matroid::build(b))) cases.push_back(b);
  }
  for (const VectorConfiguration& b : cases) {
    Matroid m = Matroid::build(b);
    std::vector<FlagOfFlats> flags = complete_flags(m);
    const std::size_t n = m.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      Weight w;
      for (std::size_t i = 0, c = code; i < n; ++i, c /= 3) w.push_back(Rat(long(c % 3)));
      const bool in_union = std::any_of(flags.begin(), flags.end(),
                                        [&](const FlagOfFlats& f) { return in_closed_cone(f, w); });
      EXPECT_EQ(in_tropical(m, w), in_union);
    }
  }
}

SparsePoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> deg(0, 4);
  std::uniform_int_distribution<long> coef(-5, 5);
  SparsePoly p(vars);
  for (int t = 0; t < 5; ++t) {
    Exponent e;
    for (std::size_t i = 0; i < vars.size(); ++i) e.push_back(deg(rng) % 3);
    p.add_term(e, Rat(coef(rng)));
  }
  return p;
}

TEST(PolynomialProperty, InitialFormIdempotentAndScaleInvariant) {
  std::mt19937_64 rng(1515);
  std::uniform_int_distribution<long> entry(-3, 3);
  const std::vector<std::string> vars = {"x", "y", "z"};
  SparsePoly big = fixture::big_discriminant();
  for (int trial = 0; trial < 60; ++trial) {
    SparsePoly p = trial % 2 ? big : random_poly(rng, vars);
    IntVector w = {entry(rng), entry(rng), entry(rng)};
    IntVector w3;
    for (const Int& v : w) w3.push_back(v * 3);
    SparsePoly i1 = initial_form(p, w);
    EXPECT_EQ(initial_form(i1, w), i1);
    EXPECT_EQ(initial_form(p, w3), i1);
  }
}

TEST(PolynomialProperty, EvaluationIsMultiplicative) {
  std::mt19937_64 rng(1616);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  const std::vector<std::string> all = {"x", "y", "z"};
  for (std::size_t nv = 1; nv <= 3; ++nv) {
    const std::vector<std::string> vars(all.begin(), all.begin() + static_cast<long>(nv));
    for (int trial = 0; trial < 30; ++trial) {
      SparsePoly p = random_poly(rng, vars);
      SparsePoly q = random_poly(rng, vars);
      RatVector pt;
      for (std::size_t i = 0; i < nv; ++i) {
        Rat v(num(rng), den(rng));
        v.canonicalize();
        pt.push_back(v);
      }
      EXPECT_EQ(evaluate_exact(p * q, pt), evaluate_exact(p, pt) * evaluate_exact(q, pt));
      EXPECT_EQ(evaluate_exact(p + q, pt), evaluate_exact(p, pt) + evaluate_exact(q, pt));
    }
  }
}

TEST(CoamoebaProperty, DegreeIsPositiveInteger) {
  std::mt19937_64 rng(1717);
  int built = 0;
  for (int trial = 0; trial < 80; ++trial) {
    VectorConfiguration b = random_b(rng, 3 + trial % 4, 2, 3);
    MergeResult merged = merge_parallel(b);
    if (merged.reduced.size() < 3) continue;
    CoamoebaCycle c = build_cycle(b);
    EXPECT_GE(c.degree, 1);
    EXPECT_EQ(degree_dH(c), c.degree);
    EXPECT_EQ(c.minus.vertices, c.plus.reflected().vertices);
    EXPECT_GT(c.plus.signed_area(), 0);
    EXPECT_GT(c.zonotope.signed_area(), 0);
    ++built;
  }
  EXPECT_GT(built, 40);
}

TEST(CoamoebaProperty, StartVertexInvarianceOnRandomCycles) {
  std::mt19937_64 rng(1818);
  int checked = 0;
  while (checked < 8) {
    VectorConfiguration b = random_b(rng, 4, 2, 2);
    if (merge_parallel(b).reduced.size() != b.size()) continue;
    CoamoebaCycle canonical = build_cycle(b);
    for (std::size_t s : valid_start_vertices(b)) {
      CoamoebaCycle other = build_cycle(b, s);
      for (int i = 0; i < 25; ++i) {
        for (int j = 0; j < 25; ++j) {
          std::array<double, 2> t = {-pi + (i + 0.31) * 2 * pi / 25,
                                     -pi + (j + 0.73) * 2 * pi / 25};
          if (distance2(canonical, t) < 1e-6) continue;
          EXPECT_EQ(contains2(other, t), contains2(canonical, t));
        }
      }
    }
    ++checked;
  }
}

TEST(HarnessProperty, ReportsAreDeterministic) {
  Matroid m = Matroid::build(fixture::running_b());
  SparsePoly f = fixture::big_discriminant();
  ResidueReport r1 = residue_check(f, m, 12);
  ResidueReport r2 = residue_check(f, m, 12);
  EXPECT_EQ(r1.max_abs, r2.max_abs);
  EXPECT_EQ(r1.worst_point, r2.worst_point);
  RoundtripReport g1 = gauss_roundtrip(f, m, 12);
  RoundtripReport g2 = gauss_roundtrip(f, m, 12);
  EXPECT_EQ(g1.pass, g2.pass);
  EXPECT_EQ(g1.n_singular, g2.n_singular);
  EXPECT_EQ(conjecture_experiment_d3(m, 800, 1e-6, 77),
            conjecture_experiment_d3(m, 800, 1e-6, 77));
  EXPECT_EQ(grid_points(m, 30), grid_points(m, 30));
}

}  // namespace
}  // namespace coam
