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

#include "coam/discriminant.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <utility>

#include "coam/error.h"

namespace coam {

HornKapranovMap::HornKapranovMap(VectorConfiguration b) : b_(std::move(b)) {
  if (!is_zero(b_.row_sum())) {
    throw Error(ErrorCode::kNonzeroSum, "rows of B must sum to zero");
  }
  if (b_.has_zero_row()) {
    throw Error(ErrorCode::kZeroVector, "B has a zero row");
  }
}

RatVector psi_exact(const HornKapranovMap& h, std::span<const Rat> y) {
  const VectorConfiguration& b = h.vectors();
  const std::size_t d = h.dimension();
  if (y.size() != d) throw Error(ErrorCode::kInvalidInput, "point length mismatch");
  RatVector out(d, Rat(1));
  for (std::size_t r = 0; r < b.size(); ++r) {
    IntVector row = b.row(r);
    Rat pairing = dot(row, y);
    if (sgn(pairing) == 0) {
      throw Error(ErrorCode::kOnArrangement, "<b,y> vanishes for row " + b.labels[r]);
    }
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(row[j]) != 0) out[j] *= rat_pow(pairing, row[j].get_si());
    }
  }
  return out;
}

double reduce_angle(double x) {
  constexpr double kTwoPi = 2 * std::numbers::pi;
  double r = std::remainder(x, kTwoPi);
  if (r <= -std::numbers::pi) r += kTwoPi;
  return r;
}

ComplexImage psi_complex(const HornKapranovMap& h,
                         std::span<const std::complex<double>> y,
                         double threshold) {
  const VectorConfiguration& b = h.vectors();
  const std::size_t d = h.dimension();
  if (y.size() != d) throw Error(ErrorCode::kInvalidInput, "point length mismatch");
  double norm = 0;
  for (const auto& z : y) norm += std::norm(z);
  norm = std::sqrt(norm);

  std::vector<double> log_modulus(d, 0.0);
  std::vector<double> angle(d, 0.0);
  for (std::size_t r = 0; r < b.size(); ++r) {
    std::complex<double> pairing = 0;
    std::vector<double> row(d);
    for (std::size_t j = 0; j < d; ++j) {
      row[j] = b.b_matrix(r, j).get_d();
      pairing += row[j] * y[j];
    }
    if (std::abs(pairing) < threshold * norm) {
      throw Error(ErrorCode::kNearArrangement,
                  "<b,y> is numerically zero for row " + b.labels[r]);
    }
    const double lm = std::log(std::abs(pairing));
    const double ar = std::arg(pairing);
    for (std::size_t j = 0; j < d; ++j) {
      log_modulus[j] += row[j] * lm;
      angle[j] += row[j] * ar;
    }
  }
  ComplexImage out;
  for (std::size_t j = 0; j < d; ++j) {
    double a = reduce_angle(angle[j]);
    out.arg.push_back(a);
    out.value.push_back(std::polar(std::exp(log_modulus[j]), a));
  }
  return out;
}

RatVector log_gauss(const SparsePoly& f, std::span<const Rat> y) {
  const std::size_t d = f.variable_count();
  if (y.size() != d) throw Error(ErrorCode::kInvalidInput, "point length mismatch");
  for (const Rat& x : y) {
    if (sgn(x) == 0) throw Error(ErrorCode::kSingularPoint, "zero coordinate");
  }
  RatVector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    out[i] = y[i] * evaluate_exact(partial_derivative(f, f.variables()[i]), y);
  }
  auto lead = std::find_if(out.begin(), out.end(),
                           [](const Rat& x) { return sgn(x) != 0; });
  if (lead == out.end()) {
    throw Error(ErrorCode::kSingularPoint, "all partial derivatives vanish");
  }
  const Rat scale = 1 / *lead;
  for (Rat& x : out) x *= scale;
  return out;
}

std::vector<std::complex<double>> log_gauss(
    const SparsePoly& f, std::span<const std::complex<double>> y) {
  const std::size_t d = f.variable_count();
  if (y.size() != d) throw Error(ErrorCode::kInvalidInput, "point length mismatch");
  for (const auto& z : y) {
    if (z == 0.0) throw Error(ErrorCode::kSingularPoint, "zero coordinate");
  }
  std::vector<std::complex<double>> out(d);
  for (std::size_t i = 0; i < d; ++i) {
    out[i] = y[i] * evaluate_complex(partial_derivative(f, f.variables()[i]), y);
  }
  auto lead = std::find_if(out.begin(), out.end(),
                           [](const auto& z) { return z != 0.0; });
  if (lead == out.end()) {
    throw Error(ErrorCode::kSingularPoint, "all partial derivatives vanish");
  }
  const std::complex<double> scale = 1.0 / *lead;
  for (auto& z : out) z *= scale;
  return out;
}

bool projectively_equal(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) return false;
  std::optional<Rat> ratio;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((sgn(a[i]) == 0) != (sgn(b[i]) == 0)) return false;
    if (sgn(a[i]) == 0) continue;
    Rat r = a[i] / b[i];
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return ratio.has_value();
}

RatVector phi_b(const Matroid& m, const Weight& w) {
  const std::size_t d = m.ambient_rank();
  RatVector out(d, Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (sgn(w[i]) == 0) continue;
    for (std::size_t c = 0; c < d; ++c) out[c] += w[i] * m.vectors().b_matrix(i, c);
  }
  return out;
}

namespace {

// Depth-first search over chains of flats with increasing rank whose
// form sums escape the span of the previous flat.
class SplittingSearch {
 public:
  SplittingSearch(const Matroid& m, bool stop_at_first) : m_(m), stop_(stop_at_first) {
    for (Flat& f : flats(m)) by_corank_[f.corank].push_back(std::move(f));
  }

  std::vector<FlagOfFlats> run() {
    const Flat& bottom = by_corank_[0].front();
    chain_.push_back(bottom);
    if (m_.rank() == 1) {
      emit();
    } else {
      extend(bottom);
    }
    return std::move(found_);
  }

 private:
  void extend(const Flat& current) {
    if (stop_ && !found_.empty()) return;
    const std::size_t next = current.corank + 1;
    RationalSpan span(m_.ambient_rank(), m_.rows_of(current.forms));
    for (const Flat& f : by_corank_[next]) {
      if ((current.forms & ~f.forms) != 0) continue;
      if (span.contains(m_.sum_of(f.forms))) continue;
      chain_.push_back(f);
      if (next + 1 == m_.rank()) {
        emit();
      } else {
        extend(f);
      }
      chain_.pop_back();
      if (stop_ && !found_.empty()) return;
    }
  }

  void emit() {
    FlagOfFlats flag;
    flag.chain.push_back(by_corank_[m_.rank()].front());
    for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) {
      flag.chain.push_back(*it);
    }
    found_.push_back(std::move(flag));
  }

  const Matroid& m_;
  bool stop_;
  std::map<std::size_t, std::vector<Flat>> by_corank_;
  std::vector<Flat> chain_;
  std::vector<FlagOfFlats> found_;
};

IntVector cross(const IntVector& a, const IntVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

bool same_direction(const IntVector& a, const IntVector& b) {
  return primitive(std::span<const Int>(a)) == primitive(std::span<const Int>(b));
}

bool in_sector(const IntVector& s, const IntVector& u1, const IntVector& u2,
               const IntVector& n) {
  return sgn(dot(cross(u1, s), n)) >= 0 && sgn(dot(cross(s, u2), n)) >= 0;
}

}  // namespace

std::vector<FlagOfFlats> non_splitting_flags(const Matroid& m) {
  return SplittingSearch(m, false).run();
}

bool nondefective(const Matroid& m) {
  return !SplittingSearch(m, true).run().empty();
}

bool nondefective(const VectorConfiguration& b) {
  if (b.has_zero_row()) return false;
  return nondefective(Matroid::build(b));
}

std::vector<Flat> non_splitting_flats(const Matroid& m) {
  std::vector<Flat> out;
  std::set<LabelSet> seen;
  for (const FlagOfFlats& flag : non_splitting_flags(m)) {
    for (std::size_t i = 1; i + 1 < flag.chain.size(); ++i) {
      if (seen.insert(flag.chain[i].forms).second) out.push_back(flag.chain[i]);
    }
  }
  std::sort(out.begin(), out.end(), flat_less);
  return out;
}

std::vector<Flat> essential_flacets(const Matroid& m) {
  std::vector<Flat> out;
  for (Flat& f : flacets(m)) {
    if (f.dimension() >= 2 && !is_zero(m.sum_of(f.forms))) {
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<TropRay> tdiscr_rays(const Matroid& m) {
  std::vector<TropRay> out;
  for (Flat& f : flacets(m)) {
    IntVector b_l = m.sum_of(f.forms);
    if (is_zero(b_l)) continue;
    TropRay ray;
    ray.direction = primitive(std::span<const Int>(b_l));
    ray.type = RayType::kType1;
    ray.essential = f.dimension() >= 2;
    ray.flat = std::move(f);
    out.push_back(std::move(ray));
  }
  return out;
}

std::vector<ProjectedCone> projected_cones(const Matroid& m) {
  std::vector<BergmanRay> rays = bergman_rays(m);
  std::vector<ProjectedCone> out;
  for (const MaximalCone& c : maximal_cones(m)) {
    ProjectedCone p;
    p.rays = c.rays;
    for (std::size_t r : c.rays) p.generators.push_back(m.sum_of(rays[r].flat.forms));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<TropRay> tdiscr_fan_d3(const Matroid& m) {
  if (m.ambient_rank() != 3) {
    throw Error(ErrorCode::kDimensionNot3, "sector overlay needs d = 3");
  }
  std::vector<TropRay> out = tdiscr_rays(m);
  const std::size_t type1 = out.size();

  struct Sector {
    IntVector u1, u2, normal;
  };
  std::vector<Sector> sectors;
  for (const ProjectedCone& c : projected_cones(m)) {
    if (c.generators.size() != 2) continue;
    IntVector n = cross(c.generators[0], c.generators[1]);
    if (is_zero(n)) continue;
    sectors.push_back({c.generators[0], c.generators[1], std::move(n)});
  }

  std::set<IntVector> seen;
  for (std::size_t i = 0; i < sectors.size(); ++i) {
    for (std::size_t j = i + 1; j < sectors.size(); ++j) {
      const Sector& a = sectors[i];
      const Sector& b = sectors[j];
      IntVector v = cross(a.normal, b.normal);
      if (is_zero(v)) continue;
      for (int sign : {1, -1}) {
        IntVector s = v;
        if (sign < 0) {
          for (Int& x : s) x = -x;
        }
        if (!in_sector(s, a.u1, a.u2, a.normal) ||
            !in_sector(s, b.u1, b.u2, b.normal)) {
          continue;
        }
        IntVector dir = primitive(std::span<const Int>(s));
        bool known = false;
        for (std::size_t k = 0; k < type1; ++k) {
          if (same_direction(out[k].direction, dir)) known = true;
        }
        if (known || !seen.insert(dir).second) continue;
      }
    }
  }
  for (const IntVector& dir : seen) {
    TropRay ray;
    ray.direction = dir;
    ray.type = RayType::kType2;
    out.push_back(std::move(ray));
  }
  return out;
}

}  // namespace coam
