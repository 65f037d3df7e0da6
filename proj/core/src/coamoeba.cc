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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "coam/discriminant.h"
#include "coam/error.h"

namespace coam {

namespace {

using NumericPoint = std::array<double, 2>;
using NumericPolygon = std::vector<NumericPoint>;

Rat cross(const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by) {
  return ax * by - ay * bx;
}

Rat orient(const Point2& a, const Point2& b, const Point2& c) {
  return cross(b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y);
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
  if (sgn(orient(a, b, p)) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_meet(const Point2& a, const Point2& b, const Point2& c,
                   const Point2& d) {
  int o1 = sgn(orient(a, b, c));
  int o2 = sgn(orient(a, b, d));
  int o3 = sgn(orient(c, d, a));
  int o4 = sgn(orient(c, d, b));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) ||
         on_segment(b, c, d);
}

// 0 for directions in the upper half plane (or along +x), 1 otherwise.
int half(const Int& x, const Int& y) {
  return (sgn(y) > 0 || (sgn(y) == 0 && sgn(x) > 0)) ? 0 : 1;
}

bool angle_less(const IntVector& a, const IntVector& b) {
  int ha = half(a[0], a[1]);
  int hb = half(b[0], b[1]);
  if (ha != hb) return ha < hb;
  return sgn(a[0] * b[1] - a[1] * b[0]) > 0;
}

// Representative of the line through v in the upper half plane.
IntVector line_rep(const IntVector& v) {
  if (half(v[0], v[1]) == 0) return v;
  return {-v[0], -v[1]};
}

void check_generators(const VectorConfiguration& f) {
  if (f.ambient_rank() != 2) {
    throw Error(ErrorCode::kInvalidInput, "planar configuration expected");
  }
  if (f.size() < 2) {
    throw Error(ErrorCode::kDegenerateZonotope, "fewer than two generators");
  }
  if (f.has_zero_row()) throw Error(ErrorCode::kZeroVector, "zero generator");
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (sgn(f.b_matrix(i, 0) * f.b_matrix(j, 1) -
              f.b_matrix(i, 1) * f.b_matrix(j, 0)) == 0) {
        throw Error(ErrorCode::kParallelRows,
                    "rows " + f.labels[i] + " and " + f.labels[j] + " are parallel");
      }
    }
  }
  if (!is_zero(f.row_sum())) {
    throw Error(ErrorCode::kNonzeroSum, "generators must sum to zero");
  }
}

struct Edge {
  IntVector vec;
  std::size_t generator;
  bool positive;
};

std::vector<Edge> sorted_edges(const VectorConfiguration& f) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < f.size(); ++i) {
    IntVector g = f.row(i);
    edges.push_back({g, i, true});
    edges.push_back({{-g[0], -g[1]}, i, false});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return angle_less(a.vec, b.vec);
  });
  return edges;
}

bool lex_greater(const Point2& a, const Point2& b) {
  return a.x != b.x ? a.x > b.x : a.y > b.y;
}

// Vertices and the edge arriving at each vertex, starting at the lex-max
// vertex.
struct Walk {
  std::vector<Point2> vertices;
  std::vector<Edge> incoming;
};

Walk walk_zonotope(const VectorConfiguration& f) {
  check_generators(f);
  std::vector<Edge> edges = sorted_edges(f);
  const std::size_t k = edges.size();
  std::vector<Point2> pts(k);
  std::vector<Edge> incoming(k);
  Rat x = 0;
  Rat y = 0;
  Rat cx = 0;
  Rat cy = 0;
  for (std::size_t i = 0; i < k; ++i) {
    pts[i] = {x, y};
    cx += x;
    cy += y;
    incoming[i] = edges[(i + k - 1) % k];
    x += Rat(edges[i].vec[0]);
    y += Rat(edges[i].vec[1]);
  }
  cx /= static_cast<long>(k);
  cy /= static_cast<long>(k);
  std::size_t top = 0;
  for (std::size_t i = 0; i < k; ++i) {
    pts[i].x -= cx;
    pts[i].y -= cy;
    if (lex_greater(pts[i], pts[top])) top = i;
  }
  std::rotate(pts.begin(), pts.begin() + static_cast<long>(top), pts.end());
  std::rotate(incoming.begin(), incoming.begin() + static_cast<long>(top),
              incoming.end());
  return {std::move(pts), std::move(incoming)};
}

NumericPolygon numeric(const Polygon& p) {
  NumericPolygon out;
  out.reserve(p.vertices.size());
  for (const Point2& v : p.vertices) out.push_back({v.x.get_d(), v.y.get_d()});
  return out;
}

double segment_distance(const NumericPoint& p, const NumericPoint& a,
                        const NumericPoint& b) {
  const double dx = b[0] - a[0];
  const double dy = b[1] - a[1];
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p[0] - (a[0] + t * dx), p[1] - (a[1] + t * dy));
}

// Nonzero winding number; the half-coamoeba boundaries may self-cross.
bool winding_inside(const NumericPolygon& poly, const NumericPoint& p) {
  int winding = 0;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const NumericPoint& a = poly[j];
    const NumericPoint& b = poly[i];
    const double side =
        (b[0] - a[0]) * (p[1] - a[1]) - (p[0] - a[0]) * (b[1] - a[1]);
    if (a[1] <= p[1]) {
      if (b[1] > p[1] && side > 0) ++winding;
    } else if (b[1] <= p[1] && side < 0) {
      --winding;
    }
  }
  return winding != 0;
}

double boundary_distance(const NumericPolygon& poly, const NumericPoint& p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    best = std::min(best, segment_distance(p, poly[j], poly[i]));
  }
  return best;
}

struct Box {
  double xmin, xmax, ymin, ymax;
};

Box bounds(const NumericPolygon& poly) {
  Box b{poly[0][0], poly[0][0], poly[0][1], poly[0][1]};
  for (const NumericPoint& v : poly) {
    b.xmin = std::min(b.xmin, v[0]);
    b.xmax = std::max(b.xmax, v[0]);
    b.ymin = std::min(b.ymin, v[1]);
    b.ymax = std::max(b.ymax, v[1]);
  }
  return b;
}

// Calls fn(translated point) for every t - 2k within `margin` of the box.
template <typename Fn>
bool any_translate(const Box& box, const NumericPoint& t, double margin, Fn fn) {
  const long kx0 = static_cast<long>(std::ceil((t[0] - box.xmax - margin) / 2));
  const long kx1 = static_cast<long>(std::floor((t[0] - box.xmin + margin) / 2));
  const long ky0 = static_cast<long>(std::ceil((t[1] - box.ymax - margin) / 2));
  const long ky1 = static_cast<long>(std::floor((t[1] - box.ymin + margin) / 2));
  for (long kx = kx0; kx <= kx1; ++kx) {
    for (long ky = ky0; ky <= ky1; ++ky) {
      if (fn(NumericPoint{t[0] - 2.0 * kx, t[1] - 2.0 * ky})) return true;
    }
  }
  return false;
}

NumericPoint shifted_units(const CoamoebaCycle& c, std::array<double, 2> theta) {
  return {theta[0] / std::numbers::pi + c.arg_shift[0],
          theta[1] / std::numbers::pi + c.arg_shift[1]};
}

bool exact_closed_inside(const Polygon& poly, const Point2& p) {
  const auto& v = poly.vertices;
  int winding = 0;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    const Point2& a = v[j];
    const Point2& b = v[i];
    if (on_segment(p, a, b)) return true;
    const int side = sgn(orient(a, b, p));
    if (a.y <= p.y) {
      if (b.y > p.y && side > 0) ++winding;
    } else if (b.y <= p.y && side < 0) {
      --winding;
    }
  }
  return winding != 0;
}

Rat floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rat(q);
}

Rat ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rat(q);
}

}  // namespace

Rat Polygon::signed_area() const {
  Rat twice = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Point2& a = vertices[i];
    const Point2& b = vertices[(i + 1) % vertices.size()];
    twice += a.x * b.y - a.y * b.x;
  }
  return twice / 2;
}

bool Polygon::is_simple() const {
  const std::size_t n = vertices.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = vertices[i];
    const Point2& b = vertices[(i + 1) % n];
    if (a == b) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point2& c = vertices[j];
      const Point2& d = vertices[(j + 1) % n];
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        // Shared endpoint only; reject folding back along the same line.
        const Point2& shared = j == i + 1 ? b : a;
        const Point2& p = j == i + 1 ? a : b;
        const Point2& q = j == i + 1 ? d : c;
        if (sgn(orient(shared, p, q)) == 0 &&
            sgn((p.x - shared.x) * (q.x - shared.x) +
                (p.y - shared.y) * (q.y - shared.y)) > 0) {
          return false;
        }
        continue;
      }
      if (segments_meet(a, b, c, d)) return false;
    }
  }
  return true;
}

Polygon Polygon::reflected() const {
  Polygon out;
  for (const Point2& v : vertices) out.vertices.push_back({-v.x, -v.y});
  return out;
}

Polygon zonotope(const VectorConfiguration& f) {
  Polygon p{walk_zonotope(f).vertices};
  if (sgn(p.signed_area()) <= 0) {
    throw Error(ErrorCode::kDegenerateZonotope, "zonotope has no area");
  }
  return p;
}

std::vector<std::size_t> valid_start_vertices(const VectorConfiguration& f) {
  Walk w = walk_zonotope(f);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (w.incoming[i].positive) out.push_back(i);
  }
  return out;
}

HalfCycles half_coamoeba_cycles(const VectorConfiguration& f,
                                std::optional<std::size_t> start) {
  Walk w = walk_zonotope(f);
  std::size_t v_index = w.vertices.size();
  if (start) {
    if (*start >= w.vertices.size() || !w.incoming[*start].positive) {
      throw Error(ErrorCode::kInvalidInput, "start vertex has no incoming +f edge");
    }
    v_index = *start;
  } else {
    // Vertices are listed from the lex-max one, so scan in lex order.
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
      if (!w.incoming[i].positive) continue;
      if (v_index == w.vertices.size() ||
          lex_greater(w.vertices[i], w.vertices[v_index])) {
        v_index = i;
      }
    }
  }

  const std::size_t first = w.incoming[v_index].generator;
  const IntVector l1 = line_rep(f.row(first));
  std::vector<std::size_t> below;  // lines at smaller angle than f1's line
  std::vector<std::size_t> above;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i == first) continue;
    IntVector li = line_rep(f.row(i));
    (angle_less(li, l1) ? below : above).push_back(i);
  }
  auto descending = [&](std::size_t a, std::size_t b) {
    return angle_less(line_rep(f.row(b)), line_rep(f.row(a)));
  };
  std::sort(below.begin(), below.end(), descending);
  std::sort(above.begin(), above.end(), descending);

  HalfCycles out;
  out.order.push_back(first);
  out.order.insert(out.order.end(), below.begin(), below.end());
  out.order.insert(out.order.end(), above.begin(), above.end());

  Point2 p = w.vertices[v_index];
  for (std::size_t k = 0; k < out.order.size(); ++k) {
    out.plus.vertices.push_back(p);
    p.x -= Rat(f.b_matrix(out.order[k], 0));
    p.y -= Rat(f.b_matrix(out.order[k], 1));
  }
  if (sgn(out.plus.signed_area()) <= 0) {
    throw Error(ErrorCode::kNonSimplePolygon,
                "half-coamoeba cycle is not positively oriented");
  }
  out.simple = out.plus.is_simple();
  out.minus = out.plus.reflected();
  return out;
}

long degree_dH(const CoamoebaCycle& c) {
  Rat total = (c.zonotope.signed_area() + c.plus.signed_area() +
               c.minus.signed_area()) / 4;
  if (total.get_den() != 1 || sgn(total) <= 0) {
    throw Error(ErrorCode::kNonIntegralDegree,
                "cycle degree " + total.get_str() + " is not a positive integer");
  }
  return total.get_num().get_si();
}

CoamoebaCycle build_cycle(const VectorConfiguration& b2,
                          std::optional<std::size_t> start) {
  if (b2.ambient_rank() != 2) {
    throw Error(ErrorCode::kInvalidInput, "planar configuration expected");
  }
  if (!is_zero(b2.row_sum())) {
    throw Error(ErrorCode::kNonzeroSum, "rows must sum to zero");
  }
  MergeResult merged = merge_parallel(b2);
  CoamoebaCycle c;
  for (const ParallelShift& s : merged.shifts) {
    c.arg_shift[0] = (c.arg_shift[0] + static_cast<int>(s.arg_shift[0].get_si())) % 2;
    c.arg_shift[1] = (c.arg_shift[1] + static_cast<int>(s.arg_shift[1].get_si())) % 2;
  }
  c.generators = std::move(merged.reduced);
  c.zonotope = zonotope(c.generators);
  HalfCycles h = half_coamoeba_cycles(c.generators, start);
  c.plus = std::move(h.plus);
  c.minus = std::move(h.minus);
  c.order = std::move(h.order);
  c.simple = h.simple;
  c.degree = degree_dH(c);
  return c;
}

bool contains2(const CoamoebaCycle& c, std::array<double, 2> theta, double tol) {
  const NumericPoint t = shifted_units(c, theta);
  const double margin = tol / std::numbers::pi;
  for (const Polygon* poly : {&c.plus, &c.minus}) {
    NumericPolygon np = numeric(*poly);
    bool hit = any_translate(bounds(np), t, margin, [&](const NumericPoint& p) {
      return boundary_distance(np, p) <= margin || winding_inside(np, p);
    });
    if (hit) return true;
  }
  return false;
}

bool contains2_exact(const CoamoebaCycle& c, std::array<Rat, 2> theta) {
  const Point2 t{theta[0] + c.arg_shift[0], theta[1] + c.arg_shift[1]};
  for (const Polygon* poly : {&c.plus, &c.minus}) {
    Rat xmin = poly->vertices[0].x, xmax = xmin;
    Rat ymin = poly->vertices[0].y, ymax = ymin;
    for (const Point2& v : poly->vertices) {
      xmin = std::min(xmin, v.x);
      xmax = std::max(xmax, v.x);
      ymin = std::min(ymin, v.y);
      ymax = std::max(ymax, v.y);
    }
    const Rat kx0 = ceil_rat((t.x - xmax) / 2);
    const Rat kx1 = floor_rat((t.x - xmin) / 2);
    const Rat ky0 = ceil_rat((t.y - ymax) / 2);
    const Rat ky1 = floor_rat((t.y - ymin) / 2);
    for (Rat kx = kx0; kx <= kx1; kx += 1) {
      for (Rat ky = ky0; ky <= ky1; ky += 1) {
        if (exact_closed_inside(*poly, {t.x - 2 * kx, t.y - 2 * ky})) return true;
      }
    }
  }
  return false;
}

double distance2(const CoamoebaCycle& c, std::array<double, 2> theta) {
  const NumericPoint t = shifted_units(c, theta);
  double best = std::numeric_limits<double>::infinity();
  for (const Polygon* poly : {&c.plus, &c.minus}) {
    NumericPolygon np = numeric(*poly);
    any_translate(bounds(np), t, 3.0, [&](const NumericPoint& p) {
      if (winding_inside(np, p)) {
        best = 0;
        return true;
      }
      best = std::min(best, boundary_distance(np, p));
      return false;
    });
    if (best == 0) break;
  }
  return best * std::numbers::pi;
}

std::vector<Prism> prisms_d3(const Matroid& m) {
  if (m.ambient_rank() != 3) {
    throw Error(ErrorCode::kDimensionNot3, "prism decomposition needs d = 3");
  }
  if (!nondefective(m)) {
    throw Error(ErrorCode::kDefective, "configuration is defective");
  }
  std::vector<Prism> out;
  for (Flat& h : essential_flacets(m)) {
    Restriction r = restrict_to_flat(m, h);
    Prism p;
    p.base = build_cycle(r.b_restricted);
    p.projection = std::move(r.projection);
    p.hyperplane_flat = std::move(h);
    out.push_back(std::move(p));
  }
  return out;
}

std::array<double, 2> project_angles(const Prism& p,
                                     std::array<double, 3> theta) {
  std::array<double, 2> out{};
  for (std::size_t i = 0; i < 2; ++i) {
    double s = 0;
    for (std::size_t j = 0; j < 3; ++j) s += p.projection(i, j).get_d() * theta[j];
    out[i] = reduce_angle(s);
  }
  return out;
}

PrismHit contains_pls3(std::span<const Prism> prisms,
                       std::array<double, 3> theta, double tol) {
  for (std::size_t i = 0; i < prisms.size(); ++i) {
    if (contains2(prisms[i].base, project_angles(prisms[i], theta), tol)) {
      return {true, i};
    }
  }
  return {};
}

}  // namespace coam
