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

#include "coam/json_io.h"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <utility>

#include "coam/error.h"

namespace coam::json_io {

namespace {

Int int_from_json(const json& j) {
  if (j.is_string()) {
    Int v;
    if (v.set_str(j.get<std::string>(), 10) != 0) {
      throw Error(ErrorCode::kInvalidInput, "bad integer " + j.get<std::string>());
    }
    return v;
  }
  if (j.is_number_integer()) return Int(j.get<long>());
  throw Error(ErrorCode::kInvalidInput, "integer expected, got " + j.dump());
}

json labels_json(const Matroid& m, LabelSet s) { return m.labels_of(s); }

json number_or_null(double x) {
  return std::isfinite(x) ? json(x) : json(nullptr);
}

}  // namespace

std::string_view library_version() { return COAM_VERSION_STRING; }

json to_json(const IntVector& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(x.get_str());
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

json to_json(const RatVector& v) {
  json out = json::array();
  for (const Rat& x : v) out.push_back(x.get_str());
  return out;
}

IntVector int_vector_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kInvalidInput, "array expected");
  IntVector out;
  for (const json& x : j) out.push_back(int_from_json(x));
  return out;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kInvalidInput, "matrix must be an array");
  std::vector<IntVector> rows;
  for (const json& r : j) rows.push_back(int_vector_from_json(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return IntMatrix::from_rows(rows, cols);
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) throw Error(ErrorCode::kInvalidInput, "rational expected");
  Rat v;
  if (v.set_str(j.get<std::string>(), 10) != 0 || v.get_den() == 0) {
    throw Error(ErrorCode::kInvalidInput, "bad rational " + j.get<std::string>());
  }
  v.canonicalize();
  return v;
}

RatVector rat_vector_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kInvalidInput, "array expected");
  RatVector out;
  for (const json& x : j) out.push_back(rat_from_json(x));
  return out;
}

ConfigurationFile configuration_from_json(const json& j) {
  if (!j.is_object() || !j.contains("role") || !j.contains("matrix")) {
    throw Error(ErrorCode::kInvalidInput, "configuration needs role and matrix");
  }
  ConfigurationFile f;
  const std::string role = j.at("role").get<std::string>();
  if (role == "A") {
    f.role = Role::kA;
  } else if (role == "B") {
    f.role = Role::kB;
  } else {
    throw Error(ErrorCode::kInvalidInput, "role must be A or B");
  }
  f.matrix = matrix_from_json(j.at("matrix"));
  if (j.contains("labels")) {
    for (const json& l : j.at("labels")) {
      f.labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
    }
  }
  return f;
}

json to_json(const PointConfiguration& a) {
  return {{"role", "A"}, {"matrix", to_json(a.a_matrix)}, {"labels", a.labels}};
}

json to_json(const VectorConfiguration& b) {
  return {{"role", "B"}, {"matrix", to_json(b.b_matrix)}, {"labels", b.labels}};
}

PointConfiguration point_configuration(const ConfigurationFile& f) {
  if (f.role != Role::kA) throw Error(ErrorCode::kInvalidInput, "role A expected");
  return PointConfiguration::make(f.matrix, f.labels);
}

VectorConfiguration vector_configuration(const ConfigurationFile& f) {
  if (f.role != Role::kB) throw Error(ErrorCode::kInvalidInput, "role B expected");
  return VectorConfiguration::make(f.matrix, f.labels);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json read_file(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidInput, path + ": " + e.what());
  }
}

std::string pi_string(const Rat& units_of_pi) {
  if (sgn(units_of_pi) == 0) return "0";
  if (units_of_pi == 1) return "pi";
  if (units_of_pi == -1) return "-pi";
  return units_of_pi.get_str() + "*pi";
}

json to_json(const Matroid& m, const Flat& f) {
  return {{"forms", labels_json(m, f.forms)},
          {"corank", f.corank},
          {"dimension", f.dimension()},
          {"flat_space", to_json(f.flat_space.as_rows())}};
}

json to_json(const Matroid& m, const FlagOfFlats& f) {
  json chain = json::array();
  for (const Flat& flat : f.chain) chain.push_back(labels_json(m, flat.forms));
  return {{"form_sets", chain}};
}

json to_json(const Polygon& p) {
  json exact = json::array();
  json numeric = json::array();
  for (const Point2& v : p.vertices) {
    exact.push_back({pi_string(v.x), pi_string(v.y)});
    numeric.push_back({v.x.get_d() * std::numbers::pi, v.y.get_d() * std::numbers::pi});
  }
  return {{"vertices", exact},
          {"vertices_radians", numeric},
          {"area", pi_string(p.signed_area()) + "^2"},
          {"area_over_pi2", p.signed_area().get_str()}};
}

json to_json(const CoamoebaCycle& c) {
  json order = json::array();
  for (std::size_t i : c.order) order.push_back(c.generators.labels[i]);
  return {{"generators", to_json(c.generators)},
          {"zonotope", to_json(c.zonotope)},
          {"plus", to_json(c.plus)},
          {"minus", to_json(c.minus)},
          {"degree", c.degree},
          {"plus_simple", c.simple},
          {"arg_shift", {pi_string(c.arg_shift[0]), pi_string(c.arg_shift[1])}},
          {"order", order}};
}

json to_json(const Matroid& m, const Prism& p) {
  return {{"hyperplane", to_json(m, p.hyperplane_flat)},
          {"projection", to_json(p.projection)},
          {"base", to_json(p.base)}};
}

json to_json(const Matroid& m, const TropRay& r) {
  json out = {{"direction", to_json(r.direction)},
              {"type", r.type == RayType::kType1 ? "type1" : "type2"},
              {"essential", r.essential}};
  if (r.flat) out["flat"] = labels_json(m, r.flat->forms);
  return out;
}

json to_json(const SampleReport& r) {
  return {{"n_samples", r.n_samples},
          {"n_valid", r.n_valid},
          {"inside_fraction", r.inside_fraction},
          {"max_boundary_distance", number_or_null(r.max_boundary_distance)},
          {"seed", r.seed},
          {"tolerance", r.tolerance}};
}

}  // namespace coam::json_io
