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

#ifndef COAM_JSON_IO_H_
#define COAM_JSON_IO_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coam/coamoeba.h"
#include "coam/configuration.h"
#include "coam/discriminant.h"
#include "coam/exact_linalg.h"
#include "coam/harness.h"
#include "coam/matroid.h"
#include "coam/tropical_fan.h"

namespace coam::json_io {

using nlohmann::json;

std::string_view library_version();

// Integers are written as decimal strings; readers also accept numbers.
json to_json(const IntVector& v);
json to_json(const IntMatrix& m);
json to_json(const RatVector& v);
IntVector int_vector_from_json(const json& j);
IntMatrix matrix_from_json(const json& j);
RatVector rat_vector_from_json(const json& j);
Rat rat_from_json(const json& j);

enum class Role { kA, kB };

struct ConfigurationFile {
  Role role = Role::kB;
  IntMatrix matrix;
  std::vector<std::string> labels;
};

ConfigurationFile configuration_from_json(const json& j);
json to_json(const PointConfiguration& a);
json to_json(const VectorConfiguration& b);
PointConfiguration point_configuration(const ConfigurationFile& f);
VectorConfiguration vector_configuration(const ConfigurationFile& f);
json read_file(const std::string& path);
std::string read_text(const std::string& path);

// "0", "pi", "-3/4*pi".
std::string pi_string(const Rat& units_of_pi);

json to_json(const Matroid& m, const Flat& f);
json to_json(const Matroid& m, const FlagOfFlats& f);
json to_json(const Polygon& p);
json to_json(const CoamoebaCycle& c);
json to_json(const Matroid& m, const Prism& p);
json to_json(const Matroid& m, const TropRay& r);
json to_json(const SampleReport& r);

}  // namespace coam::json_io

#endif  // COAM_JSON_IO_H_
