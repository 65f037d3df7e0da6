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

#include "cli.h"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <array>
#include <complex>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <utility>

#include "coam/coamoeba.h"
#include "coam/configuration.h"
#include "coam/discriminant.h"
#include "coam/error.h"
#include "coam/harness.h"
#include "coam/json_io.h"
#include "coam/matroid.h"
#include "coam/polynomial.h"
#include "coam/tropical_fan.h"

namespace coam::cli {

namespace {

using json = nlohmann::json;
namespace jio = json_io;

struct Job {
  std::string input;
  std::string poly;
  std::string output;
  std::string y;
  std::string x;
  std::string w;
  std::string theta;
  std::size_t n = 1000;
  std::size_t grid = 20;
  std::uint64_t seed = 1;
  double tol = kMembershipTolerance;
  double sample_tol = 1e-6;
  unsigned threads = 0;
  bool exact = false;
  bool fan = false;
};

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(),
             nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

class Session {
 public:
  explicit Session(std::string subcommand) : subcommand_(std::move(subcommand)) {}

  std::string read(const std::string& path) {
    std::string text = jio::read_text(path);
    inputs_.push_back({{"path", path}, {"sha256", sha256_hex(text)}});
    return text;
  }

  json read_json(const std::string& path) {
    std::string text = read(path);
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kInvalidInput, path + ": " + e.what());
    }
  }

  void param(const std::string& key, json value) { params_[key] = std::move(value); }

  json provenance() const {
    return {{"tool", "coam"},
            {"version", std::string(jio::library_version())},
            {"subcommand", subcommand_},
            {"inputs", inputs_},
            {"parameters", params_}};
  }

 private:
  std::string subcommand_;
  json inputs_ = json::array();
  json params_ = json::object();
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

Rat parse_rat(const std::string& s) {
  Rat v;
  if (s.empty() || v.set_str(s, 10) != 0 || v.get_den() == 0) {
    throw Error(ErrorCode::kInvalidInput, "bad rational '" + s + "'");
  }
  v.canonicalize();
  return v;
}

RatVector parse_rat_list(const std::string& s) {
  RatVector out;
  for (const std::string& item : split(s, ',')) out.push_back(parse_rat(item));
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    throw Error(ErrorCode::kInvalidInput, "bad number '" + s + "'");
  }
  return v;
}

// "re" or "re:im".
std::vector<std::complex<double>> parse_complex_list(const std::string& s) {
  std::vector<std::complex<double>> out;
  for (const std::string& item : split(s, ',')) {
    std::vector<std::string> parts = split(item, ':');
    if (parts.size() == 1) {
      out.emplace_back(parse_double(parts[0]), 0.0);
    } else if (parts.size() == 2) {
      out.emplace_back(parse_double(parts[0]), parse_double(parts[1]));
    } else {
      throw Error(ErrorCode::kInvalidInput, "bad complex number '" + item + "'");
    }
  }
  return out;
}

struct Angle {
  double radians = 0;
  std::optional<Rat> units_of_pi;
};

// "3/4*pi", "pi", "-pi", "0", or radians as a decimal.
Angle parse_angle(const std::string& s) {
  Angle a;
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    std::string prefix = s.substr(0, s.size() - 2);
    if (!prefix.empty() && prefix.back() == '*') prefix.pop_back();
    Rat r = prefix.empty() ? Rat(1) : prefix == "-" ? Rat(-1) : parse_rat(prefix);
    a.units_of_pi = r;
    a.radians = r.get_d() * std::numbers::pi;
    return a;
  }
  if (s == "0") {
    a.units_of_pi = Rat(0);
    return a;
  }
  a.radians = parse_double(s);
  return a;
}

IntVector parse_int_list(const std::string& s) {
  IntVector out;
  for (const std::string& item : split(s, ',')) {
    Int v;
    if (item.empty() || v.set_str(item, 10) != 0) {
      throw Error(ErrorCode::kInvalidInput, "bad integer '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

VectorConfiguration load_b(Session& session, const std::string& path) {
  jio::ConfigurationFile f = jio::configuration_from_json(session.read_json(path));
  if (f.role == jio::Role::kA) return gale_dual(jio::point_configuration(f));
  return jio::vector_configuration(f);
}

json labels_of(const Matroid& m, LabelSet s) { return m.labels_of(s); }

json flats_json(const Matroid& m, const std::vector<Flat>& flats) {
  json out = json::array();
  for (const Flat& f : flats) out.push_back(labels_of(m, f.forms));
  return out;
}

using Handler = std::function<json(const Job&, Session&)>;

json cmd_gale(const Job& job, Session& s) {
  jio::ConfigurationFile f = jio::configuration_from_json(s.read_json(job.input));
  PointConfiguration a = jio::point_configuration(f);
  VectorConfiguration b = gale_dual(a);
  json out = jio::to_json(b);
  out["u"] = jio::to_json(*validate_a(a).u);
  return out;
}

int validation_exit = kExitOk;

json cmd_validate(const Job& job, Session& s) {
  jio::ConfigurationFile f = jio::configuration_from_json(s.read_json(job.input));
  json out;
  if (f.role == jio::Role::kA) {
    ValidationReport r = validate_a(jio::point_configuration(f));
    out = {{"role", "A"}, {"spans", r.spans}, {"pyramid", r.pyramid},
           {"u", r.u ? jio::to_json(*r.u) : json(nullptr)}};
    if (!r.spans || !r.u) validation_exit = kExitValidation;
    return out;
  }
  VectorConfiguration b = jio::vector_configuration(f);
  const bool spans = rank_rational(b.b_matrix) == b.ambient_rank();
  out = {{"role", "B"},
         {"zero_row", b.has_zero_row()},
         {"spans", spans},
         {"row_sum_zero", is_zero(b.row_sum())}};
  if (!b.has_zero_row() && spans) {
    out["nondefective"] = nondefective(Matroid::build(b));
  } else {
    out["nondefective"] = false;
    validation_exit = kExitValidation;
  }
  return out;
}

json cmd_matroid_info(const Job& job, Session& s) {
  Matroid m = Matroid::build(load_b(s, job.input));
  json by_corank = json::object();
  for (const Flat& f : flats(m)) {
    by_corank[std::to_string(f.corank)].push_back(labels_of(m, f.forms));
  }
  json classes = json::array();
  for (LabelSet c : m.parallel_classes()) classes.push_back(labels_of(m, c));
  json comps = json::array();
  for (LabelSet c : components(m)) comps.push_back(labels_of(m, c));
  json out = {{"size", m.size()},
              {"rank", m.rank()},
              {"bases", m.bases().size()},
              {"parallel_classes", classes},
              {"connected", comps.size() <= 1},
              {"components", comps},
              {"flats_by_corank", by_corank}};
  out["flacets"] = is_connected(m) ? flats_json(m, flacets(m)) : json(nullptr);
  return out;
}

json cmd_bergman_rays(const Job& job, Session& s) {
  Matroid m = Matroid::build(load_b(s, job.input));
  json rays = json::array();
  for (const BergmanRay& r : bergman_rays(m)) {
    rays.push_back({{"flat", labels_of(m, r.flat.forms)},
                    {"indicator", jio::to_json(r.indicator)}});
  }
  return {{"count", rays.size()}, {"rays", rays}};
}

json cmd_fine_cones(const Job& job, Session& s) {
  Matroid m = Matroid::build(load_b(s, job.input));
  std::vector<BergmanRay> rays = bergman_rays(m);
  json cones = json::array();
  for (const MaximalCone& c : maximal_cones(m)) {
    json ray_flats = json::array();
    for (std::size_t r : c.rays) ray_flats.push_back(labels_of(m, rays[r].flat.forms));
    json cone = jio::to_json(m, c.flag);
    cone["rays"] = ray_flats;
    cone["fine_cones"] = c.fine_cone_count;
    cones.push_back(cone);
  }
  return {{"count", cones.size()},
          {"complete_flags", complete_flags(m).size()},
          {"cones", cones}};
}

json cmd_tdiscr_rays(const Job& job, Session& s) {
  Matroid m = Matroid::build(load_b(s, job.input));
  s.param("fan", job.fan);
  std::vector<TropRay> rays = job.fan ? tdiscr_fan_d3(m) : tdiscr_rays(m);
  json out = json::array();
  for (const TropRay& r : rays) out.push_back(jio::to_json(m, r));
  return {{"rays", out}};
}

json cmd_nondefective(const Job& job, Session& s) {
  VectorConfiguration b = load_b(s, job.input);
  if (b.has_zero_row()) return {{"nondefective", false}, {"reason", "zero row"}};
  Matroid m = Matroid::build(b);
  std::vector<FlagOfFlats> found = non_splitting_flags(m);
  json out = {{"nondefective", !found.empty()},
              {"non_splitting_flags", found.size()},
              {"non_splitting_flats", flats_json(m, non_splitting_flats(m))}};
  if (!found.empty()) out["witness"] = jio::to_json(m, found.front());
  return out;
}

json cmd_psi(const Job& job, Session& s) {
  HornKapranovMap h(load_b(s, job.input));
  s.param("y", job.y);
  s.param("exact", job.exact);
  if (job.exact) {
    RatVector v = psi_exact(h, parse_rat_list(job.y));
    json arg_pi = json::array();
    json arg = json::array();
    for (const Rat& x : v) {
      arg_pi.push_back(sgn(x) > 0 ? "0" : "pi");
      arg.push_back(sgn(x) > 0 ? 0.0 : std::numbers::pi);
    }
    return {{"value", jio::to_json(v)}, {"arg", arg}, {"arg_pi", arg_pi}};
  }
  ComplexImage img = psi_complex(h, parse_complex_list(job.y));
  json value = json::array();
  for (const auto& z : img.value) value.push_back({z.real(), z.imag()});
  return {{"value", value}, {"arg", img.arg}};
}

json cmd_gauss(const Job& job, Session& s) {
  SparsePoly f = parse_polynomial_file(s.read(job.input));
  RatVector x;
  json out;
  if (!job.y.empty()) {
    if (job.poly.empty()) {
      throw Error(ErrorCode::kInvalidInput, "--y needs --config");
    }
    HornKapranovMap h(load_b(s, job.poly));
    RatVector y = parse_rat_list(job.y);
    s.param("y", job.y);
    x = psi_exact(h, y);
    RatVector g = log_gauss(f, x);
    out["projectively_equal_y"] = projectively_equal(g, y);
  } else {
    x = parse_rat_list(job.x);
  }
  s.param("x", jio::to_json(x));
  out["point"] = jio::to_json(x);
  out["value"] = evaluate_exact(f, x).get_str();
  out["gauss"] = jio::to_json(log_gauss(f, x));
  return out;
}

json cmd_initial_form(const Job& job, Session& s) {
  SparsePoly f = parse_polynomial_file(s.read(job.input));
  s.param("w", job.w);
  SparsePoly g = initial_form(f, parse_int_list(job.w));
  return {{"initial_form", format(g)}, {"terms", g.term_count()},
          {"variables", g.variables()}};
}

json cmd_coamoeba2(const Job& job, Session& s) {
  return jio::to_json(build_cycle(load_b(s, job.input)));
}

json cmd_pls3(const Job& job, Session& s) {
  Matroid m = Matroid::build(load_b(s, job.input));
  json prisms = json::array();
  for (const Prism& p : prisms_d3(m)) prisms.push_back(jio::to_json(m, p));
  return {{"count", prisms.size()}, {"prisms", prisms}};
}

json cmd_member(const Job& job, Session& s) {
  VectorConfiguration b = load_b(s, job.input);
  std::vector<Angle> theta;
  json echo = json::array();
  bool exact = true;
  for (const std::string& item : split(job.theta, ',')) {
    Angle a = parse_angle(item);
    a.radians = reduce_angle(a.radians);
    if (a.units_of_pi) {
      echo.push_back({{"radians", a.radians}, {"pi", jio::pi_string(*a.units_of_pi)}});
    } else {
      exact = false;
      echo.push_back({{"radians", a.radians}});
    }
    theta.push_back(a);
  }
  s.param("theta", job.theta);
  s.param("tol", job.tol);
  if (theta.size() != b.ambient_rank()) {
    throw Error(ErrorCode::kInvalidInput, "theta length must equal d");
  }
  json out = {{"theta", echo}};
  if (b.ambient_rank() == 2) {
    CoamoebaCycle c = build_cycle(b);
    bool inside = contains2(c, {theta[0].radians, theta[1].radians}, job.tol);
    if (exact) {
      inside = contains2_exact(c, {*theta[0].units_of_pi, *theta[1].units_of_pi});
    }
    out["inside"] = inside;
    out["exact"] = exact;
    return out;
  }
  if (b.ambient_rank() == 3) {
    Matroid m = Matroid::build(b);
    std::vector<Prism> prisms = prisms_d3(m);
    PrismHit hit = contains_pls3(
        prisms, {theta[0].radians, theta[1].radians, theta[2].radians}, job.tol);
    out["inside"] = hit.inside;
    out["witness"] = hit.witness
                         ? labels_of(m, prisms[*hit.witness].hyperplane_flat.forms)
                         : json(nullptr);
    return out;
  }
  throw Error(ErrorCode::kDimensionNot3, "membership needs d = 2 or d = 3");
}

json cmd_verify(const Job& job, Session& s) {
  Matroid m = Matroid::build(load_b(s, job.input));
  json out;
  std::string status = "pass";
  if (!job.poly.empty()) {
    SparsePoly f = parse_polynomial_file(s.read(job.poly));
    s.param("grid", job.grid);
    ResidueReport r = residue_check(f, m, job.grid);
    out["residue"] = {{"max_abs", r.max_abs.get_str()},
                      {"n_points", r.n_points},
                      {"worst_point", r.worst_point ? jio::to_json(*r.worst_point)
                                                    : json(nullptr)}};
    RoundtripReport g = gauss_roundtrip(f, m, job.grid);
    out["roundtrip"] = {{"pass", g.pass},
                        {"n_checked", g.n_checked},
                        {"n_singular", g.n_singular},
                        {"diagnosis", g.diagnosis},
                        {"counterexample", g.counterexample
                                               ? jio::to_json(*g.counterexample)
                                               : json(nullptr)}};
    const bool erratum = sgn(r.max_abs) != 0 || !g.pass;
    out["erratum"] = erratum;
    if (erratum) status = "inconclusive";
  }
  if (m.ambient_rank() == 3) {
    s.param("n", job.n);
    s.param("seed", job.seed);
    s.param("tol", job.sample_tol);
    out["experiment"] = jio::to_json(
        conjecture_experiment_d3(m, job.n, job.sample_tol, job.seed, job.threads));
  }
  out["status"] = status;
  return out;
}

void write_text(const std::string& path, const std::string& text,
                std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::kInvalidInput, "cannot write " + path);
  file << text;
}

int cmd_sample(const Job& job, Session& s, std::ostream& out) {
  Matroid m = Matroid::build(load_b(s, job.input));
  s.param("n", job.n);
  s.param("seed", job.seed);
  PointCloud cloud = sample_coamoeba(m, job.n, job.seed, job.threads);
  std::ostringstream csv;
  csv.precision(17);
  if (job.output.empty()) csv << "# " << s.provenance().dump() << "\n";
  for (std::size_t j = 0; j < m.ambient_rank(); ++j) {
    csv << (j ? "," : "") << "theta" << j + 1;
  }
  csv << "\n";
  for (const auto& p : cloud.points) {
    for (std::size_t j = 0; j < p.size(); ++j) csv << (j ? "," : "") << p[j];
    csv << "\n";
  }
  write_text(job.output, csv.str(), out);
  if (!job.output.empty()) {
    json summary = {{"n_requested", cloud.n_requested},
                    {"n_points", cloud.points.size()},
                    {"n_rejected", cloud.n_rejected},
                    {"csv", job.output},
                    {"provenance", s.provenance()}};
    out << summary.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Coamoebas, tropical discriminants and phase limit sets", "coam"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(jio::library_version()));
  Job job;

  struct Command {
    std::string name;
    std::string help;
    Handler handler;
    CLI::App* sub = nullptr;
  };
  std::vector<Command> commands = {
      {"gale", "Gale dual of a point configuration A", cmd_gale},
      {"validate", "Validate a configuration", cmd_validate},
      {"matroid-info", "Bases, flats, flacets and parallel classes", cmd_matroid_info},
      {"bergman-rays", "Rays of the Bergman fan", cmd_bergman_rays},
      {"fine-cones", "Maximal cones of the Bergman fan", cmd_fine_cones},
      {"tdiscr-rays", "Rays of the tropical discriminant", cmd_tdiscr_rays},
      {"nondefective", "Search for a non-splitting flag", cmd_nondefective},
      {"psi", "Horn-Kapranov parameterization at a point", cmd_psi},
      {"gauss", "Logarithmic Gauss map of a polynomial", cmd_gauss},
      {"initial-form", "Initial form of a polynomial", cmd_initial_form},
      {"coamoeba2", "Coamoeba cycle of a planar configuration", cmd_coamoeba2},
      {"pls3", "Prisms of the phase limit set, d = 3", cmd_pls3},
      {"member", "Closed coamoeba or phase limit set membership", cmd_member},
      {"sample", "Sample the coamoeba as CSV", nullptr},
      {"verify", "Residue, roundtrip and prism coverage checks", cmd_verify},
  };
  for (Command& c : commands) {
    c.sub = app.add_subcommand(c.name, c.help);
    c.sub->add_option("input", job.input, "Input file")->required();
    c.sub->add_option("-o,--output", job.output, "Output file");
  }
  auto find = [&](const std::string& name) {
    for (Command& c : commands) {
      if (c.name == name) return c.sub;
    }
    return static_cast<CLI::App*>(nullptr);
  };
  find("tdiscr-rays")->add_flag("--fan", job.fan, "Add type-2 rays (d = 3)");
  find("psi")->add_option("--y", job.y, "Point, comma separated; re:im for complex")
      ->required();
  find("psi")->add_flag("--exact", job.exact, "Exact rational evaluation");
  find("gauss")->add_option("--x", job.x, "Rational point");
  find("gauss")->add_option("--config", job.poly, "Configuration for --y");
  find("gauss")->add_option("--y", job.y, "Evaluate at psi(y)");
  find("initial-form")->add_option("--w", job.w, "Integer weight")->required();
  find("member")->add_option("--theta", job.theta, "Angles, e.g. 1/2*pi,-3/4*pi")
      ->required();
  find("member")->add_option("--tol", job.tol, "Tolerance in radians");
  for (const char* name : {"sample", "verify"}) {
    find(name)->add_option("-n,--samples", job.n, "Number of samples");
    find(name)->add_option("--seed", job.seed, "Random seed");
    find(name)->add_option("--threads", job.threads, "Worker threads");
  }
  find("verify")->add_option("--poly", job.poly, "Defining polynomial file");
  find("verify")->add_option("--grid", job.grid, "Exact grid points");
  find("verify")->add_option("--tol", job.sample_tol, "Membership tolerance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  for (Command& c : commands) {
    if (!c.sub->parsed()) continue;
    Session session(c.name);
    validation_exit = kExitOk;
    try {
      if (c.name == "sample") return cmd_sample(job, session, out);
      json result = c.handler(job, session);
      result["provenance"] = session.provenance();
      write_text(job.output, result.dump(2) + "\n", out);
      return validation_exit;
    } catch (const Error& e) {
      err << "coam " << c.name << ": " << e.what() << "\n";
      return is_invariant_violation(e.code()) ? kExitInvariant : kExitValidation;
    } catch (const nlohmann::json::exception& e) {
      err << "coam " << c.name << ": malformed input: " << e.what() << "\n";
      return kExitValidation;
    } catch (const std::exception& e) {
      err << "coam " << c.name << ": internal error: " << e.what() << "\n";
      return kExitInvariant;
    }
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace coam::cli
