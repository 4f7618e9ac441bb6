// Copyright 2026 The warpcurv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "warpcurv/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "warpcurv/errors.hpp"

namespace warpcurv {
namespace {

using nlohmann::json;

double number(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number()) {
    throw ValidationError(std::string("expected numeric field '") + key + "'");
  }
  return obj.at(key).get<double>();
}

double number_or(const json& obj, const char* key, double fallback) {
  return obj.contains(key) ? number(obj, key) : fallback;
}

json end_to_json(double v) { return std::isinf(v) ? json(nullptr) : json(v); }

double end_from_json(const json& base, const char* key, double inf) {
  if (!base.contains(key) || base.at(key).is_null()) return inf;
  return number(base, key);
}

}  // namespace

json scalar_to_json(const ScalarField& field) {
  using F = ScalarField::Form;
  json params = json::object();
  switch (field.form()) {
    case F::custom:
    case F::kasner:
      throw CapabilityError("scalar field '" + field.form_name() + "' has no JSON form");
    case F::poly:
      params["coeffs"] = field.coeffs();
      break;
    default:
      for (const auto& [k, v] : field.params()) params[k] = v;
  }
  if (field.variable() != 0) params["var"] = field.variable();
  return {{"form", field.form_name()}, {"params", params}};
}

ScalarField scalar_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("form") || !doc.at("form").is_string()) {
    throw ValidationError("warping entry needs a string 'form'");
  }
  const std::string form = doc.at("form").get<std::string>();
  const json params = doc.value("params", json::object());
  if (!params.is_object()) throw ValidationError("'params' must be an object");
  const int var = params.contains("var") ? params.at("var").get<int>() : 0;

  if (form == "constant") return ScalarField::constant(number(params, "value"));
  if (form == "power") return ScalarField::power(number_or(params, "c", 1.0), number(params, "q"), var);
  if (form == "exp") {
    return ScalarField::exponential(number_or(params, "c", 1.0), number_or(params, "k", 1.0), var);
  }
  if (form == "cosh") {
    return ScalarField::hyperbolic_cosine(number_or(params, "c", 1.0), number_or(params, "k", 1.0),
                                          var);
  }
  if (form == "schwarzschild") return ScalarField::schwarzschild(number_or(params, "mass", 1.0), var);
  if (form == "poly") {
    if (!params.contains("coeffs") || !params.at("coeffs").is_array()) {
      throw ValidationError("poly warping needs a 'coeffs' array");
    }
    return ScalarField::polynomial(params.at("coeffs").get<std::vector<double>>(), var);
  }
  throw ValidationError("unknown warping form '" + form + "'");
}

json fiber_to_json(const FiberSpec& fiber) {
  json out = {{"dim", fiber.dim()}, {"model", fiber.model_name()}};
  switch (fiber.model()) {
    case CurvatureModel::sphere:
    case CurvatureModel::hyperbolic:
      out["radius"] = fiber.radius();
      break;
    case CurvatureModel::euclidean:
      break;
    case CurvatureModel::generic:
      if (fiber.model_name() != "schwarzschild_spatial") {
        throw CapabilityError("custom fiber '" + fiber.model_name() + "' has no JSON form");
      }
      out["mass"] = fiber.params().at("mass");
      break;
  }
  return out;
}

FiberSpec fiber_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("fiber entry must be an object");
  const int dim = static_cast<int>(number(doc, "dim"));
  const std::string model = doc.value("model", std::string("euclidean"));
  if (model == "euclidean") return FiberSpec::euclidean(dim);
  if (model == "sphere") return FiberSpec::sphere(dim, number_or(doc, "radius", 1.0));
  if (model == "hyperbolic") return FiberSpec::hyperbolic(dim, number_or(doc, "radius", 1.0));
  if (model == "schwarzschild_spatial") {
    if (dim != 3) throw ValidationError("schwarzschild_spatial fibers are 3-dimensional");
    return FiberSpec::schwarzschild_spatial(number_or(doc, "mass", 1.0));
  }
  if (model == "custom") throw CapabilityError("custom fiber metrics are library-only");
  throw ValidationError("unknown fiber model '" + model + "'");
}

json spec_to_json(const ManifoldSpec& spec) {
  if (spec.kind == ManifoldKind::generic) {
    throw CapabilityError("specs over a general base chart have no JSON form");
  }
  json out;
  out["kind"] = to_string(spec.kind);
  out["base"] = {{"t1", end_to_json(spec.base.t1)}, {"t2", end_to_json(spec.base.t2)}};
  json warpings = json::array();
  if (spec.kind == ManifoldKind::kasner) {
    warpings.push_back(scalar_to_json(*spec.kasner_scale));
  } else {
    for (const auto& w : spec.warpings) warpings.push_back(scalar_to_json(w));
  }
  out["warpings"] = warpings;
  json fibers = json::array();
  for (const auto& f : spec.fibers) fibers.push_back(fiber_to_json(f));
  out["fibers"] = fibers;
  if (spec.kind == ManifoldKind::kasner) out["kasner_exponents"] = spec.kasner_exponents;
  return out;
}

ManifoldSpec spec_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("spec document must be an object");
  try {
    const ManifoldKind kind = kind_from_string(doc.value("kind", std::string("MGRW")));
    Interval base;
    if (doc.contains("base")) {
      const json& b = doc.at("base");
      base.t1 = end_from_json(b, "t1", -std::numeric_limits<double>::infinity());
      base.t2 = end_from_json(b, "t2", std::numeric_limits<double>::infinity());
    }
    std::vector<ScalarField> warpings;
    for (const auto& w : doc.value("warpings", json::array())) warpings.push_back(scalar_from_json(w));
    std::vector<FiberSpec> fibers;
    for (const auto& f : doc.value("fibers", json::array())) fibers.push_back(fiber_from_json(f));

    ManifoldSpec spec;
    switch (kind) {
      case ManifoldKind::kasner: {
        if (warpings.size() != 1) {
          throw ValidationError("Kasner specs carry exactly one warping entry, the scale phi");
        }
        if (!doc.contains("kasner_exponents")) throw ValidationError("Kasner spec needs exponents");
        spec = ManifoldSpec::kasner(base, warpings[0],
                                    doc.at("kasner_exponents").get<std::vector<double>>(), fibers);
        break;
      }
      case ManifoldKind::grw:
        if (warpings.size() != 1 || fibers.size() != 1) {
          throw ValidationError("GRW specs carry one warping and one fiber");
        }
        spec = ManifoldSpec::grw(base, warpings[0], fibers[0]);
        break;
      case ManifoldKind::ssst:
        if (warpings.size() != 1 || fibers.size() != 1) {
          throw ValidationError("SSST specs carry one potential and one fiber");
        }
        spec = ManifoldSpec::ssst(base, warpings[0], fibers[0]);
        break;
      case ManifoldKind::mgrw:
        spec = ManifoldSpec::mgrw(base, warpings, fibers);
        break;
      case ManifoldKind::generic:
        throw CapabilityError("specs over a general base chart have no JSON form");
    }
    spec.validate();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed spec: ") + e.what());
  }
}

ManifoldSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open spec file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("spec file '" + path + "' is not JSON: " + e.what());
  }
  return spec_from_json(doc);
}

json point_to_json(const Point& p) { return {{"base", p.base}, {"fibers", p.fibers}}; }

json vector_to_json(const TangentVector& v) { return {{"base", v.base}, {"fibers", v.fibers}}; }

}  // namespace warpcurv
