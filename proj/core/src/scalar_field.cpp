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


#include "warpcurv/scalar_field.hpp"

#include <array>
#include <utility>

#include "warpcurv/errors.hpp"

namespace warpcurv {
namespace {

HyperDual coordinate(std::span<const HyperDual> x, int var) {
  if (var < 0 || static_cast<std::size_t>(var) >= x.size()) {
    throw ShapeError("scalar field variable index " + std::to_string(var) +
                     " out of range for a " + std::to_string(x.size()) + "-dimensional chart");
  }
  return x[static_cast<std::size_t>(var)];
}

}  // namespace

ScalarField::ScalarField()
    : params_{{"value", 1.0}}, fn_([](std::span<const HyperDual>) { return HyperDual(1.0); }) {}

ScalarField ScalarField::constant(double c) {
  ScalarField f;
  f.form_ = Form::constant;
  f.name_ = "constant";
  f.params_ = {{"value", c}};
  f.fn_ = [c](std::span<const HyperDual>) { return HyperDual(c); };
  return f;
}

ScalarField ScalarField::power(double c, double q, int var) {
  ScalarField f;
  f.form_ = Form::power;
  f.name_ = "power";
  f.params_ = {{"c", c}, {"q", q}};
  f.var_ = var;
  f.fn_ = [c, q, var](std::span<const HyperDual> x) {
    return HyperDual(c) * warpcurv::pow(coordinate(x, var), q);
  };
  return f;
}

ScalarField ScalarField::exponential(double c, double k, int var) {
  ScalarField f;
  f.form_ = Form::exp;
  f.name_ = "exp";
  f.params_ = {{"c", c}, {"k", k}};
  f.var_ = var;
  f.fn_ = [c, k, var](std::span<const HyperDual> x) {
    return HyperDual(c) * warpcurv::exp(HyperDual(k) * coordinate(x, var));
  };
  return f;
}

ScalarField ScalarField::polynomial(std::vector<double> coeffs, int var) {
  if (coeffs.empty()) throw ValidationError("polynomial warping needs at least one coefficient");
  ScalarField f;
  f.form_ = Form::poly;
  f.name_ = "poly";
  f.coeffs_ = coeffs;
  f.var_ = var;
  f.fn_ = [coeffs = std::move(coeffs), var](std::span<const HyperDual> x) {
    const HyperDual t = coordinate(x, var);
    HyperDual acc(coeffs.back());
    for (std::size_t n = coeffs.size() - 1; n-- > 0;) acc = acc * t + HyperDual(coeffs[n]);
    return acc;
  };
  return f;
}

ScalarField ScalarField::hyperbolic_cosine(double c, double k, int var) {
  ScalarField f;
  f.form_ = Form::cosh;
  f.name_ = "cosh";
  f.params_ = {{"c", c}, {"k", k}};
  f.var_ = var;
  f.fn_ = [c, k, var](std::span<const HyperDual> x) {
    return HyperDual(c) * warpcurv::cosh(HyperDual(k) * coordinate(x, var));
  };
  return f;
}

ScalarField ScalarField::schwarzschild(double mass, int var) {
  if (!(mass > 0.0)) throw ValidationError("schwarzschild mass must be positive");
  ScalarField f;
  f.form_ = Form::schwarzschild;
  f.name_ = "schwarzschild";
  f.params_ = {{"mass", mass}};
  f.var_ = var;
  f.fn_ = [mass, var](std::span<const HyperDual> x) {
    return warpcurv::sqrt(HyperDual(1.0) - HyperDual(2.0 * mass) / coordinate(x, var));
  };
  return f;
}

ScalarField ScalarField::custom(std::string name, Fn fn) {
  if (!fn) throw ValidationError("custom scalar field needs an evaluator");
  ScalarField f;
  f.form_ = Form::custom;
  f.name_ = std::move(name);
  f.fn_ = std::move(fn);
  return f;
}

ScalarField ScalarField::raised(double p) const {
  ScalarField f;
  f.form_ = Form::kasner;
  f.name_ = "kasner";
  f.params_ = {{"p", p}};
  f.var_ = var_;
  f.inner_ = std::make_shared<const ScalarField>(*this);
  f.fn_ = [inner = f.inner_, p](std::span<const HyperDual> x) {
    return warpcurv::pow((*inner)(x), p);
  };
  return f;
}

double ScalarField::exponent() const {
  const auto it = params_.find("p");
  return it == params_.end() ? 1.0 : it->second;
}

double ScalarField::value(std::span<const double> x) const {
  std::vector<HyperDual> h(x.begin(), x.end());
  return fn_(h).v;
}

Jet ScalarField::jet(double t) const {
  // Any field on a one-dimensional chart; var must be 0 there.
  const std::array<HyperDual, 1> x{HyperDual(t, 1.0, 1.0, 0.0)};
  const HyperDual r = fn_(x);
  return {r.v, r.d1, r.d12};
}

std::string to_string(ScalarField::Form form) {
  switch (form) {
    case ScalarField::Form::constant: return "constant";
    case ScalarField::Form::power: return "power";
    case ScalarField::Form::exp: return "exp";
    case ScalarField::Form::poly: return "poly";
    case ScalarField::Form::cosh: return "cosh";
    case ScalarField::Form::schwarzschild: return "schwarzschild";
    case ScalarField::Form::kasner: return "kasner";
    case ScalarField::Form::custom: return "custom";
  }
  return "custom";
}

}  // namespace warpcurv
