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


#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "warpcurv/hyperdual.hpp"

namespace warpcurv {

/// Value and first two derivatives of a one-variable function at a point.
struct Jet {
  double value = 0.0;
  double first = 0.0;
  double second = 0.0;
};

/// A smooth scalar field on a coordinate chart, evaluable on hyper-dual
/// coordinates. Warping functions b_i(t), the Kasner scale function and
/// the static potential f of a standard static space-time are all
/// ScalarFields. Named forms carry their parameters so they can be
/// serialized; `custom` fields are library-only.
class ScalarField {
 public:
  using Fn = std::function<HyperDual(std::span<const HyperDual>)>;

  enum class Form { constant, power, exp, poly, cosh, schwarzschild, kasner, custom };

  ScalarField();  // the constant 1

  static ScalarField constant(double c);
  // c * x^q
  static ScalarField power(double c, double q, int var = 0);
  // c * e^(k x)
  static ScalarField exponential(double c, double k, int var = 0);
  // sum_n coeffs[n] * x^n
  static ScalarField polynomial(std::vector<double> coeffs, int var = 0);
  // c * cosh(k x)
  static ScalarField hyperbolic_cosine(double c = 1.0, double k = 1.0, int var = 0);
  // sqrt(1 - 2 m / x)
  static ScalarField schwarzschild(double mass, int var = 0);
  static ScalarField custom(std::string name, Fn fn);

  // this^p; the Kasner warping phi^(p_i).
  [[nodiscard]] ScalarField raised(double p) const;

  HyperDual operator()(std::span<const HyperDual> x) const { return fn_(x); }
  [[nodiscard]] double value(std::span<const double> x) const;
  // Value and derivatives along coordinate `var` of a one-dimensional chart.
  [[nodiscard]] Jet jet(double t) const;

  [[nodiscard]] Form form() const { return form_; }
  [[nodiscard]] const std::string& form_name() const { return name_; }
  [[nodiscard]] const std::map<std::string, double>& params() const { return params_; }
  [[nodiscard]] const std::vector<double>& coeffs() const { return coeffs_; }
  [[nodiscard]] int variable() const { return var_; }
  // Inner field for Form::kasner, null otherwise.
  [[nodiscard]] const ScalarField* inner() const { return inner_.get(); }
  [[nodiscard]] double exponent() const;

 private:
  Form form_ = Form::constant;
  std::string name_ = "constant";
  std::map<std::string, double> params_;
  std::vector<double> coeffs_;
  int var_ = 0;
  std::shared_ptr<const ScalarField> inner_;
  Fn fn_;
};

std::string to_string(ScalarField::Form form);

}  // namespace warpcurv
