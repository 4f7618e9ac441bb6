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


#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "warpcurv/errors.hpp"
#include "warpcurv/hyperdual.hpp"
#include "warpcurv/manifold.hpp"
#include "warpcurv/models.hpp"
#include "warpcurv/warped.hpp"

using namespace warpcurv;
using doctest::Approx;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("hyper-dual arithmetic gives exact partials") {
  const HyperDual x(1.5, 1.0, 1.0, 0.0);
  const HyperDual q = HyperDual(2.0) / x;
  CHECK(q.v == 2.0 / 1.5);
  CHECK(q.d1 == Approx(-2.0 / (1.5 * 1.5)).epsilon(1e-15));
  CHECK(q.d12 == Approx(4.0 / (1.5 * 1.5 * 1.5)).epsilon(1e-15));
  const HyperDual s = sin(x) * x;
  CHECK(s.d1 == Approx(std::cos(1.5) * 1.5 + std::sin(1.5)));
  CHECK(s.d12 == Approx(-std::sin(1.5) * 1.5 + 2.0 * std::cos(1.5)));
  const HyperDual p = pow(x, 0.5);
  CHECK(p.d12 == Approx(-0.25 * std::pow(1.5, -1.5)));
}

TEST_CASE("scalar field jets") {
  const Jet a = ScalarField::power(2.0, 3.0).jet(1.5);
  CHECK(a.value == Approx(2.0 * 1.5 * 1.5 * 1.5));
  CHECK(a.first == Approx(6.0 * 1.5 * 1.5));
  CHECK(a.second == Approx(12.0 * 1.5));
  const Jet e = ScalarField::exponential(0.5, -2.0).jet(0.3);
  CHECK(e.second == Approx(0.5 * 4.0 * std::exp(-0.6)));
  const Jet c = ScalarField::hyperbolic_cosine().jet(0.7);
  CHECK(c.first == Approx(std::sinh(0.7)));
  const Jet q = ScalarField::polynomial({1.0, 0.0, 3.0}).jet(2.0);
  CHECK(q.value == Approx(13.0));
  CHECK(q.second == Approx(6.0));
  const Jet s = ScalarField::schwarzschild(1.0).jet(4.0);
  CHECK(s.value == Approx(std::sqrt(0.5)));
  CHECK(s.first == Approx(1.0 / (16.0 * std::sqrt(0.5))));
  const Jet k = ScalarField::power(1.0, 1.0).raised(2.0 / 3.0).jet(8.0);
  CHECK(k.value == Approx(4.0));
  CHECK(k.first == Approx(2.0 / 3.0 / 2.0));
  CHECK(ScalarField().value(std::vector<double>{3.0}) == 1.0);
}

TEST_CASE("metric evaluation") {
  const ManifoldSpec mgrw = ManifoldSpec::mgrw(
      {0.0, kInf}, {ScalarField::power(1.0, 1.0), ScalarField::power(1.0, 2.0)},
      {FiberSpec::euclidean(1), FiberSpec::sphere(2)});
  const Point p = Point::at(1.3, {{0.2}, {1.0, 0.4}});
  const TangentVector dt = time_direction(mgrw);
  CHECK(metric_eval(mgrw, p, dt, dt) == -1.0);

  const ManifoldSpec ads = catalog_entry("anti_de_sitter_cover").spec;
  const Point q = Point::at(0.0, {{0.8, 1.0, 0.3}});
  CHECK(metric_eval(ads, q, time_direction(ads), time_direction(ads)) ==
        Approx(-std::cosh(0.8) * std::cosh(0.8)));

  const ManifoldSpec grw =
      ManifoldSpec::grw({-kInf, kInf}, ScalarField::constant(2.0), FiberSpec::sphere(3));
  const Point r = Point::at(0.0, {{1.0, 1.2, 0.4}});
  const TangentVector V = fiber_lift(grw, 0, {1.0, 0.0, 0.0});
  CHECK(metric_eval(grw, r, V, V) == Approx(4.0));
}

TEST_CASE("chart assembly") {
  const Eigen::MatrixXd mink = assemble_chart(catalog_entry("minkowski").spec)
                                   .metric(std::vector<double>{0.3, 1.0, -2.0, 0.5});
  CHECK(mink.isApprox(Eigen::Vector4d(-1, 1, 1, 1).asDiagonal().toDenseMatrix()));

  const ManifoldSpec kas = catalog_entry("kasner_vacuum").spec;
  const double t = 1.7;
  const Eigen::MatrixXd g = assemble_chart(kas).metric(std::vector<double>{t, 0.1, 0.2, 0.3});
  const Eigen::Vector4d diag(-1.0, std::pow(t, 4.0 / 3.0), std::pow(t, 4.0 / 3.0),
                             std::pow(t, -2.0 / 3.0));
  CHECK((g - diag.asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() < 1e-14);

  const ManifoldSpec sch = catalog_entry("schwarzschild_exterior").spec;
  const double r = 3.5, th = 1.1;
  const Eigen::MatrixXd s = assemble_chart(sch).metric(std::vector<double>{0.0, r, th, 0.2});
  const double h = 1.0 - 2.0 / r;
  CHECK(s(0, 0) == Approx(-h).epsilon(1e-15));
  CHECK(s(1, 1) == 1.0 / h);
  CHECK(s(2, 2) == r * r);
  CHECK(s(3, 3) == r * r * std::sin(th) * std::sin(th));
}

TEST_CASE("flatten and split") {
  const ManifoldSpec grw =
      ManifoldSpec::grw({-kInf, kInf}, ScalarField::constant(1.0), FiberSpec::euclidean(3));
  const TangentVector L = -1.0 * time_direction(grw) + fiber_lift(grw, 0, {1.0, 0.0, 0.0});
  CHECK(flatten(L) == std::vector<double>{-1.0, 1.0, 0.0, 0.0});

  const ManifoldSpec m2 = ManifoldSpec::mgrw({0.0, kInf}, {ScalarField(), ScalarField()},
                                             {FiberSpec::euclidean(1), FiberSpec::euclidean(2)});
  const TangentVector v = base_lift(m2, {0.5}) + fiber_lift(m2, 0, {1.0}) + fiber_lift(m2, 1, {0.0, 2.0});
  CHECK(flatten(v) == std::vector<double>{0.5, 1.0, 0.0, 2.0});

  std::mt19937_64 rng(7);
  std::normal_distribution<double> n;
  for (int k = 0; k < 100; ++k) {
    std::vector<double> c(4);
    for (auto& x : c) x = n(rng);
    CHECK(flatten(split(c, m2)) == c);
  }
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(Interval({2.0, 1.0}).validate(), ValidationError);
  CHECK_THROWS_AS(ManifoldSpec::mgrw({0.0, 1.0}, {ScalarField()}, {}), ValidationError);
  CHECK_THROWS_AS(ManifoldSpec::mgrw({0.0, 1.0}, {ScalarField(), ScalarField()},
                                     {FiberSpec::euclidean(1)}),
                  ValidationError);
  CHECK_THROWS_AS(ManifoldSpec::kasner({0.0, kInf}, ScalarField::power(1.0, 1.0), {0.5},
                                       {FiberSpec::euclidean(1), FiberSpec::euclidean(1)}),
                  ValidationError);
  CHECK_THROWS_AS(FiberSpec::sphere(2, -1.0), ValidationError);

  const ManifoldSpec grw =
      ManifoldSpec::grw({0.0, 1.0}, ScalarField::power(1.0, 1.0), FiberSpec::euclidean(2));
  CHECK_THROWS_AS(validate_point(grw, Point::at(1.5, {{0.0, 0.0}})), DomainError);
  CHECK_THROWS_AS(validate_point(grw, Point::at(0.5, {{0.0}})), ShapeError);
  CHECK_NOTHROW(validate_point(grw, Point::at(0.5, {{0.0, 0.0}})));
  CHECK_THROWS_AS(validate_vector(grw, fiber_lift(grw, 0, {1.0})), ShapeError);

  const ManifoldSpec sch = catalog_entry("schwarzschild_exterior").spec;
  CHECK_THROWS_AS(validate_point(sch, Point::at(0.0, {{1.5, 1.0, 0.0}})), DomainError);
}

TEST_CASE("constant curvature tags") {
  CHECK(FiberSpec::euclidean(3).constant_curvature() == 0.0);
  CHECK(*FiberSpec::sphere(2, 2.0).constant_curvature() == Approx(0.25));
  CHECK(*FiberSpec::hyperbolic(3).constant_curvature() == Approx(-1.0));
  CHECK_FALSE(FiberSpec::schwarzschild_spatial(1.0).constant_curvature().has_value());
}
