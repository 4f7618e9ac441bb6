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

#include "warpcurv/manifold.hpp"
#include "warpcurv/models.hpp"
#include "warpcurv/oracle.hpp"

using namespace warpcurv;
using doctest::Approx;

namespace {

CoordinateChart round_sphere(double a) {
  return FiberSpec::sphere(2, a).chart();
}

CoordinateChart flat_polar() {
  return {2, [](std::span<const HyperDual> x) {
            HdMatrix g(2);
            g(0, 0) = 1.0;
            g(1, 1) = x[0] * x[0];
            return g;
          }};
}

}  // namespace

TEST_CASE("Christoffel symbols") {
  const Tensor3 m = christoffel(assemble_chart(catalog_entry("minkowski").spec),
                                std::vector<double>{0.1, 0.2, 0.3, 0.4});
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(m(k, i, j) == 0.0);

  const Tensor3 s = christoffel(round_sphere(1.0), std::vector<double>{std::numbers::pi / 2, 0.3});
  CHECK(std::abs(s(0, 1, 1)) < 1e-15);
  CHECK(std::abs(s(1, 0, 1)) < 1e-15);
  const Tensor3 s2 = christoffel(round_sphere(1.0), std::vector<double>{0.7, 0.3});
  CHECK(s2(0, 1, 1) == Approx(-std::sin(0.7) * std::cos(0.7)));
  CHECK(s2(1, 0, 1) == Approx(std::cos(0.7) / std::sin(0.7)));

  const ManifoldSpec grw = ManifoldSpec::grw({0.0, std::numeric_limits<double>::infinity()},
                                             ScalarField::power(1.0, 1.0), FiberSpec::euclidean(1));
  const Tensor3 g = christoffel(assemble_chart(grw), std::vector<double>{2.5, 0.0});
  CHECK(g(1, 0, 1) == Approx(1.0 / 2.5));

  const Tensor3 p = christoffel(flat_polar(), std::vector<double>{2.0, 0.5});
  CHECK(p(0, 1, 1) == Approx(-2.0));
}

TEST_CASE("Riemann tensor of model charts") {
  const CurvatureTensors mink = riemann_oracle(assemble_chart(catalog_entry("minkowski").spec),
                                               std::vector<double>{0.1, 0.2, 0.3, 0.4});
  CHECK(mink.scale() == 0.0);

  const double a = 1.7;
  const CurvatureTensors s = riemann_oracle(round_sphere(a), std::vector<double>{0.9, 0.3});
  const std::vector<double> e1{1.0, 0.0}, e2{0.0, 1.0};
  const double q = s.jet.g(0, 0) * s.jet.g(1, 1);
  CHECK(s.form(e1, e2, e2, e1) / q == Approx(1.0 / (a * a)));
  CHECK((s.ricci - s.jet.g / (a * a)).cwiseAbs().maxCoeff() < 1e-13);

  const CurvatureTensors flat = riemann_oracle(flat_polar(), std::vector<double>{2.0, 0.5});
  CHECK(flat.scale() < 1e-15);

  const CatalogEntry& kas = catalog_entry("kasner_vacuum");
  const CurvatureTensors k =
      riemann_oracle(assemble_chart(kas.spec), std::vector<double>{1.0, 0.1, 0.2, 0.3});
  CHECK(k.ricci.cwiseAbs().maxCoeff() < 1e-8);
  CHECK(k.scale() > 0.1);

  // Einstein static: R(V, X)Y = 0 for X, Y along the static time.
  const CatalogEntry& es = catalog_entry("einstein_static");
  const CurvatureTensors e =
      riemann_oracle(assemble_chart(es.spec), std::vector<double>{0.0, 1.0, 1.2, 0.4});
  const std::vector<double> dt{1.0, 0.0, 0.0, 0.0};
  for (int i = 1; i < 4; ++i) {
    std::vector<double> v(4, 0.0);
    v[static_cast<std::size_t>(i)] = 1.0;
    for (double c : e.apply(v, dt, dt)) CHECK(std::abs(c) < 1e-14);
  }
}

TEST_CASE("oracle residuals are at rounding level") {
  for (const auto& entry : catalog()) {
    std::mt19937_64 rng(11);
    const CoordinateChart chart = assemble_chart(entry.spec);
    for (int n = 0; n < 5; ++n) {
      const OracleResiduals r = oracle_residuals(riemann_oracle(chart, flatten(entry.sample_point(rng))));
      CHECK(r.bianchi < 1e-10);
      CHECK(r.antisym_first_pair < 1e-10);
      CHECK(r.antisym_outer_pair < 1e-10);
      CHECK(r.metric_compatibility < 1e-10);
    }
  }
}

TEST_CASE("scalar oracles") {
  const ScalarField r2 = ScalarField::custom("r2", [](std::span<const HyperDual> x) { return x[0] * x[0]; });
  const Eigen::MatrixXd H = hessian_oracle(flat_polar(), std::vector<double>{2.0, 0.5}, r2);
  CHECK(H(0, 0) == Approx(2.0));
  CHECK(H(1, 1) == Approx(2.0 * 4.0));  // Hessian of r^2 is 2 g
  CHECK(laplacian_oracle(flat_polar(), std::vector<double>{2.0, 0.5}, r2) == Approx(4.0));
  const Eigen::VectorXd g = gradient_oracle(flat_polar(), std::vector<double>{2.0, 0.5}, r2);
  CHECK(g(0) == Approx(4.0));
  CHECK(g(1) == Approx(0.0));

  const CoordinateChart line = {1, [](std::span<const HyperDual>) {
                                  HdMatrix g1(1);
                                  g1(0, 0) = 1.0;
                                  return g1;
                                }};
  const Eigen::MatrixXd h1 = hessian_oracle(line, std::vector<double>{0.4}, ScalarField::power(1.0, 2.0));
  CHECK(h1(0, 0) == Approx(2.0));
  const Eigen::MatrixXd h0 = hessian_oracle(line, std::vector<double>{0.4}, ScalarField::constant(3.0));
  CHECK(h0(0, 0) == 0.0);
}

TEST_CASE("curvature tolerance") {
  CHECK(curvature_tolerance(0.0) == 1e-10);
  CHECK(curvature_tolerance(1e4) == Approx(1e-4));
}
