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
#include <random>
#include <set>

#include <doctest.h>

#include "warpcurv/errors.hpp"
#include "warpcurv/models.hpp"
#include "warpcurv/oracle.hpp"
#include "warpcurv/warped.hpp"

using namespace warpcurv;
using doctest::Approx;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ManifoldSpec two_fibers() {
  return ManifoldSpec::mgrw({0.0, kInf}, {ScalarField::power(1.0, 1.5), ScalarField::exponential(2.0, 0.3)},
                            {FiberSpec::sphere(2, 1.5), FiberSpec::hyperbolic(2)});
}

Point two_fiber_point() { return Point::at(1.3, {{0.7, 0.4}, {0.5, 1.1}}); }

ManifoldSpec generic_base() {
  CoordinateChart base{2, [](std::span<const HyperDual> x) {
                         HdMatrix g(2);
                         g(0, 0) = -(HyperDual(1.0) + 0.2 * x[1] * x[1]);
                         g(0, 1) = g(1, 0) = 0.1 * x[0];
                         g(1, 1) = exp(0.3 * x[0]);
                         return g;
                       }};
  const ScalarField b = ScalarField::custom("b", [](std::span<const HyperDual> x) {
    return exp(0.4 * x[0]) * (HyperDual(1.0) + 0.2 * x[1] * x[1]);
  });
  return ManifoldSpec::generic(base, {b, ScalarField::constant(1.0)},
                               {FiberSpec::sphere(2), FiberSpec::euclidean(1)});
}

Point generic_point() { return {{0.3, 0.6}, {{1.0, 0.5}, {0.2}}}; }

std::vector<double> unit(int n, int i) {
  std::vector<double> v(static_cast<std::size_t>(n), 0.0);
  v[static_cast<std::size_t>(i)] = 1.0;
  return v;
}

std::vector<double> random_components(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  std::vector<double> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = d(rng);
  return v;
}

LiftedField random_lift(const ManifoldSpec& s, int factor, std::mt19937_64& rng) {
  if (factor == 0) return LiftedField::base(random_components(s.base_dim(), rng));
  return LiftedField::fiber(factor - 1, random_components(s.fibers[factor - 1].dim(), rng));
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Checks every factor pattern of (a, b, c) against the oracle.
void check_all_patterns(const ManifoldSpec& s, const Point& p) {
  const CurvatureTensors t = riemann_oracle(assemble_chart(s), flatten(p));
  std::mt19937_64 rng(3);
  const int m = s.fiber_count();
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j)
      for (int k = 0; k <= m; ++k) {
        const LiftedField a = random_lift(s, i, rng), b = random_lift(s, j, rng), c = random_lift(s, k, rng);
        const auto ro = t.apply(flatten(to_vector(s, a)), flatten(to_vector(s, b)), flatten(to_vector(s, c)));
        const auto rw = flatten(riemann_mwp(s, p, a, b, c));
        INFO("pattern ", i, j, k);
        CHECK(max_diff(ro, rw) < 1e-12 * std::max(1.0, t.scale()) * 10);
      }
}

}  // namespace

TEST_CASE("interval reductions") {
  const IntervalReductions r = interval_reductions({2.0, 3.0, 5.0});
  CHECK(r.gradient == -3.0);
  CHECK(r.norm_squared == -9.0);
  CHECK(r.hessian == 5.0);
  CHECK(r.laplacian == -5.0);
  CHECK(r.nabla_gradient == -5.0);
}

TEST_CASE("case dispatch is total for two fibers") {
  const std::vector<Factor> f = {Factor::base(), Factor::fiber(0), Factor::fiber(1)};
  std::set<int> seen;
  for (const Factor& a : f)
    for (const Factor& b : f)
      for (const Factor& c : f) {
        const CaseDispatch d = classify(a, b, c);
        const int n = static_cast<int>(d.which);
        CHECK(n >= 1);
        CHECK(n <= 9);
        seen.insert(n);
      }
  CHECK(seen.size() == 9);
  CHECK(classify(Factor::fiber(0), Factor::base(), Factor::base()).which == CurvatureCase::fiber_base_base);
  CHECK(classify(Factor::base(), Factor::fiber(0), Factor::base()).negated);
  CHECK(classify(Factor::fiber(0), Factor::fiber(1), Factor::fiber(1)).which == CurvatureCase::cross_fiber);
  CHECK(classify(Factor::fiber(1), Factor::fiber(1), Factor::fiber(1)).which == CurvatureCase::single_fiber);
}

TEST_CASE("curvature matches the oracle on every factor pattern") {
  SUBCASE("two warped fibers") { check_all_patterns(two_fibers(), two_fiber_point()); }
  SUBCASE("generic base") { check_all_patterns(generic_base(), generic_point()); }
  SUBCASE("static space-time") {
    const CatalogEntry& e = catalog_entry("schwarzschild_exterior");
    check_all_patterns(e.spec, Point::at(0.4, {{3.2, 1.0, 0.5}}));
  }
  SUBCASE("Kasner") {
    const CatalogEntry& e = catalog_entry("kasner_vacuum");
    check_all_patterns(e.spec, Point::at(0.8, {{0.1}, {0.2}, {0.3}}));
  }
}

TEST_CASE("closed-form curvature examples") {
  const ManifoldSpec grw =
      ManifoldSpec::grw({0.0, kInf}, ScalarField::power(1.0, 2.0), FiberSpec::euclidean(2));
  const double t = 1.4;
  const Point p = Point::at(t, {{0.0, 0.0}});
  const LiftedField V = LiftedField::fiber(0, {1.0 / (t * t), 0.0});
  const LiftedField dt = LiftedField::base({1.0});
  CaseDispatch d{};
  const WarpedGeometry geo(grw, p);
  const auto r = flatten(geo.curvature(V, dt, dt, &d));
  CHECK(d.which == CurvatureCase::fiber_base_base);
  CHECK(r[1] == Approx(-(2.0 / (t * t)) / (t * t)));

  // Two fibers b_1 = b_2 = t: R(U,V)W = +g(V,W)/t^2 U.
  const ManifoldSpec m2 = ManifoldSpec::mgrw({0.0, kInf}, {ScalarField::power(1.0, 1.0), ScalarField::power(1.0, 1.0)},
                                             {FiberSpec::euclidean(1), FiberSpec::euclidean(1)});
  const Point q = Point::at(t, {{0.0}, {0.0}});
  const auto c7 = flatten(riemann_mwp(m2, q, LiftedField::fiber(0, {1.0}), LiftedField::fiber(1, {1.0}),
                                      LiftedField::fiber(1, {1.0})));
  CHECK(c7[1] == Approx((t * t) / (t * t)));

  // Constant warping reduces case 9 to the fiber curvature.
  const ManifoldSpec prod =
      ManifoldSpec::grw({-kInf, kInf}, ScalarField::constant(1.0), FiberSpec::sphere(2));
  const Point s = Point::at(0.0, {{0.9, 0.2}});
  const auto c9 = riemann_mwp(prod, s, LiftedField::fiber(0, {1.0, 0.0}), LiftedField::fiber(0, {0.0, 1.0}),
                              LiftedField::fiber(0, {0.0, 1.0}));
  const double sin2 = std::sin(0.9) * std::sin(0.9);
  CHECK(c9.fibers[0][0] == Approx(sin2));
  CHECK(std::abs(c9.fibers[0][1]) < 1e-15);
}

TEST_CASE("antisymmetry and linearity") {
  const ManifoldSpec s = two_fibers();
  const Point p = two_fiber_point();
  const WarpedGeometry geo(s, p);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> n;
  auto random_vector = [&] { return split(random_components(s.dimension(), rng), s); };
  for (int k = 0; k < 20; ++k) {
    const TangentVector A = random_vector(), B = random_vector(), C = random_vector(), D = random_vector(),
                        E = random_vector();
    CHECK(geo.curvature_form(A, B, C, D) == Approx(-geo.curvature_form(B, A, C, D)).epsilon(1e-12));
    const double a = n(rng), b = n(rng);
    const auto lhs = flatten(geo.curvature(a * A + b * E, B, C));
    const auto r1 = flatten(geo.curvature(A, B, C)), r2 = flatten(geo.curvature(E, B, C));
    for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] == Approx(a * r1[i] + b * r2[i]).epsilon(1e-12));
    const auto mid = flatten(geo.curvature(A, a * B + b * E, C));
    const auto m1 = flatten(geo.curvature(A, B, C)), m2 = flatten(geo.curvature(A, E, C));
    for (std::size_t i = 0; i < mid.size(); ++i) CHECK(mid[i] == Approx(a * m1[i] + b * m2[i]).epsilon(1e-12));
    const auto last = flatten(geo.curvature(A, B, a * C + b * E));
    const auto l2 = flatten(geo.curvature(A, B, E));
    for (std::size_t i = 0; i < last.size(); ++i) CHECK(last[i] == Approx(a * m1[i] + b * l2[i]).epsilon(1e-12));
  }
}

TEST_CASE("Ricci curvature") {
  for (const auto& [s, p] : std::vector<std::pair<ManifoldSpec, Point>>{
           {two_fibers(), two_fiber_point()}, {generic_base(), generic_point()}}) {
    const CurvatureTensors t = riemann_oracle(assemble_chart(s), flatten(p));
    CHECK((ricci_components(s, p) - t.ricci).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(ricci_mwp(s, p, LiftedField::base(unit(s.base_dim(), 0)), LiftedField::fiber(0, {1.0, 0.0})) == 0.0);
  }
  const ManifoldSpec mink = catalog_entry("minkowski").spec;
  CHECK(ricci_components(mink, Point::at(0.0, {{0.0, 0.0, 0.0}})).cwiseAbs().maxCoeff() == 0.0);
  const ManifoldSpec kas = catalog_entry("kasner_vacuum").spec;
  CHECK(ricci_components(kas, Point::at(1.0, {{0.0}, {0.0}, {0.0}})).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("covariant derivative") {
  const ManifoldSpec grw =
      ManifoldSpec::grw({0.0, kInf}, ScalarField::power(1.0, 2.0), FiberSpec::euclidean(2));
  const double t = 1.6;
  const Point p = Point::at(t, {{0.0, 0.0}});
  const auto v = covariant_derivative(grw, p, LiftedField::base({1.0}), LiftedField::fiber(0, {1.0, 0.0}));
  CHECK(v.fibers[0][0] == Approx(2.0 / t));

  const ManifoldSpec flat =
      ManifoldSpec::grw({-kInf, kInf}, ScalarField::constant(1.0), FiberSpec::euclidean(2));
  const auto z = covariant_derivative(flat, Point::at(0.0, {{0.0, 0.0}}), LiftedField::base({1.0}),
                                      LiftedField::fiber(0, {1.0, 0.0}));
  CHECK(flatten(z) == std::vector<double>(3, 0.0));

  const ManifoldSpec m2 = two_fibers();
  const Point q = two_fiber_point();
  const auto d = covariant_derivative(m2, q, LiftedField::fiber(0, {1.0, 0.0}), LiftedField::fiber(1, {0.0, 1.0}));
  for (double c : flatten(d)) CHECK(c == 0.0);

  // Same-fiber case against the oracle Christoffels.
  const Tensor3 G = christoffel(assemble_chart(m2), flatten(q));
  const auto w = flatten(covariant_derivative(m2, q, LiftedField::fiber(0, {1.0, 0.0}),
                                              LiftedField::fiber(0, {0.3, 1.0})));
  for (int k = 0; k < 5; ++k) CHECK(w[static_cast<std::size_t>(k)] == Approx(0.3 * G(k, 1, 1) + G(k, 1, 2)));
}

TEST_CASE("gradient and Laplacian of lifted scalars") {
  const ManifoldSpec grw =
      ManifoldSpec::grw({-kInf, kInf}, ScalarField::exponential(1.0, 1.0), FiberSpec::euclidean(3));
  const Point p = Point::at(0.4, {{0.0, 0.0, 0.0}});
  const LiftedScalar phi{Factor::base(), ScalarField::power(1.0, 1.0)};
  CHECK(laplacian_lift(grw, p, phi) == Approx(-3.0));
  CHECK(gradient_lift(grw, p, phi).base[0] == Approx(-1.0));
  CHECK(flatten(gradient_lift(grw, p, {Factor::base(), ScalarField::constant(2.0)})) ==
        std::vector<double>(4, 0.0));
  const CoordinateChart chart = assemble_chart(grw);
  const ScalarField lifted = ScalarField::custom("t", [](std::span<const HyperDual> x) { return x[0]; });
  CHECK(laplacian_oracle(chart, flatten(p), lifted) == Approx(-3.0));

  // Fiber scalars pick up 1/b^2.
  const ManifoldSpec two = ManifoldSpec::grw({-kInf, kInf}, ScalarField::constant(2.0), FiberSpec::sphere(2));
  const Point q = Point::at(0.0, {{0.8, 0.3}});
  const ScalarField psi = ScalarField::custom("cos", [](std::span<const HyperDual> x) { return cos(x[0]); });
  const LiftedScalar ps{Factor::fiber(0), psi};
  const ManifoldSpec one = ManifoldSpec::grw({-kInf, kInf}, ScalarField::constant(1.0), FiberSpec::sphere(2));
  const auto g2 = flatten(gradient_lift(two, q, ps)), g1 = flatten(gradient_lift(one, q, ps));
  for (std::size_t i = 0; i < g1.size(); ++i) CHECK(g2[i] == Approx(g1[i] / 4.0));
  CHECK(laplacian_lift(two, q, ps) == Approx(laplacian_lift(one, q, ps) / 4.0));
  CHECK(laplacian_lift(one, q, ps) == Approx(-2.0 * std::cos(0.8)));
}

TEST_CASE("shape errors") {
  const ManifoldSpec s = two_fibers();
  CHECK_THROWS_AS((void)riemann_mwp(s, two_fiber_point(), LiftedField::fiber(0, {1.0}), LiftedField::base({1.0}),
                                    LiftedField::base({1.0})),
                  ShapeError);
}
