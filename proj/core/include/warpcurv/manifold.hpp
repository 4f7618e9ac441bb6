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

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "warpcurv/chart.hpp"
#include "warpcurv/scalar_field.hpp"

namespace warpcurv {

/// Query points must sit at least this far inside an interval endpoint.
inline constexpr double kInteriorMargin = 1e-12;

/// Open interval (t1, t2); either end may be infinite.
struct Interval {
  double t1 = -std::numeric_limits<double>::infinity();
  double t2 = std::numeric_limits<double>::infinity();

  [[nodiscard]] bool contains(double t) const {
    return t > t1 + kInteriorMargin && t < t2 - kInteriorMargin;
  }
  void validate() const;
};

enum class CurvatureModel { euclidean, sphere, hyperbolic, generic };

/// A Riemannian factor F_i with its coordinate metric g_{F_i}.
///
/// Sphere and hyperbolic fibers use geodesic-polar charts
///   R^2 (dx0^2 + S(x0)^2 (dx1^2 + sin^2 x1 (dx2^2 + ...)))
/// with S = sin (sphere) or sinh (hyperbolic); the constant-curvature tag
/// enables the closed-form fiber curvature. Charts are singular where any
/// sine factor vanishes; guard bands keep sampled points away from there.
class FiberSpec {
 public:
  static FiberSpec euclidean(int dim);
  static FiberSpec sphere(int dim, double radius = 1.0);
  static FiberSpec hyperbolic(int dim, double radius = 1.0);
  // (1 - 2m/r)^{-1} dr^2 + r^2 (dθ^2 + sin^2 θ dφ^2) on (2m, ∞) × S^2.
  static FiberSpec schwarzschild_spatial(double mass);
  // Library-only fiber with a user metric; sampler draws chart points.
  using Sampler = std::function<std::vector<double>(std::mt19937_64&)>;
  static FiberSpec custom(int dim, CoordinateChart::MetricFn metric, std::string name = "custom",
                          Sampler sampler = {});

  [[nodiscard]] int dim() const { return chart_.dim; }
  [[nodiscard]] CurvatureModel model() const { return model_; }
  [[nodiscard]] const std::string& model_name() const { return name_; }
  [[nodiscard]] double radius() const { return radius_; }
  [[nodiscard]] const std::map<std::string, double>& params() const { return params_; }
  [[nodiscard]] const CoordinateChart& chart() const { return chart_; }

  // k with R_F(V,W)U = k [g_F(W,U) V - g_F(V,U) W], when the tag provides it.
  [[nodiscard]] std::optional<double> constant_curvature() const;

  [[nodiscard]] Eigen::MatrixXd metric(std::span<const double> x) const { return chart_.metric(x); }
  // Throws DomainError outside the chart's regular region.
  void check_domain(std::span<const double> x) const;
  // Random chart point inside the guard bands.
  [[nodiscard]] std::vector<double> sample_point(std::mt19937_64& rng) const;
  // Metric is symmetric positive definite at x (eigenvalues > 1e-10).
  [[nodiscard]] bool metric_is_riemannian(std::span<const double> x) const;

 private:
  CoordinateChart chart_;
  CurvatureModel model_ = CurvatureModel::generic;
  std::string name_;
  double radius_ = 1.0;
  std::map<std::string, double> params_;
  Sampler sampler_;
};

/// Guard bands for singular charts.
inline constexpr double kAngleGuard = 0.1;           // θ ∈ [0.1, π − 0.1]
inline constexpr double kHorizonGuardFactor = 1.01;  // r ≥ 2m · 1.01

enum class ManifoldKind { mgrw, grw, kasner, ssst, generic };

std::string to_string(ManifoldKind kind);
ManifoldKind kind_from_string(const std::string& name);

/// Declarative description of a (multiply) warped product.
///
///  - mgrw/grw/kasner:  -dt^2 ⊕ Σ b_i(t)^2 g_{F_i} on base interval I.
///  - ssst:             -f(x)^2 dt^2 ⊕ g_F with the static potential f stored
///                      as warpings[0], a field on the fiber chart.
///  - generic:          g_B ⊕ Σ b_i(x_B)^2 g_{F_i} over an arbitrary base chart.
struct ManifoldSpec {
  ManifoldKind kind = ManifoldKind::mgrw;
  Interval base;
  std::optional<CoordinateChart> base_chart;
  std::vector<ScalarField> warpings;
  std::vector<FiberSpec> fibers;
  std::vector<double> kasner_exponents;
  std::optional<ScalarField> kasner_scale;

  static ManifoldSpec mgrw(Interval base, std::vector<ScalarField> warpings,
                           std::vector<FiberSpec> fibers);
  static ManifoldSpec grw(Interval base, ScalarField warping, FiberSpec fiber);
  static ManifoldSpec kasner(Interval base, ScalarField scale, std::vector<double> exponents,
                             std::vector<FiberSpec> fibers);
  static ManifoldSpec ssst(Interval base, ScalarField potential, FiberSpec fiber);
  static ManifoldSpec generic(CoordinateChart base_chart, std::vector<ScalarField> warpings,
                              std::vector<FiberSpec> fibers);

  // Throws ValidationError on the first violated invariant.
  void validate() const;

  [[nodiscard]] int base_dim() const;
  [[nodiscard]] int fiber_count() const { return static_cast<int>(fibers.size()); }
  [[nodiscard]] int dimension() const;
  [[nodiscard]] bool interval_base() const { return kind != ManifoldKind::generic; }
};

/// A point in product coordinates.
struct Point {
  std::vector<double> base;
  std::vector<std::vector<double>> fibers;

  static Point at(double t, std::vector<std::vector<double>> fiber_coords) {
    return {{t}, std::move(fiber_coords)};
  }
  [[nodiscard]] double t() const { return base.at(0); }
};

/// A tangent vector split into a base part and one part per fiber. A lift of
/// a base (fiber) vector is a TangentVector whose other blocks are zero.
struct TangentVector {
  std::vector<double> base;
  std::vector<std::vector<double>> fibers;

  TangentVector& operator+=(const TangentVector& o);
  TangentVector& operator*=(double c);
  [[nodiscard]] bool same_shape(const TangentVector& o) const;
};

TangentVector operator+(TangentVector a, const TangentVector& b);
TangentVector operator-(TangentVector a, const TangentVector& b);
TangentVector operator*(double c, TangentVector v);

/// Degenerate plane span{L, S} at a point, normalized against frame_U.
struct NullPlane {
  Point point;
  TangentVector L;
  TangentVector S;
  TangentVector frame_U;
  double g_LL = 0.0;
  double g_SS = 0.0;
  double g_LS = 0.0;
  double g_LU = 0.0;

  // Plane discriminant Q(L,S) = g(L,L) g(S,S) - g(L,S)^2.
  [[nodiscard]] double discriminant() const { return g_LL * g_SS - g_LS * g_LS; }
};

// Shape and domain checks for points and vectors.
void validate_point(const ManifoldSpec& spec, const Point& p);
void validate_vector(const ManifoldSpec& spec, const TangentVector& v);

TangentVector zero_vector(const ManifoldSpec& spec);
// ∂_t for interval-based kinds, the first base coordinate field otherwise.
TangentVector time_direction(const ManifoldSpec& spec);
// Lift of a single-fiber vector.
TangentVector fiber_lift(const ManifoldSpec& spec, int fiber, std::vector<double> components);
TangentVector base_lift(const ManifoldSpec& spec, std::vector<double> components);

/// g_p(X, Y) assembled from the factor metrics and warping functions.
double metric_eval(const ManifoldSpec& spec, const Point& p, const TangentVector& X,
                   const TangentVector& Y);

/// Value of the warping function b_i at p (for SSST: f at the fiber point).
double warping_value(const ManifoldSpec& spec, const Point& p, int i);

/// Flattened (1 + Σ s_i)-dimensional chart: base coordinates first, then
/// each fiber's coordinates in order.
CoordinateChart assemble_chart(const ManifoldSpec& spec);
std::vector<double> flatten(const Point& p);
std::vector<double> flatten(const TangentVector& v);
TangentVector split(std::span<const double> components, const ManifoldSpec& spec);
Point split_point(std::span<const double> coordinates, const ManifoldSpec& spec);

}  // namespace warpcurv
