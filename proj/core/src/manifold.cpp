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


#include "warpcurv/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "warpcurv/errors.hpp"

namespace warpcurv {
namespace {

constexpr double kPi = std::numbers::pi;

// Geodesic-polar chart R^2 (dx0^2 + S(x0)^2 dΩ^2) shared by sphere and
// hyperbolic fibers. S = sin or sinh.
CoordinateChart polar_chart(int dim, double radius, bool hyperbolic) {
  CoordinateChart chart;
  chart.dim = dim;
  chart.metric_at = [dim, radius, hyperbolic](std::span<const HyperDual> x) {
    HdMatrix g(dim);
    const HyperDual r2(radius * radius);
    HyperDual warp(1.0);
    g(0, 0) = r2;
    for (int j = 1; j < dim; ++j) {
      const HyperDual s = j == 1 ? (hyperbolic ? sinh(x[0]) : sin(x[0])) : sin(x[j - 1]);
      warp = warp * s * s;
      g(j, j) = r2 * warp;
    }
    return g;
  };
  return chart;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

void sample_angles(std::mt19937_64& rng, std::vector<double>& x, int first) {
  const int dim = static_cast<int>(x.size());
  for (int j = first; j < dim; ++j) {
    x[static_cast<std::size_t>(j)] =
        j == dim - 1 ? uniform(rng, 0.0, 2.0 * kPi) : uniform(rng, kAngleGuard, kPi - kAngleGuard);
  }
}

void require_open_angle(double a, const char* what) {
  if (!(a > 0.0 && a < kPi)) {
    throw DomainError(std::string(what) + " coordinate " + std::to_string(a) +
                      " lies on a chart singularity (needs 0 < θ < π)");
  }
}

double dot_block(const Eigen::MatrixXd& g, const std::vector<double>& a,
                 const std::vector<double>& b) {
  double acc = 0.0;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      acc += a[static_cast<std::size_t>(i)] * g(i, j) * b[static_cast<std::size_t>(j)];
  return acc;
}

}  // namespace

void Interval::validate() const {
  if (std::isnan(t1) || std::isnan(t2) || !(t1 < t2)) {
    throw ValidationError("base interval needs t1 < t2");
  }
}

// ---------------------------------------------------------------- fibers

FiberSpec FiberSpec::euclidean(int dim) {
  if (dim < 1) throw ValidationError("fiber dimension must be positive");
  FiberSpec f;
  f.chart_.dim = dim;
  f.chart_.metric_at = [dim](std::span<const HyperDual>) {
    HdMatrix g(dim);
    for (int i = 0; i < dim; ++i) g(i, i) = HyperDual(1.0);
    return g;
  };
  f.model_ = CurvatureModel::euclidean;
  f.name_ = "euclidean";
  return f;
}

FiberSpec FiberSpec::sphere(int dim, double radius) {
  if (dim < 1) throw ValidationError("fiber dimension must be positive");
  if (!(radius > 0.0)) throw ValidationError("sphere radius must be positive");
  FiberSpec f;
  f.chart_ = polar_chart(dim, radius, false);
  f.model_ = CurvatureModel::sphere;
  f.name_ = "sphere";
  f.radius_ = radius;
  return f;
}

FiberSpec FiberSpec::hyperbolic(int dim, double radius) {
  if (dim < 1) throw ValidationError("fiber dimension must be positive");
  if (!(radius > 0.0)) throw ValidationError("hyperbolic radius must be positive");
  FiberSpec f;
  f.chart_ = polar_chart(dim, radius, true);
  f.model_ = CurvatureModel::hyperbolic;
  f.name_ = "hyperbolic";
  f.radius_ = radius;
  return f;
}

FiberSpec FiberSpec::schwarzschild_spatial(double mass) {
  if (!(mass > 0.0)) throw ValidationError("schwarzschild mass must be positive");
  FiberSpec f;
  f.chart_.dim = 3;
  f.chart_.metric_at = [mass](std::span<const HyperDual> x) {
    HdMatrix g(3);
    const HyperDual& r = x[0];
    g(0, 0) = reciprocal(HyperDual(1.0) - HyperDual(2.0 * mass) / r);
    g(1, 1) = r * r;
    const HyperDual s = sin(x[1]);
    g(2, 2) = r * r * s * s;
    return g;
  };
  f.model_ = CurvatureModel::generic;
  f.name_ = "schwarzschild_spatial";
  f.params_ = {{"mass", mass}};
  return f;
}

FiberSpec FiberSpec::custom(int dim, CoordinateChart::MetricFn metric, std::string name,
                            Sampler sampler) {
  if (dim < 1) throw ValidationError("fiber dimension must be positive");
  if (!metric) throw ValidationError("custom fiber needs a metric evaluator");
  FiberSpec f;
  f.chart_.dim = dim;
  f.chart_.metric_at = std::move(metric);
  f.model_ = CurvatureModel::generic;
  f.name_ = std::move(name);
  f.sampler_ = std::move(sampler);
  return f;
}

std::optional<double> FiberSpec::constant_curvature() const {
  switch (model_) {
    case CurvatureModel::euclidean: return 0.0;
    case CurvatureModel::sphere: return 1.0 / (radius_ * radius_);
    case CurvatureModel::hyperbolic: return -1.0 / (radius_ * radius_);
    case CurvatureModel::generic: return std::nullopt;
  }
  return std::nullopt;
}

void FiberSpec::check_domain(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim()) {
    throw ShapeError("fiber point has " + std::to_string(x.size()) + " coordinates, expected " +
                     std::to_string(dim()));
  }
  for (double c : x) {
    if (!std::isfinite(c)) throw DomainError("non-finite fiber coordinate");
  }
  switch (model_) {
    case CurvatureModel::euclidean: return;
    case CurvatureModel::sphere:
      for (int j = 0; j + 1 < dim(); ++j) require_open_angle(x[static_cast<std::size_t>(j)], "sphere");
      return;
    case CurvatureModel::hyperbolic:
      if (dim() > 1 && !(x[0] > 0.0)) {
        throw DomainError("hyperbolic radial coordinate must be positive");
      }
      for (int j = 1; j + 1 < dim(); ++j) require_open_angle(x[static_cast<std::size_t>(j)], "hyperbolic");
      return;
    case CurvatureModel::generic:
      if (name_ == "schwarzschild_spatial") {
        if (!(x[0] > 2.0 * params_.at("mass"))) {
          throw DomainError("schwarzschild radius must exceed 2m");
        }
        require_open_angle(x[1], "schwarzschild polar");
      }
      return;
  }
}

std::vector<double> FiberSpec::sample_point(std::mt19937_64& rng) const {
  std::vector<double> x(static_cast<std::size_t>(dim()), 0.0);
  switch (model_) {
    case CurvatureModel::euclidean:
      for (auto& c : x) c = uniform(rng, -2.0, 2.0);
      break;
    case CurvatureModel::sphere:
      if (dim() == 1) {
        x[0] = uniform(rng, 0.0, 2.0 * kPi);
      } else {
        sample_angles(rng, x, 0);
      }
      break;
    case CurvatureModel::hyperbolic:
      if (dim() == 1) {
        x[0] = uniform(rng, -2.0, 2.0);
      } else {
        x[0] = uniform(rng, kAngleGuard, 2.0);
        sample_angles(rng, x, 1);
      }
      break;
    case CurvatureModel::generic:
      if (name_ == "schwarzschild_spatial") {
        const double m = params_.at("mass");
        x[0] = uniform(rng, 2.0 * m * kHorizonGuardFactor, 10.0 * m);
        sample_angles(rng, x, 1);
      } else if (sampler_) {
        x = sampler_(rng);
      } else {
        for (auto& c : x) c = uniform(rng, -1.0, 1.0);
      }
      break;
  }
  return x;
}

bool FiberSpec::metric_is_riemannian(std::span<const double> x) const {
  const Eigen::MatrixXd g = metric(x);
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, g.cwiseAbs().maxCoeff())) {
    return false;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  return es.eigenvalues().minCoeff() > 1e-10;
}

// ------------------------------------------------------------------ spec

std::string to_string(ManifoldKind kind) {
  switch (kind) {
    case ManifoldKind::mgrw: return "MGRW";
    case ManifoldKind::grw: return "GRW";
    case ManifoldKind::kasner: return "Kasner";
    case ManifoldKind::ssst: return "SSST";
    case ManifoldKind::generic: return "MultiplyWarped-generic";
  }
  return "MultiplyWarped-generic";
}

ManifoldKind kind_from_string(const std::string& name) {
  for (auto k : {ManifoldKind::mgrw, ManifoldKind::grw, ManifoldKind::kasner, ManifoldKind::ssst,
                 ManifoldKind::generic}) {
    if (to_string(k) == name) return k;
  }
  throw ValidationError("unknown manifold kind '" + name + "'");
}

ManifoldSpec ManifoldSpec::mgrw(Interval base, std::vector<ScalarField> warpings,
                                std::vector<FiberSpec> fibers) {
  ManifoldSpec s;
  s.kind = ManifoldKind::mgrw;
  s.base = base;
  s.warpings = std::move(warpings);
  s.fibers = std::move(fibers);
  s.validate();
  return s;
}

ManifoldSpec ManifoldSpec::grw(Interval base, ScalarField warping, FiberSpec fiber) {
  ManifoldSpec s;
  s.kind = ManifoldKind::grw;
  s.base = base;
  s.warpings = {std::move(warping)};
  s.fibers = {std::move(fiber)};
  s.validate();
  return s;
}

ManifoldSpec ManifoldSpec::kasner(Interval base, ScalarField scale, std::vector<double> exponents,
                                  std::vector<FiberSpec> fibers) {
  ManifoldSpec s;
  s.kind = ManifoldKind::kasner;
  s.base = base;
  for (double p : exponents) s.warpings.push_back(scale.raised(p));
  s.kasner_exponents = std::move(exponents);
  s.kasner_scale = std::move(scale);
  s.fibers = std::move(fibers);
  s.validate();
  return s;
}

ManifoldSpec ManifoldSpec::ssst(Interval base, ScalarField potential, FiberSpec fiber) {
  ManifoldSpec s;
  s.kind = ManifoldKind::ssst;
  s.base = base;
  s.warpings = {std::move(potential)};
  s.fibers = {std::move(fiber)};
  s.validate();
  return s;
}

ManifoldSpec ManifoldSpec::generic(CoordinateChart base_chart, std::vector<ScalarField> warpings,
                                   std::vector<FiberSpec> fibers) {
  ManifoldSpec s;
  s.kind = ManifoldKind::generic;
  s.base_chart = std::move(base_chart);
  s.warpings = std::move(warpings);
  s.fibers = std::move(fibers);
  s.validate();
  return s;
}

int ManifoldSpec::base_dim() const {
  return kind == ManifoldKind::generic ? base_chart->dim : 1;
}

int ManifoldSpec::dimension() const {
  int n = base_dim();
  for (const auto& f : fibers) n += f.dim();
  return n;
}

void ManifoldSpec::validate() const {
  if (fibers.empty()) throw ValidationError("a warped product needs at least one fiber");
  if (warpings.size() != fibers.size()) {
    throw ValidationError("warpings and fibers must have equal length");
  }
  if (kind == ManifoldKind::generic) {
    if (!base_chart || base_chart->dim < 1 || !base_chart->metric_at) {
      throw ValidationError("generic multiply warped product needs a base chart");
    }
  } else {
    base.validate();
  }
  if ((kind == ManifoldKind::grw || kind == ManifoldKind::ssst) && fibers.size() != 1) {
    throw ValidationError(to_string(kind) + " requires exactly one fiber");
  }
  if (kind == ManifoldKind::kasner) {
    if (!kasner_scale) throw ValidationError("Kasner spec needs the shared scale function phi");
    if (kasner_exponents.size() != fibers.size()) {
      throw ValidationError("Kasner spec needs one exponent per fiber");
    }
    for (std::size_t i = 0; i < warpings.size(); ++i) {
      const auto& w = warpings[i];
      if (w.form() != ScalarField::Form::kasner || w.exponent() != kasner_exponents[i]) {
        throw ValidationError("Kasner warping " + std::to_string(i) + " is not phi^p_i");
      }
    }
  }

  std::mt19937_64 rng(0x5eed);
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    for (int k = 0; k < 4; ++k) {
      const auto x = fibers[i].sample_point(rng);
      if (!fibers[i].metric_is_riemannian(x)) {
        throw ValidationError("fiber " + std::to_string(i) +
                              " metric is not symmetric positive definite");
      }
    }
  }

  // Positivity of the warping functions at sampled interior points.
  if (kind == ManifoldKind::ssst) {
    for (int k = 0; k < 16; ++k) {
      const auto x = fibers[0].sample_point(rng);
      if (!(warpings[0].value(x) > 0.0)) {
        throw ValidationError("static potential f must be positive on the fiber");
      }
    }
  } else if (kind != ManifoldKind::generic) {
    const double lo = std::isfinite(base.t1) ? base.t1 : std::min(-10.0, base.t2 - 20.0);
    const double hi = std::isfinite(base.t2) ? base.t2 : std::max(10.0, lo + 20.0);
    for (int k = 1; k < 18; ++k) {
      const double t = lo + (hi - lo) * k / 18.0;
      for (std::size_t i = 0; i < warpings.size(); ++i) {
        const std::vector<double> tv{t};
        if (!(warpings[i].value(tv) > 0.0)) {
          throw ValidationError("warping function " + std::to_string(i) +
                                " must be positive on the base interval (t = " +
                                std::to_string(t) + ")");
        }
      }
    }
  }
}

// -------------------------------------------------------- points/vectors

TangentVector& TangentVector::operator+=(const TangentVector& o) {
  if (!same_shape(o)) throw ShapeError("tangent vectors have different shapes");
  for (std::size_t i = 0; i < base.size(); ++i) base[i] += o.base[i];
  for (std::size_t f = 0; f < fibers.size(); ++f)
    for (std::size_t i = 0; i < fibers[f].size(); ++i) fibers[f][i] += o.fibers[f][i];
  return *this;
}

TangentVector& TangentVector::operator*=(double c) {
  for (auto& x : base) x *= c;
  for (auto& f : fibers)
    for (auto& x : f) x *= c;
  return *this;
}

bool TangentVector::same_shape(const TangentVector& o) const {
  if (base.size() != o.base.size() || fibers.size() != o.fibers.size()) return false;
  for (std::size_t f = 0; f < fibers.size(); ++f)
    if (fibers[f].size() != o.fibers[f].size()) return false;
  return true;
}

TangentVector operator+(TangentVector a, const TangentVector& b) { return a += b; }
TangentVector operator-(TangentVector a, const TangentVector& b) {
  TangentVector nb = b;
  nb *= -1.0;
  return a += nb;
}
TangentVector operator*(double c, TangentVector v) { return v *= c; }

void validate_point(const ManifoldSpec& spec, const Point& p) {
  if (static_cast<int>(p.base.size()) != spec.base_dim()) {
    throw ShapeError("point base coordinates have length " + std::to_string(p.base.size()) +
                     ", expected " + std::to_string(spec.base_dim()));
  }
  if (p.fibers.size() != spec.fibers.size()) {
    throw ShapeError("point has " + std::to_string(p.fibers.size()) + " fiber blocks, expected " +
                     std::to_string(spec.fibers.size()));
  }
  if (spec.interval_base() && !spec.base.contains(p.base[0])) {
    throw DomainError("t = " + std::to_string(p.base[0]) + " is not strictly inside the base interval");
  }
  for (std::size_t i = 0; i < spec.fibers.size(); ++i) spec.fibers[i].check_domain(p.fibers[i]);
  if (spec.kind == ManifoldKind::ssst && !(spec.warpings[0].value(p.fibers[0]) > 0.0)) {
    throw DomainError("static potential vanishes at the query point");
  }
}

void validate_vector(const ManifoldSpec& spec, const TangentVector& v) {
  if (static_cast<int>(v.base.size()) != spec.base_dim() || v.fibers.size() != spec.fibers.size()) {
    throw ShapeError("tangent vector block structure does not match the manifold");
  }
  for (std::size_t i = 0; i < spec.fibers.size(); ++i) {
    if (static_cast<int>(v.fibers[i].size()) != spec.fibers[i].dim()) {
      throw ShapeError("fiber part " + std::to_string(i) + " has length " +
                       std::to_string(v.fibers[i].size()) + ", expected " +
                       std::to_string(spec.fibers[i].dim()));
    }
  }
}

TangentVector zero_vector(const ManifoldSpec& spec) {
  TangentVector v;
  v.base.assign(static_cast<std::size_t>(spec.base_dim()), 0.0);
  for (const auto& f : spec.fibers) v.fibers.emplace_back(static_cast<std::size_t>(f.dim()), 0.0);
  return v;
}

TangentVector time_direction(const ManifoldSpec& spec) {
  TangentVector v = zero_vector(spec);
  v.base[0] = 1.0;
  return v;
}

TangentVector fiber_lift(const ManifoldSpec& spec, int fiber, std::vector<double> components) {
  TangentVector v = zero_vector(spec);
  auto& slot = v.fibers.at(static_cast<std::size_t>(fiber));
  if (components.size() != slot.size()) throw ShapeError("fiber lift has the wrong length");
  slot = std::move(components);
  return v;
}

TangentVector base_lift(const ManifoldSpec& spec, std::vector<double> components) {
  TangentVector v = zero_vector(spec);
  if (components.size() != v.base.size()) throw ShapeError("base lift has the wrong length");
  v.base = std::move(components);
  return v;
}

double warping_value(const ManifoldSpec& spec, const Point& p, int i) {
  const auto& w = spec.warpings.at(static_cast<std::size_t>(i));
  return spec.kind == ManifoldKind::ssst ? w.value(p.fibers[0]) : w.value(p.base);
}

double metric_eval(const ManifoldSpec& spec, const Point& p, const TangentVector& X,
                   const TangentVector& Y) {
  validate_point(spec, p);
  validate_vector(spec, X);
  validate_vector(spec, Y);

  double acc = 0.0;
  switch (spec.kind) {
    case ManifoldKind::ssst: {
      const double f = spec.warpings[0].value(p.fibers[0]);
      acc = -f * f * X.base[0] * Y.base[0];
      acc += dot_block(spec.fibers[0].metric(p.fibers[0]), X.fibers[0], Y.fibers[0]);
      return acc;
    }
    case ManifoldKind::generic:
      acc = dot_block(spec.base_chart->metric(p.base), X.base, Y.base);
      break;
    default:
      acc = -X.base[0] * Y.base[0];
      break;
  }
  for (std::size_t i = 0; i < spec.fibers.size(); ++i) {
    const double b = spec.warpings[i].value(p.base);
    acc += b * b * dot_block(spec.fibers[i].metric(p.fibers[i]), X.fibers[i], Y.fibers[i]);
  }
  return acc;
}

CoordinateChart assemble_chart(const ManifoldSpec& spec) {
  spec.validate();
  CoordinateChart chart;
  chart.dim = spec.dimension();
  chart.metric_at = [spec, n = chart.dim](std::span<const HyperDual> x) {
    HdMatrix g(n);
    const int nb = spec.base_dim();
    const auto xb = x.subspan(0, static_cast<std::size_t>(nb));
    int offset = nb;
    std::vector<std::span<const HyperDual>> xf;
    for (const auto& f : spec.fibers) {
      xf.push_back(x.subspan(static_cast<std::size_t>(offset), static_cast<std::size_t>(f.dim())));
      offset += f.dim();
    }

    if (spec.kind == ManifoldKind::generic) {
      const HdMatrix gb = spec.base_chart->metric_at(xb);
      for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) g(i, j) = gb(i, j);
    } else if (spec.kind == ManifoldKind::ssst) {
      const HyperDual f = spec.warpings[0](xf[0]);
      g(0, 0) = -(f * f);
    } else {
      g(0, 0) = HyperDual(-1.0);
    }

    offset = nb;
    for (std::size_t i = 0; i < spec.fibers.size(); ++i) {
      const HdMatrix gf = spec.fibers[i].chart().metric_at(xf[i]);
      HyperDual scale(1.0);
      if (spec.kind != ManifoldKind::ssst) {
        const HyperDual b = spec.warpings[i](xb);
        scale = b * b;
      }
      const int d = spec.fibers[i].dim();
      for (int a = 0; a < d; ++a)
        for (int c = 0; c < d; ++c) g(offset + a, offset + c) = scale * gf(a, c);
      offset += d;
    }
    return g;
  };
  return chart;
}

std::vector<double> flatten(const Point& p) {
  std::vector<double> out = p.base;
  for (const auto& f : p.fibers) out.insert(out.end(), f.begin(), f.end());
  return out;
}

std::vector<double> flatten(const TangentVector& v) {
  std::vector<double> out = v.base;
  for (const auto& f : v.fibers) out.insert(out.end(), f.begin(), f.end());
  return out;
}

TangentVector split(std::span<const double> c, const ManifoldSpec& spec) {
  if (static_cast<int>(c.size()) != spec.dimension()) {
    throw ShapeError("flat component tuple has length " + std::to_string(c.size()) +
                     ", expected " + std::to_string(spec.dimension()));
  }
  TangentVector v;
  auto it = c.begin();
  v.base.assign(it, it + spec.base_dim());
  it += spec.base_dim();
  for (const auto& f : spec.fibers) {
    v.fibers.emplace_back(it, it + f.dim());
    it += f.dim();
  }
  return v;
}

Point split_point(std::span<const double> c, const ManifoldSpec& spec) {
  const TangentVector v = split(c, spec);
  return {v.base, v.fibers};
}

}  // namespace warpcurv
