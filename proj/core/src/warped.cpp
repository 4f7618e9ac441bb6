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


#include "warpcurv/warped.hpp"

#include <cmath>
#include <utility>

#include "warpcurv/errors.hpp"

namespace warpcurv {
namespace {

Eigen::VectorXd as_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<double> as_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

bool all_zero(const std::vector<double>& v) {
  for (double x : v)
    if (x != 0.0) return false;
  return true;
}

// R^l_{ijk} = k (g_jk δ^l_i − g_ik δ^l_j)
Tensor4 constant_curvature_tensor(const Eigen::MatrixXd& g, double k) {
  const int n = static_cast<int>(g.rows());
  Tensor4 R(n);
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int m = 0; m < n; ++m) {
          double v = 0.0;
          if (l == i) v += g(j, m);
          if (l == j) v -= g(i, m);
          R(l, i, j, m) = k * v;
        }
  return R;
}

Eigen::VectorXd apply_riemann(const Tensor4& R, const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                              const Eigen::VectorXd& c) {
  const int n = R.size();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double abc = a(i) * b(j) * c(k);
        if (abc == 0.0) continue;
        for (int l = 0; l < n; ++l) out(l) += abc * R(l, i, j, k);
      }
  return out;
}

Eigen::VectorXd apply_gamma(const Tensor3& G, const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const int n = G.size();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(k) += G(k, i, j) * a(i) * b(j);
  return out;
}

}  // namespace

IntervalReductions interval_reductions(const Jet& b) {
  IntervalReductions r;
  r.gradient = -b.first;
  r.norm_squared = -b.first * b.first;
  r.hessian = b.second;
  r.laplacian = -b.second;
  r.nabla_gradient = -b.second;
  return r;
}

CaseDispatch classify(Factor a, Factor b, Factor c) {
  using C = CurvatureCase;
  const bool A = a.is_base(), B = b.is_base(), Cb = c.is_base();
  if (A && B && Cb) return {C::base_only};
  if (!A && B && Cb) return {C::fiber_base_base};
  if (A && !B && Cb) return {C::fiber_base_base, true};
  if (A && B && !Cb) return {C::base_base_fiber};
  if (!A && !B && Cb) return a.index == b.index ? CaseDispatch{C::same_fiber_base}
                                                : CaseDispatch{C::mixed_distinct};
  if (A && !B && !Cb) return b.index == c.index ? CaseDispatch{C::base_fiber_fiber}
                                                : CaseDispatch{C::mixed_distinct};
  if (!A && B && !Cb) return a.index == c.index ? CaseDispatch{C::base_fiber_fiber, true}
                                                : CaseDispatch{C::mixed_distinct};
  // three fiber slots
  if (a.index == b.index && b.index == c.index) return {C::single_fiber};
  if (a.index == b.index) return {C::same_fiber_other};
  if (b.index == c.index) return {C::cross_fiber};
  if (a.index == c.index) return {C::cross_fiber, true};
  return {C::same_fiber_other, false, true};
}

std::vector<LiftedField> decompose(const TangentVector& v) {
  std::vector<LiftedField> out;
  if (!all_zero(v.base)) out.push_back(LiftedField::base(v.base));
  for (std::size_t i = 0; i < v.fibers.size(); ++i) {
    if (!all_zero(v.fibers[i])) out.push_back(LiftedField::fiber(static_cast<int>(i), v.fibers[i]));
  }
  return out;
}

TangentVector to_vector(const ManifoldSpec& spec, const LiftedField& field) {
  return field.origin.is_base() ? base_lift(spec, field.components)
                                : fiber_lift(spec, field.origin.index, field.components);
}

namespace {

void check_lift(const ManifoldSpec& spec, const LiftedField& f) {
  if (!f.origin.is_base() && (f.origin.index < 0 || f.origin.index >= spec.fiber_count())) {
    throw ShapeError("lifted field refers to fiber " + std::to_string(f.origin.index) +
                     " of a manifold with " + std::to_string(spec.fiber_count()));
  }
  const int dim = f.origin.is_base() ? spec.base_dim()
                                     : spec.fibers[static_cast<std::size_t>(f.origin.index)].dim();
  if (static_cast<int>(f.components.size()) != dim) {
    throw ShapeError("lifted field has the wrong number of components");
  }
}

}  // namespace

// ------------------------------------------------------------ geometry

WarpedGeometry::WarpedGeometry(const ManifoldSpec& spec, const Point& p)
    : spec_(&spec), point_(p), swapped_(spec.kind == ManifoldKind::ssst) {
  validate_point(spec, p);

  auto chart_block = [](const CoordinateChart& chart, const std::vector<double>& x,
                        std::optional<double> k) {
    Block b;
    b.dim = chart.dim;
    if (k) {
      b.g = chart.metric(x);
      b.gamma = christoffel(chart, x);
      b.riemann = constant_curvature_tensor(b.g, *k);
      b.ricci = (b.dim - 1) * (*k) * b.g;
    } else {
      const CurvatureTensors c = riemann_oracle(chart, x);
      b.g = c.jet.g;
      b.gamma = c.gamma;
      b.riemann = c.riemann;
      b.ricci = c.ricci;
    }
    return b;
  };
  // One-dimensional −dt² line: flat, no connection.
  auto time_line = [] {
    Block b;
    b.dim = 1;
    b.g = Eigen::MatrixXd::Constant(1, 1, -1.0);
    b.gamma = Tensor3(1);
    b.riemann = Tensor4(1);
    b.ricci = Eigen::MatrixXd::Zero(1, 1);
    return b;
  };

  if (swapped_) {
    const FiberSpec& F = spec.fibers[0];
    base_ = chart_block(F.chart(), p.fibers[0], F.constant_curvature());
    fibers_.push_back(time_line());

    const ScalarField& f = spec.warpings[0];
    Warp w;
    std::vector<HyperDual> h(p.fibers[0].begin(), p.fibers[0].end());
    w.value = f(h).v;
    const Eigen::VectorXd grad = gradient_oracle(F.chart(), p.fibers[0], f);
    w.gradient = grad;
    w.differential = base_.g * grad;
    w.hessian = hessian_oracle(F.chart(), p.fibers[0], f);
    w.laplacian = (base_.g.inverse().cwiseProduct(w.hessian)).sum();
    w.norm_squared = w.differential.dot(grad);
    warps_.push_back(std::move(w));
    return;
  }

  for (const auto& F : spec.fibers) {
    const auto i = static_cast<std::size_t>(&F - spec.fibers.data());
    fibers_.push_back(chart_block(F.chart(), p.fibers[i], F.constant_curvature()));
  }

  if (spec.kind == ManifoldKind::generic) {
    base_ = chart_block(*spec.base_chart, p.base, std::nullopt);
    const Eigen::MatrixXd ginv = base_.g.inverse();
    for (const auto& b : spec.warpings) {
      Warp w;
      w.value = b.value(p.base);
      w.gradient = gradient_oracle(*spec.base_chart, p.base, b);
      w.differential = base_.g * w.gradient;
      w.hessian = hessian_oracle(*spec.base_chart, p.base, b);
      w.laplacian = (ginv.cwiseProduct(w.hessian)).sum();
      w.norm_squared = w.differential.dot(w.gradient);
      warps_.push_back(std::move(w));
    }
    return;
  }

  base_ = time_line();
  for (const auto& b : spec.warpings) {
    const Jet j = b.jet(p.t());
    const IntervalReductions r = interval_reductions(j);
    Warp w;
    w.value = j.value;
    w.differential = Eigen::VectorXd::Constant(1, j.first);
    w.gradient = Eigen::VectorXd::Constant(1, r.gradient);
    w.hessian = Eigen::MatrixXd::Constant(1, 1, r.hessian);
    w.laplacian = r.laplacian;
    w.norm_squared = r.norm_squared;
    warps_.push_back(std::move(w));
  }
}

int WarpedGeometry::canonical_block(const Factor& f) const {
  if (!swapped_) return f.is_base() ? 0 : 1 + f.index;
  return f.is_base() ? 1 : 0;
}

WarpedGeometry::CVec WarpedGeometry::zero_canonical() const {
  CVec c;
  c.push_back(Eigen::VectorXd::Zero(base_.dim));
  for (const auto& f : fibers_) c.push_back(Eigen::VectorXd::Zero(f.dim));
  return c;
}

WarpedGeometry::CVec WarpedGeometry::to_canonical(const TangentVector& v) const {
  validate_vector(*spec_, v);
  if (swapped_) return {as_vector(v.fibers[0]), as_vector(v.base)};
  CVec c{as_vector(v.base)};
  for (const auto& f : v.fibers) c.push_back(as_vector(f));
  return c;
}

TangentVector WarpedGeometry::from_canonical(const CVec& c) const {
  TangentVector v;
  if (swapped_) {
    v.base = as_std(c[1]);
    v.fibers = {as_std(c[0])};
    return v;
  }
  v.base = as_std(c[0]);
  for (std::size_t i = 1; i < c.size(); ++i) v.fibers.push_back(as_std(c[i]));
  return v;
}

double WarpedGeometry::fiber_inner(int i, const Eigen::VectorXd& v, const Eigen::VectorXd& w) const {
  const double b = warps_[static_cast<std::size_t>(i)].value;
  return b * b * v.dot(fibers_[static_cast<std::size_t>(i)].g * w);
}

double WarpedGeometry::cmetric(const CVec& x, const CVec& y) const {
  double s = x[0].dot(base_.g * y[0]);
  for (std::size_t i = 0; i < fibers_.size(); ++i)
    s += fiber_inner(static_cast<int>(i), x[i + 1], y[i + 1]);
  return s;
}

double WarpedGeometry::metric(const TangentVector& x, const TangentVector& y) const {
  return cmetric(to_canonical(x), to_canonical(y));
}

TangentVector WarpedGeometry::covariant_derivative(const LiftedField& a, const LiftedField& b) const {
  check_lift(*spec_, a);
  check_lift(*spec_, b);
  const int ba = canonical_block(a.origin);
  const int bb = canonical_block(b.origin);
  const Eigen::VectorXd va = as_vector(a.components);
  const Eigen::VectorXd vb = as_vector(b.components);
  CVec out = zero_canonical();

  if (ba == 0 && bb == 0) {
    out[0] = apply_gamma(base_.gamma, va, vb);
  } else if (ba == 0 || bb == 0) {
    // ∇_X V = ∇_V X = (X(b_i)/b_i) V
    const int fb = ba == 0 ? bb : ba;
    const Eigen::VectorXd& X = ba == 0 ? va : vb;
    const Eigen::VectorXd& V = ba == 0 ? vb : va;
    const Warp& w = warps_[static_cast<std::size_t>(fb - 1)];
    out[static_cast<std::size_t>(fb)] = (w.differential.dot(X) / w.value) * V;
  } else if (ba == bb) {
    // ∇^{F_i}_V W − (g(V,W)/b_i) grad_B b_i
    const int i = ba - 1;
    const Warp& w = warps_[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(ba)] = apply_gamma(fibers_[static_cast<std::size_t>(i)].gamma, va, vb);
    out[0] = -(fiber_inner(i, va, vb) / w.value) * w.gradient;
  }
  return from_canonical(out);
}

WarpedGeometry::CVec WarpedGeometry::curvature_canonical(int ba, const Eigen::VectorXd& a, int bb,
                                                         const Eigen::VectorXd& b, int bc,
                                                         const Eigen::VectorXd& c,
                                                         CaseDispatch* dispatch) const {
  auto factor = [](int blk) { return blk == 0 ? Factor::base() : Factor::fiber(blk - 1); };
  const CaseDispatch d = classify(factor(ba), factor(bb), factor(bc));
  if (dispatch) *dispatch = d;
  if (d.negated) {
    CVec out = curvature_canonical(bb, b, ba, a, bc, c, nullptr);
    for (auto& blk : out) blk = -blk;
    return out;
  }

  CVec out = zero_canonical();
  auto warp = [this](int blk) -> const Warp& { return warps_[static_cast<std::size_t>(blk - 1)]; };
  switch (d.which) {
    case CurvatureCase::base_only:
      out[0] = apply_riemann(base_.riemann, a, b, c);
      break;
    case CurvatureCase::fiber_base_base: {
      // R(V,X)Y = −H_B^{b_i}(X,Y)/b_i V
      const Warp& w = warp(ba);
      out[static_cast<std::size_t>(ba)] = -(b.dot(w.hessian * c) / w.value) * a;
      break;
    }
    case CurvatureCase::base_fiber_fiber: {
      // R(X,V)W = −g(V,W)/b_i ∇^B_X grad_B b_i,  ∇_X grad b = g_B^{-1} H X
      const Warp& w = warp(bb);
      const Eigen::VectorXd nabla = base_.g.inverse() * (w.hessian * a);
      out[0] = -(fiber_inner(bb - 1, b, c) / w.value) * nabla;
      break;
    }
    case CurvatureCase::cross_fiber: {
      // R(U,V)W = −g(V,W) g_B(grad b_i, grad b_k)/(b_i b_k) U, U ∈ F_k, V,W ∈ F_i
      const Warp& wk = warp(ba);
      const Warp& wi = warp(bb);
      const double cross = wi.differential.dot(wk.gradient);
      out[static_cast<std::size_t>(ba)] =
          -(fiber_inner(bb - 1, b, c) * cross / (wi.value * wk.value)) * a;
      break;
    }
    case CurvatureCase::single_fiber: {
      // R_{F_i}(V,W)U + ‖grad b_i‖²/b_i² (g(V,U)W − g(W,U)V)
      const int i = ba - 1;
      const Warp& w = warp(ba);
      const double coef = w.norm_squared / (w.value * w.value);
      out[static_cast<std::size_t>(ba)] =
          apply_riemann(fibers_[static_cast<std::size_t>(i)].riemann, a, b, c) +
          coef * (fiber_inner(i, a, c) * b - fiber_inner(i, b, c) * a);
      break;
    }
    case CurvatureCase::mixed_distinct:
    case CurvatureCase::base_base_fiber:
    case CurvatureCase::same_fiber_base:
    case CurvatureCase::same_fiber_other:
      break;
  }
  return out;
}

TangentVector WarpedGeometry::curvature(const LiftedField& a, const LiftedField& b,
                                        const LiftedField& c, CaseDispatch* dispatch) const {
  for (const LiftedField* f : {&a, &b, &c}) check_lift(*spec_, *f);
  CaseDispatch local{};
  CVec out = curvature_canonical(canonical_block(a.origin), as_vector(a.components),
                                 canonical_block(b.origin), as_vector(b.components),
                                 canonical_block(c.origin), as_vector(c.components), &local);
  if (dispatch) {
    // Report the dispatch in the caller's (spec-level) factor labels.
    *dispatch = classify(a.origin, b.origin, c.origin);
  }
  return from_canonical(out);
}

TangentVector WarpedGeometry::curvature(const TangentVector& x, const TangentVector& y,
                                        const TangentVector& z) const {
  validate_vector(*spec_, x);
  validate_vector(*spec_, y);
  validate_vector(*spec_, z);
  TangentVector acc = zero_vector(*spec_);
  const auto lx = decompose(x), ly = decompose(y), lz = decompose(z);
  for (const auto& a : lx)
    for (const auto& b : ly)
      for (const auto& c : lz) acc += curvature(a, b, c);
  return acc;
}

double WarpedGeometry::curvature_form(const TangentVector& x, const TangentVector& y,
                                      const TangentVector& z, const TangentVector& w) const {
  return metric(curvature(x, y, z), w);
}

double WarpedGeometry::ricci_canonical(int ba, const Eigen::VectorXd& a, int bb,
                                       const Eigen::VectorXd& b) const {
  if (ba == 0 && bb == 0) {
    // Ric_B(X,Y) − Σ s_i/b_i H_B^{b_i}(X,Y)
    double r = a.dot(base_.ricci * b);
    for (std::size_t i = 0; i < warps_.size(); ++i) {
      r -= fibers_[i].dim / warps_[i].value * a.dot(warps_[i].hessian * b);
    }
    return r;
  }
  if (ba == 0 || bb == 0 || ba != bb) return 0.0;

  const auto i = static_cast<std::size_t>(ba - 1);
  const Warp& w = warps_[i];
  const int s = fibers_[i].dim;
  double coef = w.laplacian / w.value + (s - 1) * w.norm_squared / (w.value * w.value);
  for (std::size_t k = 0; k < warps_.size(); ++k) {
    if (k == i) continue;
    coef += fibers_[k].dim * w.differential.dot(warps_[k].gradient) / (w.value * warps_[k].value);
  }
  return a.dot(fibers_[i].ricci * b) - coef * fiber_inner(static_cast<int>(i), a, b);
}

double WarpedGeometry::ricci(const LiftedField& a, const LiftedField& b) const {
  check_lift(*spec_, a);
  check_lift(*spec_, b);
  return ricci_canonical(canonical_block(a.origin), as_vector(a.components),
                         canonical_block(b.origin), as_vector(b.components));
}

double WarpedGeometry::ricci(const TangentVector& x, const TangentVector& y) const {
  validate_vector(*spec_, x);
  validate_vector(*spec_, y);
  double r = 0.0;
  for (const auto& a : decompose(x))
    for (const auto& b : decompose(y)) r += ricci(a, b);
  return r;
}

TangentVector WarpedGeometry::gradient(const LiftedScalar& s) const {
  const int blk = canonical_block(s.origin);
  const std::vector<double>& x =
      s.origin.is_base() ? point_.base : point_.fibers.at(static_cast<std::size_t>(s.origin.index));
  CVec out = zero_canonical();
  const auto ub = static_cast<std::size_t>(blk);

  // Differential of the scalar in its own factor coordinates.
  Eigen::VectorXd d(static_cast<Eigen::Index>(x.size()));
  for (std::size_t a = 0; a < x.size(); ++a) {
    std::vector<HyperDual> h(x.begin(), x.end());
    h[a].d1 = 1.0;
    d(static_cast<Eigen::Index>(a)) = s.field(h).d1;
  }
  const Block& B = blk == 0 ? base_ : fibers_[ub - 1];
  Eigen::VectorXd g = B.g.inverse() * d;
  if (blk != 0) {
    const double b = warps_[ub - 1].value;
    g /= b * b;
  }
  out[ub] = g;
  return from_canonical(out);
}

double WarpedGeometry::laplacian(const LiftedScalar& s) const {
  const int blk = canonical_block(s.origin);
  const std::vector<double>& x =
      s.origin.is_base() ? point_.base : point_.fibers.at(static_cast<std::size_t>(s.origin.index));
  const auto ub = static_cast<std::size_t>(blk);
  const Block& B = blk == 0 ? base_ : fibers_[ub - 1];
  const int n = B.dim;

  Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
  Eigen::MatrixXd dd = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int c = a; c < n; ++c) {
      std::vector<HyperDual> h(x.begin(), x.end());
      h[static_cast<std::size_t>(a)].d1 = 1.0;
      h[static_cast<std::size_t>(c)].d2 = 1.0;
      const HyperDual r = s.field(h);
      if (a == c) d(a) = r.d1;
      dd(a, c) = dd(c, a) = r.d12;
    }
  Eigen::MatrixXd H = dd;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) H(i, j) -= B.gamma(k, i, j) * d(k);
  const Eigen::MatrixXd ginv = B.g.inverse();
  const double own = (ginv.cwiseProduct(H)).sum();

  if (blk != 0) {
    const double b = warps_[ub - 1].value;
    return own / (b * b);
  }
  // Δ_B φ + Σ s_i g_B(grad_B φ, grad_B b_i)/b_i
  double lap = own;
  const Eigen::VectorXd grad = ginv * d;
  for (std::size_t i = 0; i < warps_.size(); ++i) {
    lap += fibers_[i].dim * warps_[i].differential.dot(grad) / warps_[i].value;
  }
  return lap;
}

// ------------------------------------------------------- free functions

TangentVector covariant_derivative(const ManifoldSpec& spec, const Point& p, const LiftedField& a,
                                   const LiftedField& b) {
  return WarpedGeometry(spec, p).covariant_derivative(a, b);
}

TangentVector gradient_lift(const ManifoldSpec& spec, const Point& p, const LiftedScalar& s) {
  return WarpedGeometry(spec, p).gradient(s);
}

double laplacian_lift(const ManifoldSpec& spec, const Point& p, const LiftedScalar& s) {
  return WarpedGeometry(spec, p).laplacian(s);
}

TangentVector riemann_mwp(const ManifoldSpec& spec, const Point& p, const LiftedField& a,
                          const LiftedField& b, const LiftedField& c) {
  return WarpedGeometry(spec, p).curvature(a, b, c);
}

double ricci_mwp(const ManifoldSpec& spec, const Point& p, const LiftedField& a,
                 const LiftedField& b) {
  return WarpedGeometry(spec, p).ricci(a, b);
}

namespace {
std::vector<TangentVector> coordinate_basis(const ManifoldSpec& spec) {
  const int n = spec.dimension();
  std::vector<TangentVector> basis;
  for (int k = 0; k < n; ++k) {
    std::vector<double> e(static_cast<std::size_t>(n), 0.0);
    e[static_cast<std::size_t>(k)] = 1.0;
    basis.push_back(split(e, spec));
  }
  return basis;
}
}  // namespace

Eigen::MatrixXd ricci_components(const ManifoldSpec& spec, const Point& p) {
  const WarpedGeometry G(spec, p);
  const auto basis = coordinate_basis(spec);
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd R(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      R(i, j) = G.ricci(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
  return R;
}

Eigen::MatrixXd metric_components(const ManifoldSpec& spec, const Point& p) {
  const auto basis = coordinate_basis(spec);
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      g(i, j) = metric_eval(spec, p, basis[static_cast<std::size_t>(i)],
                            basis[static_cast<std::size_t>(j)]);
  return g;
}

}  // namespace warpcurv
