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


#include "warpcurv/null_sectional.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "warpcurv/errors.hpp"
#include "warpcurv/oracle.hpp"
#include "warpcurv/warped.hpp"

namespace warpcurv {
namespace {

constexpr double kPlaneTol = 1e-10;

double gm(const ManifoldSpec& spec, const Point& p, const TangentVector& a, const TangentVector& b) {
  return metric_eval(spec, p, a, b);
}

bool has_frame(const NullPlane& plane) { return !plane.frame_U.base.empty(); }

Eigen::VectorXd vec(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// Sum of |g(e_a, e_b) X^a Y^b| over blocks: the size of the terms behind g(X,Y).
double metric_magnitude(const ManifoldSpec& spec, const Point& p, const TangentVector& X,
                        const TangentVector& Y) {
  TangentVector ax = X, ay = Y;
  for (auto& c : ax.base) c = std::abs(c);
  for (auto& c : ay.base) c = std::abs(c);
  double s = std::abs(gm(spec, p, ax, ay));
  for (std::size_t i = 0; i < X.fibers.size(); ++i) {
    const Eigen::MatrixXd g = spec.fibers[i].metric(p.fibers[i]).cwiseAbs();
    double b = 1.0;
    if (spec.kind != ManifoldKind::ssst) b = warping_value(spec, p, static_cast<int>(i));
    s += b * b * vec(X.fibers[i]).cwiseAbs().dot(g * vec(Y.fibers[i]).cwiseAbs());
  }
  return s;
}

// g_F-unit vector in a uniformly random direction.
std::vector<double> random_unit(const FiberSpec& F, const std::vector<double>& x,
                                std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const int s = F.dim();
  Eigen::VectorXd z(s);
  for (int k = 0; k < s; ++k) z(k) = n(rng);
  const Eigen::MatrixXd g = F.metric(x);
  const Eigen::LLT<Eigen::MatrixXd> llt(g);
  Eigen::VectorXd v = llt.matrixU().solve(z / z.norm());
  return {v.data(), v.data() + v.size()};
}

double fiber_curvature_term(const FiberSpec& F, const std::vector<double>& x, const Eigen::VectorXd& V,
                            const Eigen::VectorXd& W) {
  const Eigen::MatrixXd g = F.metric(x);
  const double vv = V.dot(g * V), ww = W.dot(g * W), vw = V.dot(g * W);
  if (auto k = F.constant_curvature()) return *k * (vv * ww - vw * vw);
  const CurvatureTensors c = riemann_oracle(F.chart(), x);
  const std::vector<double> v(V.data(), V.data() + V.size()), w(W.data(), W.data() + W.size());
  return c.form(v, w, w, v);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

std::vector<int> fiber_dims(const ManifoldSpec& spec) {
  std::vector<int> d;
  for (const auto& f : spec.fibers) d.push_back(f.dim());
  return d;
}

void require_interval_product(const ManifoldSpec& spec, const char* who) {
  require(spec.interval_base() && spec.kind != ManifoldKind::ssst,
          std::string(who) + " needs a multiply warped spec over an interval");
}

NullCurvatureResult finish(NullCurvatureResult r, const PlaneTerms& t) {
  const double s = 1.0 / (t.null_scale * t.null_scale);
  r.numerator = 0.0;
  for (auto& term : r.breakdown) {
    term.value *= s;
    r.numerator += term.value;
  }
  r.value = r.numerator / r.denominator;
  return r;
}

// ------------------------------------------------------ derived forms

NullCurvatureResult derived_theorem(const PlaneTerms& t) {
  double wv = 0, vv = 0, ww = 0, cross = 0, curv = 0, grad = 0, den = -t.y * t.y;
  for (std::size_t i = 0; i < t.fibers.size(); ++i) {
    const auto& a = t.fibers[i];
    const double bb = a.b * a.ddb;
    wv += -t.y * bb * a.gVW;
    vv += -t.y * t.y * bb * a.gVV;
    ww += -bb * a.gWW;
    curv += a.b * a.b * a.RF;
    grad += a.b * a.b * a.db * a.db * (a.gVV * a.gWW - a.gVW * a.gVW);
    den += a.b * a.b * a.gWW;
    for (std::size_t k = 0; k < t.fibers.size(); ++k) {
      if (k == i) continue;
      const auto& c = t.fibers[k];
      cross += a.b * c.b * a.db * c.db * (a.gWW * c.gVV - c.gVW * a.gVW);
    }
  }
  NullCurvatureResult r;
  r.denominator = den;
  r.breakdown = {{"hessian_WV_a", wv}, {"hessian_VV", vv},     {"hessian_WW", ww},
                 {"hessian_WV_b", wv}, {"cross_fiber", cross}, {"fiber_curvature", curv},
                 {"fiber_gradient", grad}};
  return finish(r, t);
}

NullCurvatureResult derived_grw(const PlaneTerms& t) {
  const auto& a = t.fibers.at(0);
  const double bb = a.b * a.ddb;
  NullCurvatureResult r;
  r.denominator = -t.y * t.y + a.b * a.b * a.gWW;
  r.breakdown = {{"hessian_WW", -bb * a.gWW},
                 {"fiber_curvature", a.b * a.b * a.RF},
                 {"hessian_VV_YY", -bb * (2.0 * t.y * a.gVW + t.y * t.y * a.gVV)},
                 {"fiber_gradient", a.b * a.b * a.db * a.db * (a.gVV * a.gWW - a.gVW * a.gVW)}};
  return finish(r, t);
}

NullCurvatureResult derived_type1(const PlaneTerms& t) {
  const auto& a = t.fibers.at(0);
  const double bb = a.b * a.ddb;
  NullCurvatureResult r;
  r.denominator = -t.y * t.y + a.b * a.b * a.gWW;
  r.breakdown = {{"hessian_VV", -bb * t.y * t.y * a.gVV},
                 {"hessian_WW", -bb * a.gWW},
                 {"hessian_VW", -2.0 * t.y * bb * a.gVW},
                 {"fiber_curvature", a.b * a.b * a.RF},
                 {"fiber_gradient", a.b * a.b * a.db * a.db * (a.gVV * a.gWW - a.gVW * a.gVW)}};
  return finish(r, t);
}

NullCurvatureResult derived_type2(const PlaneTerms& t) {
  const auto& x = t.fibers.at(0);
  const auto& F = t.fibers.at(1);
  const double y = t.y;
  const double b1 = x.b * x.ddb, b2 = F.b * F.ddb;
  const double cross = x.b * F.b * x.db * F.db *
                       (x.gWW * F.gVV - F.gVW * x.gVW + F.gWW * x.gVV - x.gVW * F.gVW);
  double grad = 0.0, curv = 0.0;
  for (const auto& a : t.fibers) {
    grad += a.b * a.b * a.db * a.db * (a.gVV * a.gWW - a.gVW * a.gVW);
    curv += a.b * a.b * a.RF;
  }
  NullCurvatureResult r;
  r.denominator = -y * y + x.b * x.b * x.gWW + F.b * F.b * F.gWW;
  r.breakdown = {{"x_hessian_a", -y * b1 * x.gVW},   {"F_hessian_VV", -y * y * b2 * F.gVV},
                 {"x_hessian_hh", -b1 * x.gWW},      {"F_hessian_WW", -b2 * F.gWW},
                 {"x_hessian_b", -y * b1 * x.gVW},   {"F_hessian_VW", -2.0 * y * b2 * F.gVW},
                 {"fiber_curvature", curv},          {"fiber_gradient", grad},
                 {"x_hessian_ff", -y * y * b1 * x.gVV}, {"cross_fiber", cross}};
  return finish(r, t);
}

NullCurvatureResult derived_type3(const PlaneTerms& t) {
  double t2 = 0, t3 = 0, t4 = 0, t5 = 0, den = -t.y * t.y;
  for (std::size_t i = 0; i < t.fibers.size(); ++i) {
    const auto& a = t.fibers[i];
    const double bb = a.b * a.ddb;
    t2 += -t.y * t.y * bb * a.gVV;
    t3 += -bb * a.gWW;
    t4 += -2.0 * t.y * bb * a.gVW;
    den += a.b * a.b * a.gWW;
    for (std::size_t k = 0; k < t.fibers.size(); ++k) {
      if (k == i) continue;
      const auto& c = t.fibers[k];
      t5 += a.b * c.b * a.db * c.db * (a.gWW * c.gVV - c.gVW * a.gVW);
    }
  }
  NullCurvatureResult r;
  r.denominator = den;
  r.breakdown = {{"t1", 0.0}, {"t2", t2}, {"t3", t3}, {"t4", t4}, {"t5", t5}};
  return finish(r, t);
}

NullCurvatureResult derived_ssst(const PlaneTerms& t) {
  NullCurvatureResult r;
  r.denominator = -t.f * t.f * t.y * t.y + t.fibers.at(0).gWW;
  r.breakdown = {{"grad_f", 0.0},
                 {"hessian_VV", t.f * t.y * t.y * t.HVV},
                 {"hessian_VW_pair", 2.0 * t.y * t.HVW},
                 {"hessian_WW", t.HWW / t.f},
                 {"fiber_curvature", t.fibers.at(0).RF}};
  return finish(r, t);
}

// ------------------------------------------------------- preconditions

void require_form(NullForm form, const ManifoldSpec& spec) {
  const std::vector<int> dims = fiber_dims(spec);
  switch (form) {
    case NullForm::theorem:
    case NullForm::theorem_h:
      require_interval_product(spec, "multiply warped evaluator");
      return;
    case NullForm::grw:
      require_interval_product(spec, "GRW evaluator");
      require(spec.fiber_count() == 1, "GRW evaluator needs exactly one fiber");
      return;
    case NullForm::kasner:
      require(spec.kind == ManifoldKind::kasner, "Kasner evaluator needs a Kasner spec");
      return;
    case NullForm::type1:
      require_interval_product(spec, "type I evaluator");
      require(dims == std::vector<int>{3}, "type I evaluator needs fiber signature (3)");
      return;
    case NullForm::type2:
      require_interval_product(spec, "type II evaluator");
      require(dims == std::vector<int>{1, 2}, "type II evaluator needs fiber signature (1,2)");
      return;
    case NullForm::type3:
      require(spec.kind == ManifoldKind::kasner, "type III evaluator needs a Kasner spec");
      require(dims == std::vector<int>{1, 1, 1}, "type III evaluator needs fiber signature (1,1,1)");
      if (!kasner_constraint_holds(spec.kasner_exponents)) {
        throw ConstraintError("Kasner exponents violate p1+p2+p3 = p1^2+p2^2+p3^2 = 1");
      }
      return;
    case NullForm::ssst:
    case NullForm::ssst_h:
    case NullForm::ssst_unit:
      require(spec.kind == ManifoldKind::ssst, "static evaluator needs an SSST spec");
      return;
  }
}

NullPlane unit_spacelike(const ManifoldSpec& spec, const NullPlane& plane) {
  NullPlane q = plane;
  const double n = std::sqrt(gm(spec, plane.point, plane.S, plane.S));
  q.S = (1.0 / n) * plane.S;
  return refresh(spec, q);
}

}  // namespace

// ------------------------------------------------------------ results

std::optional<double> NullCurvatureResult::term(const std::string& name) const {
  for (const auto& t : breakdown)
    if (t.name == name) return t.value;
  return std::nullopt;
}

std::string to_string(FormulaPath path) {
  return path == FormulaPath::as_derived ? "as-derived" : "as-printed";
}

FormulaPath path_from_string(const std::string& name) {
  if (name == "as-derived") return FormulaPath::as_derived;
  if (name == "as-printed") return FormulaPath::as_printed;
  throw ValidationError("unknown formula path '" + name + "'");
}

std::string to_string(NullForm form) {
  switch (form) {
    case NullForm::theorem: return "mgrw";
    case NullForm::theorem_h: return "mgrw_h";
    case NullForm::grw: return "grw";
    case NullForm::kasner: return "kasner";
    case NullForm::type1: return "type1";
    case NullForm::type2: return "type2";
    case NullForm::type3: return "type3";
    case NullForm::ssst: return "ssst";
    case NullForm::ssst_h: return "ssst_h";
    case NullForm::ssst_unit: return "ssst_unit";
  }
  return "unknown";
}

bool kasner_constraint_holds(const std::vector<double>& p, double tol) {
  double s = 0.0, q = 0.0;
  for (double x : p) {
    s += x;
    q += x * x;
  }
  return std::abs(s - 1.0) <= tol && std::abs(q - 1.0) <= tol;
}

// ------------------------------------------------------- construction

TangentVector default_frame(const ManifoldSpec& spec, const Point& p) {
  validate_point(spec, p);
  TangentVector U = zero_vector(spec);
  switch (spec.kind) {
    case ManifoldKind::ssst:
      U.base[0] = -1.0 / warping_value(spec, p, 0);
      return U;
    case ManifoldKind::generic: {
      U.base[0] = 1.0;
      const double g00 = gm(spec, p, U, U);
      if (!(g00 < 0.0)) {
        throw CapabilityError("base coordinate 0 is not timelike; pass a reference frame");
      }
      U.base[0] = -1.0 / std::sqrt(-g00);
      return U;
    }
    default:
      U.base[0] = -1.0;
      return U;
  }
}

TangentVector normalize_null(const ManifoldSpec& spec, const Point& p, const TangentVector& U,
                             const TangentVector& direction) {
  const double uu = gm(spec, p, U, U);
  if (!(uu < 0.0)) throw ConstructionError("reference frame is not timelike");
  const double du = gm(spec, p, direction, U);
  const TangentVector e = direction - (du / uu) * U;
  const double ee = gm(spec, p, e, e);
  const double scale = std::max(1.0, metric_magnitude(spec, p, direction, direction));
  if (!(ee > 1e-14 * scale)) {
    throw ConstructionError("direction has no spacelike part orthogonal to the frame");
  }
  const double nu = std::sqrt(-uu);
  return (1.0 / nu) * ((1.0 / nu) * U + (1.0 / std::sqrt(ee)) * e);
}

NullPlane refresh(const ManifoldSpec& spec, NullPlane plane) {
  const Point& p = plane.point;
  plane.g_LL = gm(spec, p, plane.L, plane.L);
  plane.g_SS = gm(spec, p, plane.S, plane.S);
  plane.g_LS = gm(spec, p, plane.L, plane.S);
  plane.g_LU = has_frame(plane) ? gm(spec, p, plane.L, plane.frame_U) : 0.0;
  return plane;
}

void validate_plane(const ManifoldSpec& spec, const NullPlane& plane) {
  const NullPlane q = refresh(spec, plane);
  const Point& p = q.point;
  const double sLL = std::max(1.0, metric_magnitude(spec, p, q.L, q.L));
  const double sLS = std::max(1.0, metric_magnitude(spec, p, q.L, q.S));
  const double sSS = std::max(1.0, metric_magnitude(spec, p, q.S, q.S));
  if (std::abs(q.g_LL) > kPlaneTol * sLL) throw ValidationError("plane: L is not null");
  if (!(q.g_SS > kPlaneTol * sSS)) throw ValidationError("plane: S is not spacelike");
  if (std::abs(q.g_LS) > kPlaneTol * sLS) throw ValidationError("plane: g(L,S) is not zero");
  if (std::abs(q.discriminant()) > kPlaneTol * sLL * sSS) {
    throw ValidationError("plane: not degenerate");
  }
  if (has_frame(q)) {
    const double sLU = std::max(1.0, metric_magnitude(spec, p, q.L, q.frame_U));
    if (std::abs(q.g_LU + 1.0) > kPlaneTol * sLU) throw ValidationError("plane: g(L,U) != -1");
  }
}

NullPlane make_degenerate_plane(const ManifoldSpec& spec, const Point& p, const TangentVector& L,
                                const TangentVector& S_candidate,
                                const std::optional<TangentVector>& U) {
  const TangentVector N = U ? *U : default_frame(spec, p);
  const double ln = gm(spec, p, L, N);
  if (std::abs(ln) < 1e-14) throw ConstructionError("frame is orthogonal to L");
  NullPlane plane;
  plane.point = p;
  plane.L = L;
  plane.S = S_candidate - (gm(spec, p, L, S_candidate) / ln) * N;
  plane.frame_U = N;
  plane = refresh(spec, plane);
  const double scale = std::max(1.0, metric_magnitude(spec, p, S_candidate, S_candidate));
  if (!(plane.g_SS > kPlaneTol * scale)) {
    if (plane.g_SS >= -kPlaneTol * scale) {
      throw DegeneracyError("S candidate is parallel to L within the plane");
    }
    throw ValidationError("projected S is not spacelike");
  }
  // Frame normalization is a property of L; keep the frame only if it holds.
  if (std::abs(plane.g_LU + 1.0) > kPlaneTol) plane.frame_U = TangentVector{};
  validate_plane(spec, plane);
  return plane;
}

NullPlane scale_null(const ManifoldSpec& spec, const NullPlane& plane, double c) {
  NullPlane q = plane;
  q.L = c * plane.L;
  q.frame_U = TangentVector{};
  return refresh(spec, q);
}

NullPlane shift_spacelike(const ManifoldSpec& spec, const NullPlane& plane, double alpha) {
  NullPlane q = plane;
  q.S = plane.S + alpha * plane.L;
  return refresh(spec, q);
}

NullPlane sample_plane(const ManifoldSpec& spec, const Point& p, std::uint64_t seed,
                       const std::optional<TangentVector>& U) {
  const TangentVector frame = U ? *U : default_frame(spec, p);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> u(-0.9, 0.9);

  for (int attempt = 0; attempt < 16; ++attempt) {
    TangentVector D = zero_vector(spec), W = zero_vector(spec);
    for (std::size_t i = 0; i < spec.fibers.size(); ++i) {
      // Orthonormal-frame weights.
      const double scale = spec.kind == ManifoldKind::ssst
                           ? 1.0
                           : warping_value(spec, p, static_cast<int>(i));
      const double wd = n(rng) / scale, ws = n(rng) / scale;
      std::vector<double> a = random_unit(spec.fibers[i], p.fibers[i], rng);
      std::vector<double> b = random_unit(spec.fibers[i], p.fibers[i], rng);
      for (auto& c : a) c *= wd;
      for (auto& c : b) c *= ws;
      D.fibers[i] = std::move(a);
      W.fibers[i] = std::move(b);
    }
    if (spec.kind == ManifoldKind::generic) {
      // Random spacelike base part: drop the frame component.
      TangentVector B = zero_vector(spec);
      for (auto& c : B.base) c = n(rng);
      const double bu = gm(spec, p, B, frame) / gm(spec, p, frame, frame);
      B = B - bu * frame;
      D = D + 0.5 * B;
    }
    try {
      const TangentVector L = normalize_null(spec, p, frame, D);
      TangentVector Sc = W;
      const double ww = gm(spec, p, W, W);
      const double ff = -gm(spec, p, frame, frame);
      Sc = Sc + (u(rng) * std::sqrt(std::max(ww, 0.0) / ff)) * frame;
      return make_degenerate_plane(spec, p, L, Sc, frame);
    } catch (const ConstructionError&) {
    } catch (const DegeneracyError&) {
    }
  }
  throw DegeneracyError("could not sample a degenerate plane at this point");
}

// --------------------------------------------------------- evaluation

PlaneTerms plane_terms(const ManifoldSpec& spec, const NullPlane& plane) {
  validate_plane(spec, plane);
  if (!spec.interval_base()) throw CapabilityError("closed forms need an interval base");
  const Point& p = plane.point;
  PlaneTerms t;
  const double a = plane.L.base.at(0);
  if (a == 0.0) throw ValidationError("null vector has no time component");
  t.y = plane.S.base.at(0);

  auto fill = [&](PlaneTerms::Fiber& fb, std::size_t i, double c) {
    const FiberSpec& F = spec.fibers[i];
    const Eigen::VectorXd V = c * vec(plane.L.fibers[i]);
    const Eigen::VectorXd W = vec(plane.S.fibers[i]);
    const Eigen::MatrixXd g = F.metric(p.fibers[i]);
    fb.dim = F.dim();
    fb.gVV = V.dot(g * V);
    fb.gWW = W.dot(g * W);
    fb.gVW = V.dot(g * W);
    fb.RF = fiber_curvature_term(F, p.fibers[i], V, W);
    if (fb.dim == 1) {
      fb.v1 = V(0);
      fb.w1 = W(0);
    }
  };

  if (spec.kind == ManifoldKind::ssst) {
    const FiberSpec& F = spec.fibers[0];
    const ScalarField& f = spec.warpings[0];
    t.f = warping_value(spec, p, 0);
    t.null_scale = -1.0 / (t.f * a);
    t.fibers.resize(1);
    fill(t.fibers[0], 0, t.null_scale);
    const Eigen::VectorXd V = t.null_scale * vec(plane.L.fibers[0]);
    const Eigen::VectorXd W = vec(plane.S.fibers[0]);
    const Eigen::MatrixXd H = hessian_oracle(F.chart(), p.fibers[0], f);
    const Eigen::VectorXd grad = gradient_oracle(F.chart(), p.fibers[0], f);
    t.grad_f_sq = grad.dot(F.metric(p.fibers[0]) * grad);
    t.HVV = V.dot(H * V);
    t.HWW = W.dot(H * W);
    t.HVW = V.dot(H * W);
    return t;
  }

  t.null_scale = -1.0 / a;
  t.fibers.resize(spec.fibers.size());
  const double time = p.t();
  if (spec.kind == ManifoldKind::kasner) {
    const Jet phi = spec.kasner_scale->jet(time);
    t.phi = phi.value;
    t.dphi = phi.first;
    t.ddphi = phi.second;
    t.exponents = spec.kasner_exponents;
  }
  for (std::size_t i = 0; i < spec.fibers.size(); ++i) {
    auto& fb = t.fibers[i];
    if (spec.kind == ManifoldKind::kasner) {
      // b = φ^p with the full chain rule.
      const double q = t.exponents[i];
      fb.b = std::pow(t.phi, q);
      fb.db = q * std::pow(t.phi, q - 1.0) * t.dphi;
      fb.ddb = q * (q - 1.0) * std::pow(t.phi, q - 2.0) * t.dphi * t.dphi +
               q * std::pow(t.phi, q - 1.0) * t.ddphi;
    } else {
      const Jet b = spec.warpings[i].jet(time);
      fb.b = b.value;
      fb.db = b.first;
      fb.ddb = b.second;
    }
    fill(fb, i, t.null_scale);
  }
  return t;
}

NullCurvatureResult null_curvature_generic(const ManifoldSpec& spec, const NullPlane& plane) {
  validate_plane(spec, plane);
  const WarpedGeometry G(spec, plane.point);
  const auto lifts_L = decompose(plane.L);
  const auto lifts_S = decompose(plane.S);

  double by_case[10] = {};
  for (const auto& a : lifts_L)
    for (const auto& b : lifts_S)
      for (const auto& c : lifts_S) {
        CaseDispatch d{};
        const TangentVector r = G.curvature(a, b, c, &d);
        for (const auto& e : lifts_L) {
          by_case[static_cast<int>(d.which)] += G.metric(r, to_vector(spec, e));
        }
      }
  NullCurvatureResult out;
  for (int k = 1; k <= 9; ++k) {
    out.breakdown.push_back({"case_" + std::to_string(k), by_case[k]});
    out.numerator += by_case[k];
  }
  out.denominator = G.metric(plane.S, plane.S);
  out.value = out.numerator / out.denominator;
  return out;
}

NullCurvatureResult evaluate_form(NullForm form, const ManifoldSpec& spec, const NullPlane& plane,
                                  FormulaPath path) {
  require_form(form, spec);
  const bool printed = path == FormulaPath::as_printed;
  if (form == NullForm::ssst_unit) {
    const PlaneTerms t = plane_terms(spec, unit_spacelike(spec, plane));
    return printed ? printed::ssst_unit(t) : derived_ssst(t);
  }
  const PlaneTerms t = plane_terms(spec, plane);
  switch (form) {
    case NullForm::theorem:
    case NullForm::kasner:
      if (!printed) return derived_theorem(t);
      return form == NullForm::kasner ? printed::kasner(t) : printed::theorem(t);
    case NullForm::theorem_h:
      return printed ? printed::theorem_h(t) : derived_theorem(t);
    case NullForm::grw:
      return printed ? printed::grw(t) : derived_grw(t);
    case NullForm::type1:
      return printed ? printed::type1(t) : derived_type1(t);
    case NullForm::type2:
      return printed ? printed::type2(t) : derived_type2(t);
    case NullForm::type3:
      return printed ? printed::type3(t) : derived_type3(t);
    case NullForm::ssst:
    case NullForm::ssst_h:
      return printed ? printed::ssst(t) : derived_ssst(t);
    case NullForm::ssst_unit:
      break;
  }
  throw Error("unreachable null form");
}

NullCurvatureResult mgrw_null_curvature(const ManifoldSpec& spec, const NullPlane& plane,
                                        FormulaPath path) {
  return evaluate_form(NullForm::theorem, spec, plane, path);
}
NullCurvatureResult mgrw_null_curvature_h(const ManifoldSpec& spec, const NullPlane& plane,
                                          FormulaPath path) {
  return evaluate_form(NullForm::theorem_h, spec, plane, path);
}
NullCurvatureResult grw_null_curvature(const ManifoldSpec& spec, const NullPlane& plane,
                                       FormulaPath path) {
  return evaluate_form(NullForm::grw, spec, plane, path);
}
NullCurvatureResult kasner_null_curvature(const ManifoldSpec& spec, const NullPlane& plane,
                                          FormulaPath path) {
  return evaluate_form(NullForm::kasner, spec, plane, path);
}
NullCurvatureResult type1_null_curvature(const ManifoldSpec& spec, const NullPlane& plane,
                                         FormulaPath path) {
  return evaluate_form(NullForm::type1, spec, plane, path);
}
NullCurvatureResult type2_null_curvature(const ManifoldSpec& spec, const NullPlane& plane,
                                         FormulaPath path) {
  return evaluate_form(NullForm::type2, spec, plane, path);
}
NullCurvatureResult type3_null_curvature(const ManifoldSpec& spec, const NullPlane& plane,
                                         FormulaPath path) {
  return evaluate_form(NullForm::type3, spec, plane, path);
}
NullCurvatureResult ssst_null_curvature(const ManifoldSpec& spec, const NullPlane& plane,
                                        FormulaPath path) {
  return evaluate_form(NullForm::ssst, spec, plane, path);
}
NullCurvatureResult ssst_null_curvature_unit(const ManifoldSpec& spec, const NullPlane& plane,
                                             FormulaPath path) {
  return evaluate_form(NullForm::ssst_unit, spec, plane, path);
}

NullCurvatureResult ssst_null_curvature_h(const ManifoldSpec& spec, const Point& p, double h,
                                          const std::vector<double>& V,
                                          const std::vector<double>& W, FormulaPath path) {
  require_form(NullForm::ssst_h, spec);
  const double f = warping_value(spec, p, 0);
  TangentVector L = zero_vector(spec), S = zero_vector(spec);
  L.base[0] = -1.0 / f;
  L.fibers[0] = V;
  S.base[0] = h;
  S.fibers[0] = W;
  NullPlane plane;
  plane.point = p;
  plane.L = L;
  plane.S = S;
  plane.frame_U = default_frame(spec, p);
  plane = refresh(spec, plane);
  return evaluate_form(NullForm::ssst_h, spec, plane, path);
}

std::vector<NullForm> applicable_forms(const ManifoldSpec& spec) {
  if (spec.kind == ManifoldKind::ssst) return {NullForm::ssst, NullForm::ssst_h, NullForm::ssst_unit};
  if (!spec.interval_base()) return {};
  std::vector<NullForm> out{NullForm::theorem, NullForm::theorem_h};
  const std::vector<int> dims = fiber_dims(spec);
  if (spec.fiber_count() == 1) out.push_back(NullForm::grw);
  if (spec.kind == ManifoldKind::kasner) out.push_back(NullForm::kasner);
  if (dims == std::vector<int>{3}) out.push_back(NullForm::type1);
  if (dims == std::vector<int>{1, 2}) out.push_back(NullForm::type2);
  if (spec.kind == ManifoldKind::kasner && dims == std::vector<int>{1, 1, 1} &&
      kasner_constraint_holds(spec.kasner_exponents)) {
    out.push_back(NullForm::type3);
  }
  return out;
}

NullCurvatureResult specialized_null_curvature(const ManifoldSpec& spec, const NullPlane& plane) {
  switch (spec.kind) {
    case ManifoldKind::ssst: return ssst_null_curvature(spec, plane);
    case ManifoldKind::grw: return grw_null_curvature(spec, plane);
    case ManifoldKind::kasner: return kasner_null_curvature(spec, plane);
    case ManifoldKind::mgrw: return mgrw_null_curvature(spec, plane);
    case ManifoldKind::generic: return null_curvature_generic(spec, plane);
  }
  throw Error("unknown manifold kind");
}

IsotropyResult isotropy_scan(const ManifoldSpec& spec, const Point& p, const TangentVector& U,
                             int n_planes, std::uint64_t seed) {
  IsotropyResult r;
  if (n_planes <= 0) return r;
  std::mt19937_64 seeds(seed);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n_planes));
  for (int k = 0; k < n_planes; ++k) {
    const NullPlane plane = sample_plane(spec, p, seeds(), U);
    values.push_back(specialized_null_curvature(spec, plane).value);
  }
  for (double v : values) r.mean += v;
  r.mean /= static_cast<double>(values.size());
  for (double v : values) r.max_deviation = std::max(r.max_deviation, std::abs(v - r.mean));
  r.planes = n_planes;
  return r;
}

}  // namespace warpcurv
