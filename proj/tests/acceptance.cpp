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


// Acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "commands.hpp"
#include "warpcurv/models.hpp"
#include "warpcurv/null_sectional.hpp"
#include "warpcurv/oracle.hpp"
#include "warpcurv/warped.hpp"

using namespace warpcurv;

namespace {

constexpr std::uint64_t kSeed = 0x5eed;
constexpr double kInf = std::numeric_limits<double>::infinity();

int failures = 0;

void report(int id, const char* title, bool pass, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", pass ? "PASS" : "FAIL", id, title, detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double oracle_K(const CurvatureTensors& t, const NullPlane& plane) {
  return null_sectional_oracle(t, flatten(plane.L), flatten(plane.S));
}

std::vector<double> random_unit(const FiberSpec& F, const std::vector<double>& x,
                                std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::VectorXd z(F.dim());
  for (int k = 0; k < F.dim(); ++k) z(k) = n(rng);
  const Eigen::LLT<Eigen::MatrixXd> llt(F.metric(x));
  const Eigen::VectorXd v = llt.matrixU().solve(z / z.norm());
  return {v.data(), v.data() + v.size()};
}

// Plane with S tangent to the single fiber and g_F(V,W) = 0; returns K_U - K_F/b^2
// (K_U - K_F for SSST), specialized path and oracle path.
std::pair<double, double> fiber_offset(const ManifoldSpec& spec, const Point& p, std::mt19937_64& rng) {
  const FiberSpec& F = spec.fibers.at(0);
  const auto& x = p.fibers[0];
  const Eigen::MatrixXd g = F.metric(x);
  std::vector<double> V = random_unit(F, x, rng), W = random_unit(F, x, rng);
  Eigen::Map<Eigen::VectorXd> v(V.data(), F.dim()), w(W.data(), F.dim());
  w -= v.dot(g * w) * v;
  w /= std::sqrt(w.dot(g * w));
  const TangentVector U = default_frame(spec, p);
  const TangentVector L = normalize_null(spec, p, U, fiber_lift(spec, 0, V));
  const NullPlane plane = make_degenerate_plane(spec, p, L, fiber_lift(spec, 0, W), U);
  const double b = spec.kind == ManifoldKind::ssst ? 1.0 : warping_value(spec, p, 0);
  const double KF = riemann_oracle(F.chart(), x).form(V, W, W, V);
  const double ks = specialized_null_curvature(spec, plane).value;
  const double ko = oracle_K(riemann_oracle(assemble_chart(spec), flatten(p)), plane);
  return {ks - KF / (b * b), ko - KF / (b * b)};
}

LiftedField random_lifted(const ManifoldSpec& spec, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const int factor = std::uniform_int_distribution<int>(0, spec.fiber_count())(rng);
  const int dim = factor == 0 ? spec.base_dim() : spec.fibers[factor - 1].dim();
  std::vector<double> c(static_cast<std::size_t>(dim));
  for (auto& x : c) x = n(rng);
  return factor == 0 ? LiftedField::base(c) : LiftedField::fiber(factor - 1, c);
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// 1. specialized and warped-product formulas vs the coordinate oracle.
void oracle_equivalence() {
  double worst_K = 0.0, worst_R = 0.0;
  std::string where;
  for (const auto& entry : catalog()) {
    const ManifoldSpec& spec = entry.spec;
    const CoordinateChart chart = assemble_chart(spec);
    std::mt19937_64 rng(kSeed);
    for (int k = 0; k < 100; ++k) {
      const Point p = entry.sample_point(rng);
      const CurvatureTensors t = riemann_oracle(chart, flatten(p));
      const NullPlane plane = sample_plane(spec, p, rng());
      const double o = oracle_K(t, plane);
      const double r = std::abs(specialized_null_curvature(spec, plane).value - o) /
                       curvature_tolerance(std::max(std::abs(o), t.scale()));
      if (r > worst_K) {
        worst_K = r;
        where = entry.name;
      }

      const LiftedField a = random_lifted(spec, rng), b = random_lifted(spec, rng),
                        c = random_lifted(spec, rng);
      const auto fa = flatten(to_vector(spec, a)), fb = flatten(to_vector(spec, b)),
                 fc = flatten(to_vector(spec, c));
      const auto ro = t.apply(fa, fb, fc);
      const auto rw = flatten(riemann_mwp(spec, p, a, b, c));
      const double scale =
          std::max(max_abs(ro), t.scale() * max_abs(fa) * max_abs(fb) * max_abs(fc));
      for (std::size_t i = 0; i < ro.size(); ++i) {
        worst_R = std::max(worst_R, std::abs(rw[i] - ro[i]) / curvature_tolerance(scale));
      }
    }
  }
  report(1, "oracle equivalence (8 models x 100 planes, 100 lifted triples)",
         worst_K <= 1.0 && worst_R <= 1.0,
         fmt("worst |K - K_oracle| = %.2g x tol, worst |R - R_oracle| = %.2g x tol", worst_K, worst_R) +
             " (K worst on " + where + ")");
}

// 2. Minkowski: everything vanishes.
void minkowski_nullity() {
  const CatalogEntry& entry = catalog_entry("minkowski");
  const ManifoldSpec& spec = entry.spec;
  const CoordinateChart chart = assemble_chart(spec);
  double worst = 0.0;
  std::uint64_t plane_seed = kSeed;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      for (int k = 0; k < 10; ++k) {
        const double t = -2.0 + 4.0 * i / 9.0;
        const Point p = Point::at(t, {{-1.0 + 2.0 * j / 9.0, -1.0 + 2.0 * k / 9.0, 0.5}});
        const CurvatureTensors c = riemann_oracle(chart, flatten(p));
        const NullPlane plane = sample_plane(spec, p, plane_seed++);
        worst = std::max({worst, c.scale(), c.ricci.cwiseAbs().maxCoeff(),
                          ricci_components(spec, p).cwiseAbs().maxCoeff(),
                          std::abs(specialized_null_curvature(spec, plane).value),
                          std::abs(null_curvature_generic(spec, plane).value),
                          std::abs(oracle_K(c, plane))});
        const TangentVector e1 = fiber_lift(spec, 0, {1.0, 0.0, 0.0});
        const TangentVector e2 = fiber_lift(spec, 0, {0.0, 1.0, 0.0});
        const TangentVector et = time_direction(spec);
        const WarpedGeometry geo(spec, p);
        worst = std::max({worst, max_abs(flatten(geo.curvature(e1, et, et))),
                          max_abs(flatten(geo.curvature(e1, e2, e2)))});
      }
  report(2, "Minkowski nullity on a 10^3 grid", worst <= 1e-10,
         fmt("max |curvature quantity| = %.3g (tol 1e-10)", worst));
}

// 3. GRW: exponential warping has zero offset; b = t gives the stated residual.
void grw_exponential() {
  double worst = 0.0;
  for (double c : {0.5, 1.0, 1.5, 2.0, 3.0})
    for (double k : {-1.0, -0.5, 0.25, 0.5, 1.0}) {
      const ManifoldSpec spec = ManifoldSpec::grw({-kInf, kInf}, ScalarField::exponential(c, k),
                                                  FiberSpec::sphere(3, 1.0));
      std::mt19937_64 rng(kSeed);
      for (int n = 0; n < 20; ++n) {
        const double t = -1.0 + 2.0 * n / 19.0;
        const Point p = Point::at(t, {{1.0, 1.2, 0.4}});
        const auto [ks, ko] = fiber_offset(spec, p, rng);
        worst = std::max({worst, std::abs(ks), std::abs(ko)});
      }
    }
  const ManifoldSpec lin =
      ManifoldSpec::grw({0.0, kInf}, ScalarField::power(1.0, 1.0), FiberSpec::sphere(3, 1.0));
  std::mt19937_64 rng(kSeed);
  double worst_lin = 0.0, observed = 0.0, at_t = 0.0;
  for (int n = 0; n < 20; ++n) {
    const double t = 0.5 + 2.5 * n / 19.0;
    const auto [ks, ko] = fiber_offset(lin, Point::at(t, {{1.0, 1.2, 0.4}}), rng);
    const double expected = -1.0 / (t * t);
    const double d = std::max(std::abs(ks - expected), std::abs(ko - expected));
    if (d >= worst_lin) {
      worst_lin = d;
      observed = ko;
      at_t = t;
    }
  }
  report(3, "GRW exponential characterization", worst <= 1e-10 && worst_lin <= 1e-10,
         fmt("b=ce^{kt}: max |K_U - K_F/b^2| = %.3g (tol 1e-10); ", worst) +
             fmt("b=t: residual %.12g at t=%.4g, expected -1/t^2 = %.12g (tol 1e-10)", observed,
                 at_t, -1.0 / (at_t * at_t)));
}

// 4. SSST with H^f = k f g_F: offset of K_U from K_F should be -k.
void ssst_offset() {
  struct Case {
    const char* model;
    double k;
  };
  std::string detail;
  bool pass = true;
  for (const Case& c : {Case{"einstein_static", 0.0}, Case{"anti_de_sitter_cover", 1.0}}) {
    const CatalogEntry& entry = catalog_entry(c.model);
    std::mt19937_64 rng(kSeed);
    double worst = 0.0, observed = 0.0;
    for (int n = 0; n < 50; ++n) {
      const auto [ks, ko] = fiber_offset(entry.spec, entry.sample_point(rng), rng);
      for (double v : {ks, ko}) {
        if (std::abs(v + c.k) >= worst) {
          worst = std::abs(v + c.k);
          observed = v;
        }
      }
    }
    pass = pass && worst <= 1e-8;
    detail += std::string(detail.empty() ? "" : "; ") + c.model +
              fmt(" (k=%g): offset %.12g, expected %g", c.k, observed, -c.k);
  }
  report(4, "SSST offset -k over 50 planes (tol 1e-8)", pass, detail);
}

// 5. Kasner: vacuum exponents are Ricci flat, (1,0,0) is flat.
void kasner() {
  const CatalogEntry& vac = catalog_entry("kasner_vacuum");
  const CoordinateChart chart = assemble_chart(vac.spec);
  std::mt19937_64 rng(kSeed);
  double ric = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    const Point p = vac.sample_point_at(t, rng);
    ric = std::max({ric, ricci_components(vac.spec, p).cwiseAbs().maxCoeff(),
                    riemann_oracle(chart, flatten(p)).ricci.cwiseAbs().maxCoeff()});
  }
  const CatalogEntry& flat = catalog_entry("kasner_flat");
  const CoordinateChart fchart = assemble_chart(flat.spec);
  double K = 0.0;
  for (int n = 0; n < 100; ++n) {
    const Point p = flat.sample_point(rng);
    const NullPlane plane = sample_plane(flat.spec, p, rng());
    K = std::max({K, std::abs(specialized_null_curvature(flat.spec, plane).value),
                  std::abs(oracle_K(riemann_oracle(fchart, flatten(p)), plane))});
  }
  report(5, "Kasner vacuum and flat exponents", ric <= 1e-8 && K <= 1e-9,
         fmt("p=(2/3,2/3,-1/3): max |Ric| = %.3g (tol 1e-8); p=(1,0,0): max |K| = %.3g (tol 1e-9)",
             ric, K));
}

// 6. S -> S + aL invariance and L -> cL quadratic scaling.
void gauge_scaling() {
  double gauge = 0.0, scaling = 0.0;
  int samples = 0;
  for (const auto& entry : catalog()) {
    std::mt19937_64 rng(kSeed ^ 0x6a09e667f3bcc908ULL);
    std::uniform_real_distribution<double> alpha(-3.0, 3.0), c(0.25, 4.0);
    for (int n = 0; n < 125; ++n, ++samples) {
      const Point p = entry.sample_point(rng);
      const NullPlane plane = sample_plane(entry.spec, p, rng());
      const double K = specialized_null_curvature(entry.spec, plane).value;
      const double Ks =
          specialized_null_curvature(entry.spec, shift_spacelike(entry.spec, plane, alpha(rng))).value;
      const double cc = c(rng);
      const double Kc = specialized_null_curvature(entry.spec, scale_null(entry.spec, plane, cc)).value;
      gauge = std::max(gauge, std::abs(Ks - K));
      scaling = std::max(scaling, std::abs(Kc - cc * cc * K) / std::max(std::abs(cc * cc * K), 1.0));
    }
  }
  report(6, "gauge invariance and quadratic scaling", gauge <= 1e-9 && scaling <= 1e-10,
         fmt("%g samples: max |K(S+aL) - K| = %.3g (tol 1e-9), max |K(cL) - c^2 K| / max(|c^2 K|, 1) = %.3g (tol 1e-10)",
             samples, gauge, scaling));
}

// 7. compare ledgers: printed theorem and Kasner corollary flagged, derived path clean.
void ledger_completeness() {
  std::size_t derived_entries = 0;
  bool derived_agrees = true;
  for (const auto& entry : catalog()) {
    cli::CompareOptions o;
    o.model.model = entry.name;
    o.seed = kSeed;
    o.path = "as-derived";
    const auto r = cli::run_compare(o);
    derived_entries += r.ledger.size();
    derived_agrees = derived_agrees && r.derived_agrees;
  }
  cli::CompareOptions o;
  o.model.model = "kasner_vacuum";
  o.seed = kSeed;
  o.path = "as-printed";
  const auto r = cli::run_compare(o);
  std::size_t theorem = 0, corollary = 0;
  for (const auto& e : r.ledger) {
    if (e["path_b"] != "oracle") continue;
    if (e["path_a"] == "as-printed/mgrw") ++theorem;
    if (e["path_a"] == "as-printed/kasner") ++corollary;
  }
  report(7, "discrepancy ledger completeness",
         theorem > 0 && corollary > 0 && derived_entries == 0 && derived_agrees,
         fmt("as-printed contradicted by oracle: theorem %g, Kasner corollary %g samples; ",
             static_cast<double>(theorem), static_cast<double>(corollary)) +
             fmt("as-derived ledger entries over 8 models: %g", static_cast<double>(derived_entries)));
}

// 8. oracle symmetry and Bianchi residuals.
void oracle_residual_check() {
  double worst = 0.0;
  std::string where;
  for (const auto& entry : catalog()) {
    const CoordinateChart chart = assemble_chart(entry.spec);
    std::mt19937_64 rng(kSeed);
    for (int n = 0; n < 50; ++n) {
      const OracleResiduals r = oracle_residuals(riemann_oracle(chart, flatten(entry.sample_point(rng))));
      const double w = std::max({r.gamma_symmetry, r.antisym_first_pair, r.antisym_outer_pair,
                                 r.bianchi, r.ricci_symmetry, r.metric_compatibility});
      if (w > worst) {
        worst = w;
        where = entry.name;
      }
    }
  }
  report(8, "oracle symmetry and Bianchi residuals (8 models x 50 points)", worst <= 1e-9,
         fmt("max residual %.3g (tol 1e-9)", worst) + (where.empty() ? "" : " on " + where));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> checks = {oracle_equivalence, minkowski_nullity,
                                                     grw_exponential,    ssst_offset,
                                                     kasner,             gauge_scaling,
                                                     ledger_completeness, oracle_residual_check};
  for (std::size_t i = 0; i < checks.size(); ++i) {
    try {
      checks[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), "criterion", false, std::string("exception: ") + e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, checks.size());
  return failures == 0 ? 0 : 1;
}
