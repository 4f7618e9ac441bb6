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


#include "warpcurv/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "warpcurv/errors.hpp"
#include "warpcurv/null_sectional.hpp"
#include "warpcurv/oracle.hpp"
#include "warpcurv/warped.hpp"

namespace warpcurv {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

KnownFact fact(FactQuantity q, std::string region, double expected, double tol,
               FactBasis basis = FactBasis::derived) {
  KnownFact f;
  f.quantity = q;
  f.region = std::move(region);
  f.expected = expected;
  f.tolerance = tol;
  f.basis = basis;
  return f;
}

KnownFact greater(FactQuantity q, std::string region, double bound) {
  KnownFact f = fact(q, std::move(region), bound, 0.0);
  f.comparison = Comparison::greater;
  return f;
}

std::vector<FiberSpec> lines(int n) { return std::vector<FiberSpec>(static_cast<std::size_t>(n), FiberSpec::euclidean(1)); }

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;

  {
    CatalogEntry e{"minkowski", "flat space-time as I x R^3 with b = 1",
                   ManifoldSpec::grw({-kInf, kInf}, ScalarField::constant(1.0), FiberSpec::euclidean(3)),
                   {}};
    e.t_min = -2.0;
    e.t_max = 2.0;
    e.known_facts = {fact(FactQuantity::null_curvature, "everywhere", 0.0, 1e-10, FactBasis::identity),
                     fact(FactQuantity::ricci, "everywhere", 0.0, 1e-10, FactBasis::identity),
                     fact(FactQuantity::isotropy_deviation, "everywhere", 0.0, 1e-10,
                          FactBasis::identity),
                     fact(FactQuantity::oracle_agreement, "everywhere", 0.0, 1e-8)};
    c.push_back(std::move(e));
  }
  {
    CatalogEntry e{"einstein_static", "R x S^3 with f = 1",
                   ManifoldSpec::ssst({-kInf, kInf}, ScalarField::constant(1.0), FiberSpec::sphere(3, 1.0)),
                   {}};
    e.known_facts = {fact(FactQuantity::null_offset_fiber, "Y = 0 planes", 0.0, 1e-10,
                          FactBasis::closed_form),
                     fact(FactQuantity::null_curvature, "everywhere", 1.0, 1e-10),
                     fact(FactQuantity::isotropy_deviation, "everywhere", 0.0, 1e-10),
                     fact(FactQuantity::oracle_agreement, "everywhere", 0.0, 1e-8)};
    c.push_back(std::move(e));
  }
  {
    CatalogEntry e{"anti_de_sitter_cover", "R x H^3 with f = cosh r",
                   ManifoldSpec::ssst({-kInf, kInf}, ScalarField::hyperbolic_cosine(),
                                      FiberSpec::hyperbolic(3, 1.0)),
                   {}};
    // Lorentzian space form: every null sectional curvature vanishes, so
    // on Y = 0 planes K_U - K_F = +1.
    e.known_facts = {fact(FactQuantity::null_curvature, "everywhere", 0.0, 1e-9),
                     fact(FactQuantity::null_offset_fiber, "Y = 0 planes", 1.0, 1e-9),
                     fact(FactQuantity::oracle_agreement, "everywhere", 0.0, 1e-8)};
    c.push_back(std::move(e));
  }
  c.push_back(schwarzschild_exterior(kSchwarzschildMass));
  {
    CatalogEntry e{"kasner_vacuum", "Kasner, phi = t, p = (2/3, 2/3, -1/3)",
                   ManifoldSpec::kasner({0.0, kInf}, ScalarField::power(1.0, 1.0),
                                        {2.0 / 3.0, 2.0 / 3.0, -1.0 / 3.0}, lines(3)),
                   {}};
    e.t_min = 0.5;
    e.t_max = 2.0;
    KnownFact vac = fact(FactQuantity::ricci, "t in {0.5, 1, 2}", 0.0, 1e-8);
    vac.at_t = {0.5, 1.0, 2.0};
    KnownFact aniso = greater(FactQuantity::anisotropy_ratio, "t = 1", 0.1);
    aniso.at_t = {1.0};
    e.known_facts = {vac, aniso, fact(FactQuantity::oracle_agreement, "t in [0.5, 2]", 0.0, 1e-8)};
    c.push_back(std::move(e));
  }
  {
    CatalogEntry e{"kasner_flat", "Kasner, phi = t, p = (1, 0, 0)",
                   ManifoldSpec::kasner({0.0, kInf}, ScalarField::power(1.0, 1.0), {1.0, 0.0, 0.0},
                                        lines(3)),
                   {}};
    e.t_min = 0.2;
    e.t_max = 5.0;
    e.known_facts = {fact(FactQuantity::null_curvature, "everywhere", 0.0, 1e-9),
                     fact(FactQuantity::ricci, "everywhere", 0.0, 1e-9),
                     fact(FactQuantity::oracle_agreement, "everywhere", 0.0, 1e-8)};
    c.push_back(std::move(e));
  }
  {
    CatalogEntry e{"grw_exponential", "I x_b S^3 with b = e^t",
                   ManifoldSpec::grw({-kInf, kInf}, ScalarField::exponential(1.0, 1.0),
                                     FiberSpec::sphere(3, 1.0)),
                   {}};
    e.t_min = 0.0;
    e.t_max = 2.0;
    e.known_facts = {fact(FactQuantity::null_offset_fiber, "Y = 0 planes", 0.0, 1e-10,
                          FactBasis::closed_form),
                     fact(FactQuantity::isotropy_deviation, "everywhere", 0.0, 1e-8),
                     fact(FactQuantity::oracle_agreement, "everywhere", 0.0, 1e-8)};
    c.push_back(std::move(e));
  }
  {
    CatalogEntry e{"generalized_reissner_nordstrom_demo",
                   "I x_{b1} R x_{b2} S^2 with b1 = t, b2 = t^2",
                   ManifoldSpec::mgrw({0.0, kInf}, {ScalarField::power(1.0, 1.0), ScalarField::power(1.0, 2.0)},
                                      {FiberSpec::euclidean(1), FiberSpec::sphere(2, 1.0)}),
                   {}};
    e.t_min = 0.5;
    e.t_max = 3.0;
    e.known_facts = {fact(FactQuantity::oracle_agreement, "everywhere", 0.0, 1e-8)};
    c.push_back(std::move(e));
  }
  return c;
}

std::vector<double> random_unit(const FiberSpec& F, const std::vector<double>& x, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::VectorXd z(F.dim());
  for (int k = 0; k < F.dim(); ++k) z(k) = n(rng);
  const Eigen::LLT<Eigen::MatrixXd> llt(F.metric(x));
  const Eigen::VectorXd v = llt.matrixU().solve(z / z.norm());
  return {v.data(), v.data() + v.size()};
}

double oracle_null(const ManifoldSpec& spec, const NullPlane& plane) {
  return null_sectional_oracle(assemble_chart(spec), flatten(plane.point), flatten(plane.L),
                               flatten(plane.S));
}

// Degenerate plane with S a fiber vector orthogonal to V, so Y = 0.
struct FiberPlane {
  NullPlane plane;
  double KF_closed = 0.0;
  double KF_oracle = 0.0;
  double b = 1.0;
};

FiberPlane fiber_plane(const ManifoldSpec& spec, const Point& p, std::mt19937_64& rng) {
  const FiberSpec& F = spec.fibers.at(0);
  const std::vector<double>& x = p.fibers[0];
  const Eigen::MatrixXd g = F.metric(x);
  std::vector<double> V = random_unit(F, x, rng);
  std::vector<double> W = random_unit(F, x, rng);
  Eigen::Map<Eigen::VectorXd> v(V.data(), F.dim()), w(W.data(), F.dim());
  w -= v.dot(g * w) * v;
  w /= std::sqrt(w.dot(g * w));

  FiberPlane out;
  const TangentVector U = default_frame(spec, p);
  const TangentVector L = normalize_null(spec, p, U, fiber_lift(spec, 0, V));
  out.plane = make_degenerate_plane(spec, p, L, fiber_lift(spec, 0, W), U);
  out.b = spec.kind == ManifoldKind::ssst ? 1.0 : warping_value(spec, p, 0);
  const CurvatureTensors fc = riemann_oracle(F.chart(), x);
  out.KF_oracle = fc.form(V, W, W, V);
  out.KF_closed = F.constant_curvature() ? *F.constant_curvature() : out.KF_oracle;
  return out;
}

struct Sample {
  double specialized = 0.0;
  double oracle = 0.0;
};

// One value per path at one point; the worst over planes where applicable.
Sample evaluate(const CatalogEntry& entry, const KnownFact& f, const Point& p, std::uint64_t seed,
                int planes) {
  const ManifoldSpec& spec = entry.spec;
  std::mt19937_64 rng(seed);
  Sample s;
  auto worse = [&f](double cur, double v) {
    return std::abs(v - f.expected) > std::abs(cur - f.expected) ? v : cur;
  };
  switch (f.quantity) {
    case FactQuantity::null_curvature: {
      s = {f.expected, f.expected};
      for (int k = 0; k < planes; ++k) {
        const NullPlane plane = sample_plane(spec, p, rng());
        s.specialized = worse(s.specialized, specialized_null_curvature(spec, plane).value);
        s.oracle = worse(s.oracle, oracle_null(spec, plane));
      }
      return s;
    }
    case FactQuantity::null_offset_fiber: {
      s = {f.expected, f.expected};
      for (int k = 0; k < planes; ++k) {
        const FiberPlane fp = fiber_plane(spec, p, rng);
        const double b2 = fp.b * fp.b;
        s.specialized = worse(s.specialized, specialized_null_curvature(spec, fp.plane).value -
                                                 fp.KF_closed / b2);
        s.oracle = worse(s.oracle, oracle_null(spec, fp.plane) - fp.KF_oracle / b2);
      }
      return s;
    }
    case FactQuantity::ricci: {
      const Eigen::MatrixXd a = ricci_components(spec, p);
      const Eigen::MatrixXd b = riemann_oracle(assemble_chart(spec), flatten(p)).ricci;
      s.specialized = f.expected + (a.array() - f.expected).abs().maxCoeff();
      s.oracle = f.expected + (b.array() - f.expected).abs().maxCoeff();
      return s;
    }
    case FactQuantity::isotropy_deviation:
    case FactQuantity::anisotropy_ratio: {
      std::vector<double> ks, ko;
      for (int k = 0; k < planes; ++k) {
        const NullPlane plane = sample_plane(spec, p, rng());
        ks.push_back(specialized_null_curvature(spec, plane).value);
        ko.push_back(oracle_null(spec, plane));
      }
      auto dev = [&f](const std::vector<double>& v) {
        double mean = 0.0, d = 0.0;
        for (double x : v) mean += x;
        mean /= static_cast<double>(v.size());
        for (double x : v) d = std::max(d, std::abs(x - mean));
        return f.quantity == FactQuantity::anisotropy_ratio ? d / std::abs(mean) : d;
      };
      return {dev(ks), dev(ko)};
    }
    case FactQuantity::line_element: {
      // The reference covers the trailing (fiber) block of the chart.
      const Eigen::MatrixXd ref = f.reference_metric(p);
      const auto k = ref.rows();
      const Eigen::MatrixXd a = metric_components(spec, p).bottomRightCorner(k, k);
      const Eigen::MatrixXd b = assemble_chart(spec).metric(flatten(p)).bottomRightCorner(k, k);
      s.specialized = f.expected + (a - ref).cwiseAbs().maxCoeff();
      s.oracle = f.expected + (b - ref).cwiseAbs().maxCoeff();
      return s;
    }
    case FactQuantity::oracle_agreement: {
      double worst = 0.0;
      for (int k = 0; k < planes; ++k) {
        const NullPlane plane = sample_plane(spec, p, rng());
        const double a = specialized_null_curvature(spec, plane).value;
        const double b = oracle_null(spec, plane);
        worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
      }
      return {worst, worst};
    }
  }
  return s;
}

bool passes(const KnownFact& f, double observed) {
  if (!std::isfinite(observed)) return false;
  if (f.comparison == Comparison::greater) return observed > f.expected;
  return std::abs(observed - f.expected) <= f.tolerance;
}

}  // namespace

std::string to_string(FactQuantity q) {
  switch (q) {
    case FactQuantity::null_curvature: return "null_curvature";
    case FactQuantity::null_offset_fiber: return "null_offset_fiber";
    case FactQuantity::ricci: return "ricci";
    case FactQuantity::isotropy_deviation: return "isotropy_deviation";
    case FactQuantity::anisotropy_ratio: return "anisotropy_ratio";
    case FactQuantity::line_element: return "line_element";
    case FactQuantity::oracle_agreement: return "oracle_agreement";
  }
  return "unknown";
}

std::string to_string(FactBasis b) {
  switch (b) {
    case FactBasis::identity: return "identity";
    case FactBasis::derived: return "derived";
    case FactBasis::closed_form: return "closed_form";
  }
  return "unknown";
}

Point CatalogEntry::sample_point(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> u(t_min, t_max);
  return sample_point_at(u(rng), rng);
}

Point CatalogEntry::sample_point_at(double t, std::mt19937_64& rng) const {
  Point p;
  p.base = {t};
  for (const auto& f : spec.fibers) p.fibers.push_back(f.sample_point(rng));
  return p;
}

CatalogEntry schwarzschild_exterior(double mass) {
  if (!(mass > 0.0)) throw ValidationError("Schwarzschild mass must be positive");
  CatalogEntry e{"schwarzschild_exterior", "R x (2m, inf) x S^2 with f = sqrt(1 - 2m/r)",
                 ManifoldSpec::ssst({-kInf, kInf}, ScalarField::schwarzschild(mass),
                                    FiberSpec::schwarzschild_spatial(mass)),
                 {}};
  KnownFact line = fact(FactQuantity::line_element, "r in [2.02m, 10m]", 0.0, 0.0,
                        FactBasis::closed_form);
  // Spatial block (1 - 2m/r)^{-1} dr^2 + r^2 (dθ^2 + sin^2θ dφ^2), compared exactly.
  line.reference_metric = [mass](const Point& p) {
    const double r = p.fibers[0][0], th = p.fibers[0][1];
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(3, 3);
    g(0, 0) = 1.0 / (1.0 - 2.0 * mass / r);
    g(1, 1) = r * r;
    g(2, 2) = r * r * std::sin(th) * std::sin(th);
    return g;
  };
  e.known_facts = {line, fact(FactQuantity::ricci, "r in [2.02m, 10m]", 0.0, 1e-8),
                   fact(FactQuantity::oracle_agreement, "r in [2.02m, 10m]", 0.0, 1e-8)};
  return e;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw ValidationError("unknown model '" + name + "'");
}

bool EntryReport::all_pass() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const FactOutcome& o) { return o.pass; });
}

EntryReport validate_entry(const CatalogEntry& entry, std::uint64_t seed, int points, int planes) {
  EntryReport report{entry.name, {}};
  std::mt19937_64 rng(seed);
  for (const auto& f : entry.known_facts) {
    std::vector<Point> pts;
    if (f.at_t.empty()) {
      for (int k = 0; k < points; ++k) pts.push_back(entry.sample_point(rng));
    } else {
      for (double t : f.at_t) pts.push_back(entry.sample_point_at(t, rng));
    }
    const bool shared = f.quantity == FactQuantity::oracle_agreement;
    FactOutcome spec_out{to_string(f.quantity), f.region, shared ? "both" : "specialized",
                         f.expected, f.expected, f.tolerance,
                         f.comparison == Comparison::equal ? "equal" : "greater", true};
    FactOutcome orc_out = spec_out;
    orc_out.path = "oracle";
    bool first = true;
    for (const Point& p : pts) {
      Sample s;
      try {
        s = evaluate(entry, f, p, rng(), planes);
      } catch (const Error&) {
        s = {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
      }
      // Keep the least favourable observation per path.
      auto keep = [&](FactOutcome& o, double v) {
        const bool ok = passes(f, v);
        if (first || (o.pass && !ok) ||
            (ok == o.pass && f.comparison == Comparison::equal &&
             std::abs(v - f.expected) > std::abs(o.observed - f.expected)) ||
            (ok == o.pass && f.comparison == Comparison::greater && v < o.observed)) {
          o.observed = v;
        }
        o.pass = o.pass && ok;
      };
      keep(spec_out, s.specialized);
      keep(orc_out, s.oracle);
      first = false;
    }
    report.outcomes.push_back(spec_out);
    if (!shared) report.outcomes.push_back(orc_out);
  }
  return report;
}

}  // namespace warpcurv
