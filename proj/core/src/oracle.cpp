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


#include "warpcurv/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "warpcurv/errors.hpp"

namespace warpcurv {
namespace {

std::vector<HyperDual> seeded(std::span<const double> x, int a, int b) {
  std::vector<HyperDual> h(x.begin(), x.end());
  h[static_cast<std::size_t>(a)].d1 = 1.0;
  h[static_cast<std::size_t>(b)].d2 = 1.0;
  return h;
}

void require_dim(const CoordinateChart& chart, std::span<const double> x) {
  if (static_cast<int>(x.size()) != chart.dim) {
    throw ShapeError("chart point has " + std::to_string(x.size()) + " coordinates, expected " +
                     std::to_string(chart.dim));
  }
}

double quad(const Eigen::MatrixXd& g, std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) s += a[static_cast<std::size_t>(i)] * g(i, j) * b[static_cast<std::size_t>(j)];
  return s;
}

double quad_magnitude(const Eigen::MatrixXd& g, std::span<const double> a,
                      std::span<const double> b) {
  double s = 0.0;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      s += std::abs(a[static_cast<std::size_t>(i)] * g(i, j) * b[static_cast<std::size_t>(j)]);
  return s;
}

}  // namespace

double Tensor4::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

MetricJet metric_jet(const CoordinateChart& chart, std::span<const double> x) {
  require_dim(chart, x);
  const int n = chart.dim;
  MetricJet jet;
  jet.point.assign(x.begin(), x.end());
  jet.g = Eigen::MatrixXd::Zero(n, n);
  jet.d.assign(static_cast<std::size_t>(n), Eigen::MatrixXd::Zero(n, n));
  jet.dd.assign(static_cast<std::size_t>(n),
                std::vector<Eigen::MatrixXd>(static_cast<std::size_t>(n), Eigen::MatrixXd::Zero(n, n)));

  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const auto h = seeded(x, a, b);
      const HdMatrix g = chart.metric_at(h);
      if (g.size() != n) throw ShapeError("chart metric has the wrong size");
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const HyperDual& e = g(i, j);
          if (a == b) {
            jet.g(i, j) = e.v;
            jet.d[static_cast<std::size_t>(a)](i, j) = e.d1;
          }
          jet.dd[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)](i, j) = e.d12;
          jet.dd[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)](i, j) = e.d12;
        }
      }
    }
  }

  const double det = jet.g.determinant();
  if (!(std::abs(det) > 1e-12) || !std::isfinite(det)) {
    throw DegeneracyError("metric is degenerate at the query point (|det g| = " +
                          std::to_string(std::abs(det)) + ")");
  }
  jet.inverse = jet.g.inverse();
  return jet;
}

namespace {

Tensor3 gamma_from_jet(const MetricJet& jet) {
  const int n = static_cast<int>(jet.g.rows());
  Tensor3 G(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int l = 0; l < n; ++l) {
          s += jet.inverse(k, l) * (jet.d[static_cast<std::size_t>(i)](j, l) +
                                    jet.d[static_cast<std::size_t>(j)](i, l) -
                                    jet.d[static_cast<std::size_t>(l)](i, j));
        }
        G(k, i, j) = 0.5 * s;
      }
  return G;
}

}  // namespace

Tensor3 christoffel(const CoordinateChart& chart, std::span<const double> x) {
  return gamma_from_jet(metric_jet(chart, x));
}

CurvatureTensors riemann_oracle(const CoordinateChart& chart, std::span<const double> x) {
  CurvatureTensors c;
  c.jet = metric_jet(chart, x);
  const auto& jet = c.jet;
  const int n = chart.dim;
  c.gamma = gamma_from_jet(jet);

  // ∂_m Γ^k_{ij} = ½ ∂_m g^{kl} T_{ijl} + ½ g^{kl} ∂_m T_{ijl},
  // T_{ijl} = ∂_i g_{jl} + ∂_j g_{il} − ∂_l g_{ij},  ∂_m g^{-1} = −g^{-1} ∂_m g g^{-1}.
  c.dgamma.assign(static_cast<std::size_t>(n), Tensor3(n));
  for (int m = 0; m < n; ++m) {
    const auto um = static_cast<std::size_t>(m);
    const Eigen::MatrixXd dinv = -jet.inverse * jet.d[um] * jet.inverse;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double s = 0.0;
          for (int l = 0; l < n; ++l) {
            const auto ui = static_cast<std::size_t>(i);
            const auto uj = static_cast<std::size_t>(j);
            const auto ul = static_cast<std::size_t>(l);
            const double t = jet.d[ui](j, l) + jet.d[uj](i, l) - jet.d[ul](i, j);
            const double dt = jet.dd[um][ui](j, l) + jet.dd[um][uj](i, l) - jet.dd[um][ul](i, j);
            s += dinv(k, l) * t + jet.inverse(k, l) * dt;
          }
          c.dgamma[um](k, i, j) = 0.5 * s;
        }
  }

  c.riemann = Tensor4(n);
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double s = c.dgamma[static_cast<std::size_t>(i)](l, j, k) -
                     c.dgamma[static_cast<std::size_t>(j)](l, i, k);
          for (int m = 0; m < n; ++m) {
            s += c.gamma(l, i, m) * c.gamma(m, j, k) - c.gamma(l, j, m) * c.gamma(m, i, k);
          }
          c.riemann(l, i, j, k) = s;
        }

  c.ricci = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) c.ricci(j, k) += c.riemann(i, i, j, k);
  return c;
}

double CurvatureTensors::lowered(int l, int i, int j, int k) const {
  double s = 0.0;
  for (int m = 0; m < dim(); ++m) s += jet.g(l, m) * riemann(m, i, j, k);
  return s;
}

std::vector<double> CurvatureTensors::apply(std::span<const double> A, std::span<const double> B,
                                            std::span<const double> C) const {
  const int n = dim();
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    const double a = A[static_cast<std::size_t>(i)];
    if (a == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      const double ab = a * B[static_cast<std::size_t>(j)];
      if (ab == 0.0) continue;
      for (int k = 0; k < n; ++k) {
        const double abc = ab * C[static_cast<std::size_t>(k)];
        if (abc == 0.0) continue;
        for (int l = 0; l < n; ++l) out[static_cast<std::size_t>(l)] += abc * riemann(l, i, j, k);
      }
    }
  }
  return out;
}

double CurvatureTensors::form(std::span<const double> A, std::span<const double> B,
                              std::span<const double> C, std::span<const double> D) const {
  const auto r = apply(A, B, C);
  return quad(jet.g, r, D);
}

double CurvatureTensors::ricci_form(std::span<const double> A, std::span<const double> B) const {
  return quad(ricci, A, B);
}

double null_sectional_oracle(const CurvatureTensors& c, std::span<const double> L,
                             std::span<const double> S) {
  const auto n = static_cast<std::size_t>(c.dim());
  if (L.size() != n || S.size() != n) throw ShapeError("plane vectors do not match the chart");
  const double gLL = quad(c.jet.g, L, L);
  const double gLS = quad(c.jet.g, L, S);
  const double gSS = quad(c.jet.g, S, S);
  if (std::abs(gLL) > 1e-10 * std::max(1.0, quad_magnitude(c.jet.g, L, L))) {
    throw ValidationError("L is not null (g(L,L) = " + std::to_string(gLL) + ")");
  }
  if (std::abs(gLS) > 1e-10 * std::max(1.0, quad_magnitude(c.jet.g, L, S))) {
    throw ValidationError("S is not orthogonal to L (g(L,S) = " + std::to_string(gLS) + ")");
  }
  if (!(gSS > 0.0)) throw ValidationError("S is not spacelike");
  return c.form(L, S, S, L) / gSS;
}

double null_sectional_oracle(const CoordinateChart& chart, std::span<const double> x,
                             std::span<const double> L, std::span<const double> S) {
  return null_sectional_oracle(riemann_oracle(chart, x), L, S);
}

namespace {

struct ScalarJet {
  Eigen::VectorXd d;
  Eigen::MatrixXd dd;
};

ScalarJet scalar_jet(std::span<const double> x, const ScalarField& phi) {
  const int n = static_cast<int>(x.size());
  ScalarJet s{Eigen::VectorXd::Zero(n), Eigen::MatrixXd::Zero(n, n)};
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      const auto h = seeded(x, a, b);
      const HyperDual r = phi(h);
      if (a == b) s.d(a) = r.d1;
      s.dd(a, b) = r.d12;
      s.dd(b, a) = r.d12;
    }
  return s;
}

}  // namespace

Eigen::MatrixXd hessian_oracle(const CoordinateChart& chart, std::span<const double> x,
                               const ScalarField& phi) {
  const MetricJet jet = metric_jet(chart, x);
  const Tensor3 G = gamma_from_jet(jet);
  const ScalarJet s = scalar_jet(x, phi);
  const int n = chart.dim;
  Eigen::MatrixXd H = s.dd;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) H(i, j) -= G(k, i, j) * s.d(k);
  return H;
}

double laplacian_oracle(const CoordinateChart& chart, std::span<const double> x,
                        const ScalarField& phi) {
  const Eigen::MatrixXd H = hessian_oracle(chart, x, phi);
  const Eigen::MatrixXd ginv = chart.metric(x).inverse();
  return (ginv.cwiseProduct(H)).sum();
}

Eigen::VectorXd gradient_oracle(const CoordinateChart& chart, std::span<const double> x,
                                const ScalarField& phi) {
  require_dim(chart, x);
  const ScalarJet s = scalar_jet(x, phi);
  const MetricJet jet = metric_jet(chart, x);
  return jet.inverse * s.d;
}

OracleResiduals oracle_residuals(const CurvatureTensors& c) {
  OracleResiduals r;
  const int n = c.dim();
  r.scale = c.scale();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        r.gamma_symmetry = std::max(r.gamma_symmetry, std::abs(c.gamma(k, i, j) - c.gamma(k, j, i)));

  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const double R = c.lowered(l, i, j, k);
          r.antisym_first_pair = std::max(r.antisym_first_pair, std::abs(R + c.lowered(l, j, i, k)));
          r.antisym_outer_pair = std::max(r.antisym_outer_pair, std::abs(R + c.lowered(k, i, j, l)));
          r.bianchi = std::max(r.bianchi, std::abs(c.riemann(l, i, j, k) + c.riemann(l, j, k, i) +
                                                   c.riemann(l, k, i, j)));
        }
  r.ricci_symmetry = (c.ricci - c.ricci.transpose()).cwiseAbs().maxCoeff();

  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = c.jet.d[static_cast<std::size_t>(m)](i, j);
        for (int p = 0; p < n; ++p) {
          s -= c.gamma(p, m, i) * c.jet.g(p, j) + c.gamma(p, m, j) * c.jet.g(i, p);
        }
        r.metric_compatibility = std::max(r.metric_compatibility, std::abs(s));
      }
  return r;
}

}  // namespace warpcurv
