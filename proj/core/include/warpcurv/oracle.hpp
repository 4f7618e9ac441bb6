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

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "warpcurv/chart.hpp"
#include "warpcurv/scalar_field.hpp"

namespace warpcurv {

/// Dense n×n×n array, indexed (k, i, j) for Γ^k_{ij}.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n), a_(static_cast<std::size_t>(n * n * n), 0.0) {}
  [[nodiscard]] int size() const { return n_; }
  double& operator()(int k, int i, int j) { return a_[idx(k, i, j)]; }
  double operator()(int k, int i, int j) const { return a_[idx(k, i, j)]; }

 private:
  [[nodiscard]] std::size_t idx(int k, int i, int j) const {
    return static_cast<std::size_t>((k * n_ + i) * n_ + j);
  }
  int n_ = 0;
  std::vector<double> a_;
};

/// Dense n^4 array, indexed (l, i, j, k) for R^l_{ijk}.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int n) : n_(n), a_(static_cast<std::size_t>(n * n * n * n), 0.0) {}
  [[nodiscard]] int size() const { return n_; }
  double& operator()(int l, int i, int j, int k) { return a_[idx(l, i, j, k)]; }
  double operator()(int l, int i, int j, int k) const { return a_[idx(l, i, j, k)]; }
  [[nodiscard]] double max_abs() const;

 private:
  [[nodiscard]] std::size_t idx(int l, int i, int j, int k) const {
    return static_cast<std::size_t>(((l * n_ + i) * n_ + j) * n_ + k);
  }
  int n_ = 0;
  std::vector<double> a_;
};

/// g, g^{-1}, ∂g and ∂∂g at a point, all exact up to rounding.
struct MetricJet {
  std::vector<double> point;
  Eigen::MatrixXd g;
  Eigen::MatrixXd inverse;
  std::vector<Eigen::MatrixXd> d;                // d[m](i,j) = ∂_m g_ij
  std::vector<std::vector<Eigen::MatrixXd>> dd;  // dd[m][p](i,j) = ∂_m ∂_p g_ij
};

// Throws DegeneracyError when |det g| <= 1e-12.
MetricJet metric_jet(const CoordinateChart& chart, std::span<const double> x);

/// Connection and curvature of a chart at a point.
///
/// Convention: R(X,Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_[X,Y] Z, stored as
/// R(∂_i,∂_j)∂_k = R^l_{ijk} ∂_l; Ric_{jk} = R^i_{ijk}.
struct CurvatureTensors {
  MetricJet jet;
  Tensor3 gamma;
  std::vector<Tensor3> dgamma;  // dgamma[m](k,i,j) = ∂_m Γ^k_{ij}
  Tensor4 riemann;
  Eigen::MatrixXd ricci;

  [[nodiscard]] int dim() const { return gamma.size(); }
  // R_{lijk} = g_{lm} R^m_{ijk}
  [[nodiscard]] double lowered(int l, int i, int j, int k) const;
  // g(R(A,B)C, D)
  [[nodiscard]] double form(std::span<const double> A, std::span<const double> B,
                            std::span<const double> C, std::span<const double> D) const;
  // R(A,B)C as coordinate components.
  [[nodiscard]] std::vector<double> apply(std::span<const double> A, std::span<const double> B,
                                          std::span<const double> C) const;
  [[nodiscard]] double ricci_form(std::span<const double> A, std::span<const double> B) const;
  // Largest |R^l_{ijk}|, the scale for relative tolerances.
  [[nodiscard]] double scale() const { return riemann.max_abs(); }
};

Tensor3 christoffel(const CoordinateChart& chart, std::span<const double> x);
CurvatureTensors riemann_oracle(const CoordinateChart& chart, std::span<const double> x);

// g(R(L,S)S,L)/g(S,S) straight from the chart. Throws ValidationError
// unless g(L,L) ≈ 0, g(L,S) ≈ 0 (1e-10, relative to term size) and g(S,S) > 0.
double null_sectional_oracle(const CoordinateChart& chart, std::span<const double> x,
                             std::span<const double> L, std::span<const double> S);
double null_sectional_oracle(const CurvatureTensors& curvature, std::span<const double> L,
                             std::span<const double> S);

// H(φ)_{ij} = ∂_i∂_j φ − Γ^k_{ij} ∂_k φ
Eigen::MatrixXd hessian_oracle(const CoordinateChart& chart, std::span<const double> x,
                               const ScalarField& phi);
// Δφ = g^{ij} H_{ij}
double laplacian_oracle(const CoordinateChart& chart, std::span<const double> x,
                        const ScalarField& phi);
// (grad φ)^i = g^{ij} ∂_j φ
Eigen::VectorXd gradient_oracle(const CoordinateChart& chart, std::span<const double> x,
                                const ScalarField& phi);

/// Identity residuals of the oracle at one point (absolute, max over indices).
struct OracleResiduals {
  double gamma_symmetry = 0.0;     // Γ^k_{ij} − Γ^k_{ji}
  double antisym_first_pair = 0.0; // R_{lijk} + R_{ljik}
  double antisym_outer_pair = 0.0; // R_{lijk} + R_{kijl}
  double bianchi = 0.0;            // R^l_{ijk} + R^l_{jki} + R^l_{kij}
  double ricci_symmetry = 0.0;
  double metric_compatibility = 0.0;  // ∇_m g_ij
  double scale = 0.0;
};

OracleResiduals oracle_residuals(const CurvatureTensors& curvature);

// Agreement threshold for curvature values of magnitude `scale`.
inline double curvature_tolerance(double scale) { return std::max(1e-10, 1e-8 * scale); }

}  // namespace warpcurv
