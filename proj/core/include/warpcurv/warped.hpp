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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "warpcurv/manifold.hpp"
#include "warpcurv/oracle.hpp"

namespace warpcurv {

/// Which factor of the product a lifted object lives on.
struct Factor {
  enum class Kind { base, fiber };
  Kind kind = Kind::base;
  int index = 0;  // fiber number, ignored for the base

  static Factor base() { return {Kind::base, 0}; }
  static Factor fiber(int i) { return {Kind::fiber, i}; }
  [[nodiscard]] bool is_base() const { return kind == Kind::base; }
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Lift of a vector from exactly one factor. Lifts are treated as
/// coordinate fields with constant coefficients in their factor chart.
struct LiftedField {
  Factor origin;
  std::vector<double> components;

  static LiftedField base(std::vector<double> c) { return {Factor::base(), std::move(c)}; }
  static LiftedField fiber(int i, std::vector<double> c) { return {Factor::fiber(i), std::move(c)}; }
};

/// Lift of a scalar function from one factor (φ∘π or ψ_i∘σ_i).
struct LiftedScalar {
  Factor origin;
  ScalarField field;
};

// Decomposes v into its nonzero single-factor lifts.
std::vector<LiftedField> decompose(const TangentVector& v);
TangentVector to_vector(const ManifoldSpec& spec, const LiftedField& field);

/// Base-level quantities for a warping function on the interval I with
/// g_B = −dt²: every index raise through −dt² happens here.
struct IntervalReductions {
  double gradient = 0.0;      // grad_B b = −b' ∂_t  (coefficient)
  double norm_squared = 0.0;  // ‖grad_B b‖² = −(b')²
  double hessian = 0.0;       // H_B^b(∂_t, ∂_t) = b''
  double laplacian = 0.0;     // Δ_B b = −b''
  double nabla_gradient = 0.0;  // ∇^B_{∂_t} grad_B b = −b'' ∂_t (coefficient)
};
IntervalReductions interval_reductions(const Jet& b);

/// The closed-form curvature cases of a multiply warped product, in the
/// order they are usually listed.
enum class CurvatureCase {
  base_only = 1,          // R(X,Y)Z = R_B(X,Y)Z
  fiber_base_base = 2,    // R(V,X)Y = −H_B^{b_i}(X,Y)/b_i V
  mixed_distinct = 3,     // R(X,V)W = R(V,W)X = R(V,X)W = 0, i ≠ j
  base_base_fiber = 4,    // R(X,Y)V = 0
  same_fiber_base = 5,    // R(V,W)X = 0, i = j
  same_fiber_other = 6,   // R(V,W)U = 0, i = j ≠ k
  cross_fiber = 7,        // R(U,V)W = −g(V,W) g_B(grad b_i, grad b_k)/(b_i b_k) U
  base_fiber_fiber = 8,   // R(X,V)W = −g(V,W)/b_i ∇^B_X grad_B b_i
  single_fiber = 9,       // R(V,W)U = R_{F_i}(V,W)U + ‖grad b_i‖²/b_i² (g(V,U)W − g(W,U)V)
};

/// Dispatch of a factor pattern (A,B,C) onto a case. `negated` marks
/// patterns reached through R(A,B) = −R(B,A); `all_distinct` marks the
/// three-distinct-fiber pattern, which vanishes by the same argument as
/// case 6 applied to the Bianchi identity.
struct CaseDispatch {
  CurvatureCase which;
  bool negated = false;
  bool all_distinct = false;
};
CaseDispatch classify(Factor a, Factor b, Factor c);

/// Point-local geometric data of a warped product, computed from the
/// factor charts only (the product chart is never assembled).
class WarpedGeometry {
 public:
  WarpedGeometry(const ManifoldSpec& spec, const Point& p);

  [[nodiscard]] const ManifoldSpec& spec() const { return *spec_; }
  [[nodiscard]] const Point& point() const { return point_; }

  // ∇_A B for lifted constant-coefficient fields.
  [[nodiscard]] TangentVector covariant_derivative(const LiftedField& a, const LiftedField& b) const;
  // R(A,B)C for lifted fields, together with the case that produced it.
  [[nodiscard]] TangentVector curvature(const LiftedField& a, const LiftedField& b,
                                        const LiftedField& c, CaseDispatch* dispatch = nullptr) const;
  // R(X,Y)Z for arbitrary vectors by multilinear expansion over lifts.
  [[nodiscard]] TangentVector curvature(const TangentVector& x, const TangentVector& y,
                                        const TangentVector& z) const;
  // g(R(X,Y)Z, W)
  [[nodiscard]] double curvature_form(const TangentVector& x, const TangentVector& y,
                                      const TangentVector& z, const TangentVector& w) const;
  [[nodiscard]] double ricci(const LiftedField& a, const LiftedField& b) const;
  [[nodiscard]] double ricci(const TangentVector& x, const TangentVector& y) const;
  [[nodiscard]] TangentVector gradient(const LiftedScalar& s) const;
  [[nodiscard]] double laplacian(const LiftedScalar& s) const;
  [[nodiscard]] double metric(const TangentVector& x, const TangentVector& y) const;

 private:
  // Canonical form: SSST is rewritten as F ×_f I with I carrying −dt², so
  // every kind becomes B ×_{b_1} F_1 × … with a well-defined base.
  struct Block {
    int dim = 0;
    Eigen::MatrixXd g;
    Tensor3 gamma;
    Tensor4 riemann;  // R^l_{ijk}
    Eigen::MatrixXd ricci;
  };
  struct Warp {
    double value = 0.0;
    Eigen::VectorXd differential;  // ∂_a b
    Eigen::VectorXd gradient;      // grad_B b
    Eigen::MatrixXd hessian;       // H_B^b
    double laplacian = 0.0;
    double norm_squared = 0.0;
  };
  using CVec = std::vector<Eigen::VectorXd>;  // [0] base, [1 + i] fiber i

  [[nodiscard]] int canonical_block(const Factor& f) const;
  [[nodiscard]] CVec to_canonical(const TangentVector& v) const;
  [[nodiscard]] TangentVector from_canonical(const CVec& c) const;
  [[nodiscard]] CVec zero_canonical() const;
  [[nodiscard]] double cmetric(const CVec& x, const CVec& y) const;
  [[nodiscard]] double fiber_inner(int i, const Eigen::VectorXd& v, const Eigen::VectorXd& w) const;
  [[nodiscard]] CVec curvature_canonical(int ba, const Eigen::VectorXd& a, int bb,
                                         const Eigen::VectorXd& b, int bc, const Eigen::VectorXd& c,
                                         CaseDispatch* dispatch) const;
  [[nodiscard]] double ricci_canonical(int ba, const Eigen::VectorXd& a, int bb,
                                       const Eigen::VectorXd& b) const;

  const ManifoldSpec* spec_;
  Point point_;
  bool swapped_ = false;  // SSST canonical form
  Block base_;
  std::vector<Block> fibers_;
  std::vector<Warp> warps_;
};

// Free-function forms of the module's operations.
TangentVector covariant_derivative(const ManifoldSpec& spec, const Point& p, const LiftedField& a,
                                   const LiftedField& b);
TangentVector gradient_lift(const ManifoldSpec& spec, const Point& p, const LiftedScalar& s);
double laplacian_lift(const ManifoldSpec& spec, const Point& p, const LiftedScalar& s);
TangentVector riemann_mwp(const ManifoldSpec& spec, const Point& p, const LiftedField& a,
                          const LiftedField& b, const LiftedField& c);
double ricci_mwp(const ManifoldSpec& spec, const Point& p, const LiftedField& a,
                 const LiftedField& b);
// Ric in flattened coordinates, from the closed forms.
Eigen::MatrixXd ricci_components(const ManifoldSpec& spec, const Point& p);
// g in flattened coordinates, from metric_eval.
Eigen::MatrixXd metric_components(const ManifoldSpec& spec, const Point& p);

}  // namespace warpcurv
