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
#include <optional>
#include <string>
#include <vector>

#include "warpcurv/manifold.hpp"

namespace warpcurv {

struct NamedTerm {
  std::string name;
  double value = 0.0;
};

/// g(R(L,S)S,L), g(S,S) and their quotient, with a per-term breakdown.
struct NullCurvatureResult {
  double numerator = 0.0;
  double denominator = 0.0;
  double value = 0.0;
  std::vector<NamedTerm> breakdown;
  std::vector<std::string> notes;

  [[nodiscard]] std::optional<double> term(const std::string& name) const;
};

enum class FormulaPath { as_derived, as_printed };
std::string to_string(FormulaPath path);
FormulaPath path_from_string(const std::string& name);

/// Closed-form evaluators that share one term vocabulary. Each form has an
/// as-derived and an as-printed variant with matching term names.
enum class NullForm {
  theorem,            // multiply warped, S = Y + ΣW_j
  theorem_h,          // multiply warped, Y = h ∂_t
  grw,                // single fiber
  kasner,             // φ^{p_i} warpings
  type1,              // fiber signature (3)
  type2,              // fiber signature (1,2)
  type3,              // fiber signature (1,1,1), Kasner exponents
  ssst,               // static, general S
  ssst_h,             // static, Y = h ∂_t
  ssst_unit,          // static, S rescaled to g(S,S) = 1
};
std::string to_string(NullForm form);

// Default reference frame: −∂_t on interval bases, −f^{-1}∂_t for SSST,
// −e_0/|e_0| on a generic base whose first coordinate is timelike.
TangentVector default_frame(const ManifoldSpec& spec, const Point& p);

// The L in C(U) along `direction`: g(L,L) = 0 and g(L,U) = −1.
TangentVector normalize_null(const ManifoldSpec& spec, const Point& p, const TangentVector& U,
                             const TangentVector& direction);

// Adds the multiple of U that makes S_candidate orthogonal to L.
NullPlane make_degenerate_plane(const ManifoldSpec& spec, const Point& p, const TangentVector& L,
                                const TangentVector& S_candidate,
                                const std::optional<TangentVector>& U = std::nullopt);

// Recomputes the cached products and checks the NullPlane invariants.
// The g(L,U) = −1 check applies only when frame_U is set.
NullPlane refresh(const ManifoldSpec& spec, NullPlane plane);
void validate_plane(const ManifoldSpec& spec, const NullPlane& plane);

// Plane with L → cL (S unchanged); the result is no longer frame-normalized.
NullPlane scale_null(const ManifoldSpec& spec, const NullPlane& plane, double c);
// Plane with S → S + αL.
NullPlane shift_spacelike(const ManifoldSpec& spec, const NullPlane& plane, double alpha);

// Random degenerate plane in C(U); identical seeds give identical planes.
NullPlane sample_plane(const ManifoldSpec& spec, const Point& p, std::uint64_t seed,
                       const std::optional<TangentVector>& U = std::nullopt);

/// Scalars of a plane on an interval-base spec, evaluated after rescaling
/// L so its ∂_t coefficient is −1 (−f^{-1} for SSST). Numerators computed
/// from these are divided by null_scale² to refer back to the given L.
struct PlaneTerms {
  struct Fiber {
    int dim = 0;
    double b = 1.0, db = 0.0, ddb = 0.0;
    double gVV = 0.0, gWW = 0.0, gVW = 0.0;
    double RF = 0.0;  // g_F(R_F(V,W)W,V)
    double v1 = 0.0, w1 = 0.0;  // components, one-dimensional fibers only
  };
  double null_scale = 1.0;  // c with L_normalized = c·L
  double y = 0.0;           // ∂_t coefficient of S
  std::vector<Fiber> fibers;
  // Kasner scale φ and its derivatives.
  double phi = 0.0, dphi = 0.0, ddphi = 0.0;
  std::vector<double> exponents;
  // SSST potential data at the fiber point.
  double f = 0.0, grad_f_sq = 0.0, HVV = 0.0, HWW = 0.0, HVW = 0.0;
};
PlaneTerms plane_terms(const ManifoldSpec& spec, const NullPlane& plane);

NullCurvatureResult null_curvature_generic(const ManifoldSpec& spec, const NullPlane& plane);

NullCurvatureResult mgrw_null_curvature(const ManifoldSpec& spec, const NullPlane& plane,
                                        FormulaPath path = FormulaPath::as_derived);
NullCurvatureResult mgrw_null_curvature_h(const ManifoldSpec& spec, const NullPlane& plane,
                                          FormulaPath path = FormulaPath::as_derived);
NullCurvatureResult grw_null_curvature(const ManifoldSpec& spec, const NullPlane& plane,
                                       FormulaPath path = FormulaPath::as_derived);
NullCurvatureResult kasner_null_curvature(const ManifoldSpec& spec, const NullPlane& plane,
                                          FormulaPath path = FormulaPath::as_derived);
NullCurvatureResult type1_null_curvature(const ManifoldSpec& spec, const NullPlane& plane,
                                         FormulaPath path = FormulaPath::as_derived);
NullCurvatureResult type2_null_curvature(const ManifoldSpec& spec, const NullPlane& plane,
                                         FormulaPath path = FormulaPath::as_derived);
NullCurvatureResult type3_null_curvature(const ManifoldSpec& spec, const NullPlane& plane,
                                         FormulaPath path = FormulaPath::as_derived);
NullCurvatureResult ssst_null_curvature(const ManifoldSpec& spec, const NullPlane& plane,
                                        FormulaPath path = FormulaPath::as_derived);
// L = −f^{-1}∂_t + V, S = h∂_t + W with the plane built from these.
NullCurvatureResult ssst_null_curvature_h(const ManifoldSpec& spec, const Point& p, double h,
                                          const std::vector<double>& V,
                                          const std::vector<double>& W,
                                          FormulaPath path = FormulaPath::as_derived);
// S rescaled so that g(S,S) = 1.
NullCurvatureResult ssst_null_curvature_unit(const ManifoldSpec& spec, const NullPlane& plane,
                                             FormulaPath path = FormulaPath::as_derived);

NullCurvatureResult evaluate_form(NullForm form, const ManifoldSpec& spec, const NullPlane& plane,
                                  FormulaPath path);
// Forms whose preconditions the spec meets, most specific last.
std::vector<NullForm> applicable_forms(const ManifoldSpec& spec);
// The evaluator matching spec.kind (generic kinds use null_curvature_generic).
NullCurvatureResult specialized_null_curvature(const ManifoldSpec& spec, const NullPlane& plane);

struct IsotropyResult {
  double mean = 0.0;
  double max_deviation = 0.0;
  int planes = 0;
};
IsotropyResult isotropy_scan(const ManifoldSpec& spec, const Point& p, const TangentVector& U,
                             int n_planes, std::uint64_t seed);

// Kasner exponent constraints Σp = Σp² = 1 within `tol`.
bool kasner_constraint_holds(const std::vector<double>& p, double tol = 1e-12);

namespace printed {
// Displayed forms, evaluated literally from plane terms (numerator already
// referred back to the caller's L).
NullCurvatureResult theorem(const PlaneTerms& t);
NullCurvatureResult theorem_h(const PlaneTerms& t);
NullCurvatureResult grw(const PlaneTerms& t);
NullCurvatureResult kasner(const PlaneTerms& t);
NullCurvatureResult type1(const PlaneTerms& t);
NullCurvatureResult type2(const PlaneTerms& t);
NullCurvatureResult type3(const PlaneTerms& t);
NullCurvatureResult ssst(const PlaneTerms& t);
NullCurvatureResult ssst_unit(const PlaneTerms& t);
}  // namespace printed

}  // namespace warpcurv
