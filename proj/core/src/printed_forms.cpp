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


// Closed forms exactly as displayed, typos included. Symbols the displays
// leave implicit are filled in as documented per function.

#include <cmath>

#include "warpcurv/null_sectional.hpp"

namespace warpcurv::printed {
namespace {

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

// Shared body of the multiply warped display; `last` is the coefficient in
// front of [g_F(W,V)^2 - g_F(V,V) g_F(W,W)] for one fiber.
template <class Last>
NullCurvatureResult theorem_body(const PlaneTerms& t, Last last) {
  double wv = 0, vv = 0, ww = 0, cross = 0, curv = 0, grad = 0, den = -t.y * t.y;
  for (std::size_t k = 0; k < t.fibers.size(); ++k) {
    const auto& a = t.fibers[k];
    const double Hty = t.y * a.ddb;       // H^{b}(∂_t, Y)
    const double Hyy = t.y * t.y * a.ddb;  // H^{b}(Y, Y)
    wv += a.b * a.gVW * Hty;
    vv += a.b * a.gVV * Hyy;
    ww += -a.b * a.ddb * a.gWW;
    curv += a.b * a.b * a.RF;
    grad += -last(a) * (a.gVW * a.gVW - a.gVV * a.gWW);
    den += a.b * a.b * a.gWW;
    for (std::size_t j = 0; j < t.fibers.size(); ++j) {
      if (j == k) continue;
      const auto& c = t.fibers[j];
      cross += -a.b * c.db * c.db * a.gVV * c.gWW;
    }
  }
  NullCurvatureResult r;
  r.denominator = den;
  r.breakdown = {{"hessian_WV_a", wv}, {"hessian_VV", vv},     {"hessian_WW", ww},
                 {"hessian_WV_b", wv}, {"cross_fiber", cross}, {"fiber_curvature", curv},
                 {"fiber_gradient", grad}};
  return r;
}

}  // namespace

NullCurvatureResult theorem(const PlaneTerms& t) {
  NullCurvatureResult r = theorem_body(
      t, [](const PlaneTerms::Fiber& a) { return a.b * a.b * a.db * a.db * a.ddb; });
  r.notes.push_back("hessian_WV term displayed twice (indices k and i); both kept");
  return finish(r, t);
}

// Y = h∂_t display. The denominator prints -h''; h is taken constant along
// I at the point, so that term is zero.
NullCurvatureResult theorem_h(const PlaneTerms& t) {
  NullCurvatureResult r = theorem_body(t, [](const PlaneTerms::Fiber& a) {
    return a.b * std::pow(a.db, 4) * a.ddb;
  });
  r.denominator += t.y * t.y;  // drop the -h^2 that theorem_body put in
  r.notes.push_back("denominator printed as -h'' + sum b^2 g_F(W,W); h'' taken as 0");
  return finish(r, t);
}

NullCurvatureResult grw(const PlaneTerms& t) {
  const auto& a = t.fibers.at(0);
  NullCurvatureResult r;
  r.denominator = -t.y * t.y + a.b * a.b * a.gWW;
  r.breakdown = {{"hessian_WW", -a.b * a.ddb * a.gWW},
                 {"fiber_curvature", a.b * a.b * a.RF},
                 {"hessian_VV_YY", a.b * a.gVV * t.y * t.y * a.ddb},
                 {"fiber_gradient",
                  a.b * a.b * a.db * a.db * (a.gVW * a.gVW - a.gWW / (a.b * a.b))}};
  return finish(r, t);
}

// φ' and φ'' do not appear in the display (read as φ' = 1, φ'' = 0). The
// Hessian symbols H^{φ^p} are evaluated in full. Denominator read as
// Σ_j [φ^{2p_j} g_I(Y,Y) + g_F(W_j,W_j)].
NullCurvatureResult kasner(const PlaneTerms& t) {
  const double phi = t.phi;
  double wv = 0, vv = 0, ww = 0, cross = 0, curv = 0, grad = 0, den = 0;
  for (std::size_t k = 0; k < t.fibers.size(); ++k) {
    const auto& a = t.fibers[k];
    const double p = t.exponents[k];
    const double bp = std::pow(phi, p);
    wv += bp * a.gVW * t.y * a.ddb;
    vv += bp * a.gVV * t.y * t.y * a.ddb;
    ww += -bp * p * (p - 1.0) * std::pow(phi, p - 2.0) * a.gWW;
    curv += std::pow(phi, 2.0 * p) * a.RF;
    grad += -std::pow(phi, 2.0 * p) * p * p * std::pow(phi, 2.0 * (p - 1.0)) * p * (p - 1.0) *
            std::pow(phi, p - 2.0) * (a.gVW * a.gVW - a.gVV * a.gWW);
    den += std::pow(phi, 2.0 * p) * (-t.y * t.y) + a.gWW;
    for (std::size_t j = 0; j < t.fibers.size(); ++j) {
      if (j == k) continue;
      const double q = t.exponents[j];
      cross += -bp * q * q * std::pow(phi, 2.0 * (q - 1.0)) * a.gVV * t.fibers[j].gWW;
    }
  }
  NullCurvatureResult r;
  r.denominator = den;
  r.breakdown = {{"hessian_WV_a", wv}, {"hessian_VV", vv},     {"hessian_WW", ww},
                 {"hessian_WV_b", wv}, {"cross_fiber", cross}, {"fiber_curvature", curv},
                 {"fiber_gradient", grad}};
  r.notes.push_back("phi' = 1, phi'' = 0 implied by the display");
  return finish(r, t);
}

// f in the display is the ∂_t coefficient of S. No denominator is
// displayed; the single-fiber g(S,S) is used.
NullCurvatureResult type1(const PlaneTerms& t) {
  const auto& a = t.fibers.at(0);
  const double bb = a.b * a.ddb;
  NullCurvatureResult r;
  r.denominator = -t.y * t.y + a.b * a.b * a.gWW;
  r.breakdown = {{"hessian_VV", t.y * t.y * bb * a.gVV},
                 {"hessian_WW", -bb * a.gWW},
                 {"hessian_VW", bb * a.gVW},
                 {"fiber_curvature", a.b * a.b * a.RF},
                 {"fiber_gradient",
                  -a.b * a.b * a.db * a.db * (a.gVW * a.gVW - a.gVV * a.gVW)}};
  r.notes.push_back("denominator not displayed; -h^2 + b^2 g_F(W,W) used");
  return finish(r, t);
}

NullCurvatureResult type2(const PlaneTerms& t) {
  const auto& x = t.fibers.at(0);
  const auto& F = t.fibers.at(1);
  const double y = t.y;
  const double xa = x.b * x.v1 * x.w1 * y * x.ddb;
  NullCurvatureResult r;
  r.denominator = -y * y + x.b * x.b * x.w1 * x.w1 + F.b * F.b * F.gWW;
  r.breakdown = {{"x_hessian_a", xa},
                 {"F_hessian_VV", F.b * y * y * F.ddb * F.gVV},
                 {"x_hessian_hh", -x.b * x.ddb * x.w1 * x.w1},
                 {"F_hessian_WW", -F.b * F.ddb * F.gWW},
                 {"x_hessian_b", xa},
                 {"F_hessian_VW", F.b * F.ddb * F.gVW},
                 {"fiber_curvature", F.b * F.b * F.RF},
                 {"fiber_gradient", -F.b * F.b * F.db * F.db * (F.gVW * F.gVW - F.gVV * F.gWW)},
                 {"x_hessian_ff", 0.0},
                 {"cross_fiber", 0.0}};
  return finish(r, t);
}

// Denominator displayed as the product -f^2 Σ φ^{2p_j} h_j^2.
NullCurvatureResult type3(const PlaneTerms& t) {
  const double phi = t.phi, y = t.y;
  double t1 = 0, t2 = 0, t3 = 0, t4 = 0, t5 = 0, sum = 0;
  for (std::size_t i = 0; i < t.fibers.size(); ++i) {
    const auto& a = t.fibers[i];
    const double p = t.exponents[i];
    const double bp = std::pow(phi, p);
    const double dd = p * (p - 1.0) * std::pow(phi, p - 2.0);
    t1 += -bp * a.v1 * a.w1;
    t2 += bp * a.v1 * a.v1 * y * y * dd;
    t3 += -dd * bp * a.w1 * a.w1;
    t4 += bp * a.v1 * a.w1 * y * dd;
    sum += std::pow(phi, 2.0 * p) * a.w1 * a.w1;
    for (std::size_t j = 0; j < t.fibers.size(); ++j) {
      if (j == i) continue;
      const double q = t.exponents[j];
      t5 += -bp * a.v1 * a.v1 * q * q * std::pow(phi, 2.0 * q - 2.0) * t.fibers[j].w1 *
            t.fibers[j].w1;
    }
  }
  NullCurvatureResult r;
  r.denominator = -y * y * sum;
  r.breakdown = {{"t1", t1}, {"t2", t2}, {"t3", t3}, {"t4", t4}, {"t5", t5}};
  return finish(r, t);
}

// g_I = -dt^2, Y = y∂_t: g_I(Y,∂_t) = -y, g_I(Y,Y) = -y^2.
NullCurvatureResult ssst(const PlaneTerms& t) {
  const double gYt = -t.y, gYY = -t.y * t.y;
  NullCurvatureResult r;
  r.denominator = -t.f * t.f * t.y * t.y + t.fibers.at(0).gWW;
  r.breakdown = {{"grad_f", -t.grad_f_sq * (gYt * gYt + gYY)},
                 {"hessian_VV", -t.f * gYY * t.HVV},
                 {"hessian_VW_pair", -gYt * t.HVW + gYt * t.HVW},
                 {"hessian_WW", t.HWW / t.f},
                 {"fiber_curvature", -t.fibers.at(0).RF}};
  r.notes.push_back("the two H(V,W) terms cancel identically");
  return finish(r, t);
}

NullCurvatureResult ssst_unit(const PlaneTerms& t) {
  const double gYt = -t.y, gYY = -t.y * t.y;
  NullCurvatureResult r;
  r.denominator = 1.0;
  r.breakdown = {{"grad_f", -t.grad_f_sq * (gYt * gYt + gYY)},
                 {"hessian_VV", -t.f * gYY * t.HVV},
                 {"hessian_VW_pair", 0.0},
                 {"hessian_WW", -t.HWW / t.f},
                 {"fiber_curvature", -t.fibers.at(0).RF}};
  return finish(r, t);
}

}  // namespace warpcurv::printed
