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

#include <cmath>

namespace warpcurv {

/// Second-order hyper-dual number  v + d1*e1 + d2*e2 + d12*e1e2  with
/// e1^2 = e2^2 = 0. Seeding one input with d1 = 1 and another with d2 = 1
/// yields exact first partials in d1/d2 and the mixed second partial in d12.
struct HyperDual {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d12 = 0.0;

  constexpr HyperDual() = default;
  constexpr HyperDual(double value) : v(value) {}  // NOLINT: implicit by design of the algebra
  constexpr HyperDual(double value, double e1, double e2, double e12)
      : v(value), d1(e1), d2(e2), d12(e12) {}

  HyperDual& operator+=(const HyperDual& o) {
    v += o.v;
    d1 += o.d1;
    d2 += o.d2;
    d12 += o.d12;
    return *this;
  }
  HyperDual& operator-=(const HyperDual& o) {
    v -= o.v;
    d1 -= o.d1;
    d2 -= o.d2;
    d12 -= o.d12;
    return *this;
  }
  HyperDual& operator*=(const HyperDual& o) {
    *this = HyperDual(v * o.v, v * o.d1 + d1 * o.v, v * o.d2 + d2 * o.v,
                      v * o.d12 + d1 * o.d2 + d2 * o.d1 + d12 * o.v);
    return *this;
  }
  HyperDual& operator/=(const HyperDual& o);
};

// Applies a scalar function given its value and first two derivatives at x.v.
constexpr HyperDual chain(const HyperDual& x, double f, double df, double ddf) {
  return {f, df * x.d1, df * x.d2, df * x.d12 + ddf * x.d1 * x.d2};
}

inline HyperDual operator-(const HyperDual& a) { return {-a.v, -a.d1, -a.d2, -a.d12}; }
inline HyperDual operator+(HyperDual a, const HyperDual& b) { return a += b; }
inline HyperDual operator-(HyperDual a, const HyperDual& b) { return a -= b; }
inline HyperDual operator*(HyperDual a, const HyperDual& b) { return a *= b; }

inline HyperDual reciprocal(const HyperDual& x) {
  const double inv = 1.0 / x.v;
  return chain(x, inv, -inv * inv, 2.0 * inv * inv * inv);
}

// Quotient rule with the value computed as a plain division.
inline HyperDual& HyperDual::operator/=(const HyperDual& o) {
  const double q = v / o.v;
  const double q1 = (d1 - q * o.d1) / o.v;
  const double q2 = (d2 - q * o.d2) / o.v;
  const double q12 = (d12 - q * o.d12 - q1 * o.d2 - q2 * o.d1) / o.v;
  *this = HyperDual(q, q1, q2, q12);
  return *this;
}
inline HyperDual operator/(HyperDual a, const HyperDual& b) { return a /= b; }

inline HyperDual sin(const HyperDual& x) {
  return chain(x, std::sin(x.v), std::cos(x.v), -std::sin(x.v));
}
inline HyperDual cos(const HyperDual& x) {
  return chain(x, std::cos(x.v), -std::sin(x.v), -std::cos(x.v));
}
inline HyperDual sinh(const HyperDual& x) {
  return chain(x, std::sinh(x.v), std::cosh(x.v), std::sinh(x.v));
}
inline HyperDual cosh(const HyperDual& x) {
  return chain(x, std::cosh(x.v), std::sinh(x.v), std::cosh(x.v));
}
inline HyperDual exp(const HyperDual& x) {
  const double e = std::exp(x.v);
  return chain(x, e, e, e);
}
inline HyperDual log(const HyperDual& x) {
  return chain(x, std::log(x.v), 1.0 / x.v, -1.0 / (x.v * x.v));
}
inline HyperDual sqrt(const HyperDual& x) {
  const double s = std::sqrt(x.v);
  return chain(x, s, 0.5 / s, -0.25 / (s * x.v));
}
// x^p for real p; requires x.v > 0 unless p is a non-negative integer.
inline HyperDual pow(const HyperDual& x, double p) {
  if (p == 0.0) return HyperDual(1.0);
  if (p == 1.0) return x;
  const double f = std::pow(x.v, p);
  const double df = p * std::pow(x.v, p - 1.0);
  const double ddf = p * (p - 1.0) * std::pow(x.v, p - 2.0);
  return chain(x, f, df, ddf);
}

}  // namespace warpcurv
