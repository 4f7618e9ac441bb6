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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "warpcurv/hyperdual.hpp"

namespace warpcurv {

/// Dense square matrix of hyper-dual numbers, row-major.
class HdMatrix {
 public:
  HdMatrix() = default;
  explicit HdMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n)) {}

  [[nodiscard]] int size() const { return n_; }
  HyperDual& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const HyperDual& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i * n_ + j)];
  }

  [[nodiscard]] Eigen::MatrixXd values() const;

 private:
  int n_ = 0;
  std::vector<HyperDual> a_;
};

/// A coordinate patch with a metric evaluator. The evaluator receives
/// hyper-dual coordinates so every consumer can read exact first and
/// second partial derivatives of g_{ij}.
struct CoordinateChart {
  using MetricFn = std::function<HdMatrix(std::span<const HyperDual>)>;

  int dim = 0;
  MetricFn metric_at;

  [[nodiscard]] Eigen::MatrixXd metric(std::span<const double> x) const;
};

inline Eigen::MatrixXd HdMatrix::values() const {
  Eigen::MatrixXd m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).v;
  return m;
}

inline Eigen::MatrixXd CoordinateChart::metric(std::span<const double> x) const {
  std::vector<HyperDual> h(x.begin(), x.end());
  return metric_at(h).values();
}

}  // namespace warpcurv
