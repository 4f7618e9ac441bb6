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

#include <stdexcept>
#include <string>

namespace warpcurv {

// Base of every library error; CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Query point outside the chart domain or the base interval.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Component tuple lengths inconsistent with the manifold.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Input violates a documented invariant (spec fields, plane conditions).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Singular metric at the query point.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// Requested quantity needs data the manifold does not carry.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// A null vector or degenerate plane cannot be built from the inputs.
class ConstructionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Model-specific algebraic constraint (e.g. Kasner exponents) violated.
class ConstraintError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace warpcurv
