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

#include <json.hpp>

#include "warpcurv/manifold.hpp"

namespace warpcurv {

// Spec documents:
//   {"kind", "base": {"t1", "t2"}, "warpings": [{"form", "params"}],
//    "fibers": [{"dim", "model", "radius"}], "kasner_exponents"}
// Infinite interval ends are written as null. For Kasner the single
// warping entry is the shared scale φ. Custom fields and fibers are
// library-only and raise CapabilityError.
nlohmann::json scalar_to_json(const ScalarField& field);
ScalarField scalar_from_json(const nlohmann::json& doc);

nlohmann::json fiber_to_json(const FiberSpec& fiber);
FiberSpec fiber_from_json(const nlohmann::json& doc);

nlohmann::json spec_to_json(const ManifoldSpec& spec);
// Parses and validates; malformed documents raise ValidationError.
ManifoldSpec spec_from_json(const nlohmann::json& doc);

ManifoldSpec load_spec_file(const std::string& path);

nlohmann::json point_to_json(const Point& p);
nlohmann::json vector_to_json(const TangentVector& v);

}  // namespace warpcurv
