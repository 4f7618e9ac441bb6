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
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "warpcurv/manifold.hpp"

namespace warpcurv {

enum class FactQuantity {
  null_curvature,      // K on sampled degenerate planes
  null_offset_fiber,   // K_U − K_F/b² (K_U − K_F for SSST) on Y = 0 planes
  ricci,               // every component of Ric
  isotropy_deviation,  // max |K_U − mean| over sampled planes
  anisotropy_ratio,    // isotropy_deviation / |mean|
  line_element,        // chart metric vs a reference matrix
  oracle_agreement,    // relative |K_specialized − K_oracle|
};
std::string to_string(FactQuantity q);

enum class Comparison { equal, greater };

/// How a fact was established.
enum class FactBasis { identity, derived, closed_form };
std::string to_string(FactBasis b);

struct KnownFact {
  FactQuantity quantity = FactQuantity::null_curvature;
  std::string region;  // human-readable
  double expected = 0.0;
  double tolerance = 1e-10;
  Comparison comparison = Comparison::equal;
  FactBasis basis = FactBasis::identity;
  std::vector<double> at_t;  // fixed base coordinates; empty samples them
  std::function<Eigen::MatrixXd(const Point&)> reference_metric;  // line_element only
};

struct CatalogEntry {
  std::string name;
  std::string description;
  ManifoldSpec spec;
  std::vector<KnownFact> known_facts;
  double t_min = -1.0, t_max = 1.0;  // sampling range of the base coordinate

  [[nodiscard]] Point sample_point(std::mt19937_64& rng) const;
  [[nodiscard]] Point sample_point_at(double t, std::mt19937_64& rng) const;
};

inline constexpr double kSchwarzschildMass = 1.0;

const std::vector<CatalogEntry>& catalog();
// Throws ValidationError for unknown names.
const CatalogEntry& catalog_entry(const std::string& name);
CatalogEntry schwarzschild_exterior(double mass);

struct FactOutcome {
  std::string quantity;
  std::string region;
  std::string path;  // "specialized", "oracle", or "both"
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string comparison;
  bool pass = false;
};

struct EntryReport {
  std::string name;
  std::vector<FactOutcome> outcomes;
  [[nodiscard]] bool all_pass() const;
};

// Evaluates every known fact through the specialized formulas and the
// oracle. Failures are report content, never exceptions.
EntryReport validate_entry(const CatalogEntry& entry, std::uint64_t seed = 0x5eed,
                           int points = 4, int planes = 16);

}  // namespace warpcurv
