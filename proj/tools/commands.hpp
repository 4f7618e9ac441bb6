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
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "warpcurv/models.hpp"

namespace warpcurv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitDomain = 3;

inline constexpr const char* kToolVersion = "0.3.0";

// WARPCURV_SEED if set and numeric, otherwise 0x5eed.
std::uint64_t default_seed();

struct ModelOptions {
  std::string model;      // catalog name or path to a spec file
  std::optional<double> mass;  // schwarzschild_exterior only
};

// Resolves a catalog name or a JSON spec file into a catalog-style entry.
CatalogEntry resolve_model(const ModelOptions& m);

// "t=1,x=0.5" or "1,0.5,..." (flat order). Unlisted coordinates are
// sampled from the entry with `seed`.
Point parse_point(const CatalogEntry& entry, const std::string& text, std::uint64_t seed);
// Flat coordinate names: t, then x1..xn (aliases x,y,z and r,theta,phi).
int coordinate_index(const ManifoldSpec& spec, const std::string& name);

struct ReportOptions {
  ModelOptions model;
  std::string point;
  std::uint64_t seed = 0x5eed;
  int planes = 10;
  std::string format = "json";  // json | csv | text
};
nlohmann::json build_report(const ReportOptions& opts);
int cmd_report(const ReportOptions& opts, std::ostream& out, std::ostream& err);

struct CompareOptions {
  ModelOptions model;
  int samples = 100;
  std::uint64_t seed = 0x5eed;
  std::string path = "as-derived";  // as-derived | as-printed
  std::string ledger = "ledger.json";
};
struct CompareOutcome {
  nlohmann::json ledger = nlohmann::json::array();
  bool derived_agrees = true;
  int samples = 0;
};
CompareOutcome run_compare(const CompareOptions& opts);
int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err);

struct ScanOptions {
  ModelOptions model;
  std::string var = "t";
  double from = 0.0;
  double to = 1.0;
  int steps = 11;
  std::string quantity = "KU";  // KU | ricci | numerator
  std::string point;
  std::uint64_t seed = 0x5eed;
};
int cmd_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err);

// Maps library exceptions onto exit codes and prints the message.
int exit_code_for_current_exception(std::ostream& err);

}  // namespace warpcurv::cli
