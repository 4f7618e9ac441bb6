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


#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_model(CLI::App* cmd, warpcurv::cli::ModelOptions& m) {
  cmd->add_option("model", m.model, "catalog model name or JSON spec file")->required();
  cmd->add_option("--mass", m.mass, "Schwarzschild mass (schwarzschild_exterior)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace warpcurv::cli;
  CLI::App app{"warpcurv: curvature of warped product space-times"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  const std::uint64_t seed = default_seed();

  ReportOptions report;
  report.seed = seed;
  auto* rep = app.add_subcommand("report", "curvature report at a point");
  add_model(rep, report.model);
  rep->add_option("--point", report.point, "coordinates, e.g. t=1,x=0 (others sampled)");
  rep->add_option("--seed", report.seed, "sampling seed (default $WARPCURV_SEED)");
  rep->add_option("--planes", report.planes, "number of sampled degenerate planes");
  rep->add_option("--format", report.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  CompareOptions compare;
  compare.seed = seed;
  auto* cmp = app.add_subcommand("compare", "specialized vs as-printed vs oracle");
  add_model(cmp, compare.model);
  cmp->add_option("--samples", compare.samples, "random (point, plane) draws");
  cmp->add_option("--seed", compare.seed, "sampling seed (default $WARPCURV_SEED)");
  cmp->add_option("--path", compare.path, "as-derived | as-printed")
      ->check(CLI::IsMember({"as-derived", "as-printed"}));
  cmp->add_option("--ledger", compare.ledger, "ledger output file");

  ScanOptions scan;
  scan.seed = seed;
  auto* scn = app.add_subcommand("scan", "scan one coordinate, CSV output");
  add_model(scn, scan.model);
  scn->add_option("--var", scan.var, "coordinate to scan (t, x1, ...)");
  scn->add_option("--from", scan.from)->required();
  scn->add_option("--to", scan.to)->required();
  scn->add_option("--steps", scan.steps, "number of grid points");
  scn->add_option("--quantity", scan.quantity, "KU | ricci | numerator")
      ->check(CLI::IsMember({"KU", "ricci", "numerator"}));
  scn->add_option("--point", scan.point, "fixed coordinates for the other axes");
  scn->add_option("--seed", scan.seed, "sampling seed (default $WARPCURV_SEED)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  if (*rep) return cmd_report(report, std::cout, std::cerr);
  if (*cmp) return cmd_compare(compare, std::cout, std::cerr);
  return cmd_scan(scan, std::cout, std::cerr);
}
