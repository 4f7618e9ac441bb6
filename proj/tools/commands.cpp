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


#include "commands.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "warpcurv/errors.hpp"
#include "warpcurv/json_io.hpp"
#include "warpcurv/null_sectional.hpp"
#include "warpcurv/oracle.hpp"
#include "warpcurv/warped.hpp"

namespace warpcurv::cli {
namespace {

using nlohmann::json;

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// FNV-1a over the canonical spec document.
std::string spec_hash(const json& doc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : doc.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return hex64(h);
}

json matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json result_json(const NullCurvatureResult& r) {
  json terms = json::object();
  for (const auto& t : r.breakdown) terms[t.name] = t.value;
  json out = {{"value", r.value},
              {"numerator", r.numerator},
              {"denominator", r.denominator},
              {"breakdown", terms}};
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

std::optional<double> fiber_offset(const ManifoldSpec& spec, const NullPlane& plane, double K) {
  if (!spec.interval_base() || spec.fiber_count() != 1) return std::nullopt;
  const PlaneTerms t = plane_terms(spec, plane);
  const auto& f = t.fibers[0];
  const double q = f.gVV * f.gWW - f.gVW * f.gVW;
  if (!(q > 0.0)) return std::nullopt;
  return K - (f.RF / q) / (f.b * f.b);
}

struct PlaneEval {
  NullPlane plane;
  NullCurvatureResult specialized;
  double generic = 0.0;
  double oracle = 0.0;
  double oracle_numerator = 0.0;
  double scale = 0.0;
};

PlaneEval eval_plane(const ManifoldSpec& spec, const Point& p, std::uint64_t plane_seed,
                     const CurvatureTensors& tensors) {
  PlaneEval e;
  e.plane = sample_plane(spec, p, plane_seed);
  e.specialized = specialized_null_curvature(spec, e.plane);
  e.generic = null_curvature_generic(spec, e.plane).value;
  const auto L = flatten(e.plane.L), S = flatten(e.plane.S);
  e.oracle = null_sectional_oracle(tensors, L, S);
  e.oracle_numerator = tensors.form(L, S, S, L);
  e.scale = std::max(tensors.scale(), std::abs(e.oracle));
  return e;
}

double scalar_curvature(const Eigen::MatrixXd& g, const Eigen::MatrixXd& ric) {
  return (g.inverse().cwiseProduct(ric)).sum();
}

}  // namespace

std::uint64_t default_seed() {
  if (const char* env = std::getenv("WARPCURV_SEED")) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 0);
    if (errno == 0 && end != env && *end == '\0') return v;
  }
  return 0x5eed;
}

int exit_code_for_current_exception(std::ostream& err) {
  try {
    throw;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitDisagreement;
  }
}

CatalogEntry resolve_model(const ModelOptions& m) {
  if (m.model == "schwarzschild_exterior" && m.mass) return schwarzschild_exterior(*m.mass);
  for (const auto& e : catalog())
    if (e.name == m.model) return e;
  if (!std::filesystem::exists(m.model)) {
    throw ValidationError("'" + m.model + "' is neither a catalog model nor a spec file");
  }
  CatalogEntry e{std::filesystem::path(m.model).stem().string(), "spec file " + m.model,
                 load_spec_file(m.model), {}};
  const double t1 = e.spec.base.t1, t2 = e.spec.base.t2;
  if (std::isfinite(t1) && std::isfinite(t2)) {
    e.t_min = t1 + 0.1 * (t2 - t1);
    e.t_max = t2 - 0.1 * (t2 - t1);
  } else if (std::isfinite(t1)) {
    e.t_min = t1 + 0.5;
    e.t_max = t1 + 3.0;
  } else if (std::isfinite(t2)) {
    e.t_min = t2 - 3.0;
    e.t_max = t2 - 0.5;
  }
  return e;
}

int coordinate_index(const ManifoldSpec& spec, const std::string& name) {
  static const char* xyz[] = {"x", "y", "z"};
  static const char* polar[] = {"r", "theta", "phi"};
  const int n = spec.dimension();
  if (name == "t") return 0;
  for (int k = 1; k < n; ++k) {
    if (name == "x" + std::to_string(k)) return k;
    if (k <= 3 && (name == xyz[k - 1] || name == polar[k - 1])) return k;
  }
  throw ValidationError("unknown coordinate '" + name + "'");
}

Point parse_point(const CatalogEntry& entry, const std::string& text, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> flat = flatten(entry.sample_point(rng));
  std::stringstream ss(text);
  std::string item;
  std::size_t position = 0;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    std::size_t idx = position;
    std::string value = item;
    if (eq != std::string::npos) {
      idx = static_cast<std::size_t>(coordinate_index(entry.spec, item.substr(0, eq)));
      value = item.substr(eq + 1);
    }
    if (idx >= flat.size()) throw ShapeError("too many point coordinates");
    try {
      std::size_t used = 0;
      flat[idx] = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::logic_error&) {
      throw ValidationError("bad coordinate value '" + value + "'");
    }
    position = idx + 1;
  }
  Point p = split_point(flat, entry.spec);
  validate_point(entry.spec, p);
  return p;
}

// ------------------------------------------------------------- report

json build_report(const ReportOptions& opts) {
  const CatalogEntry entry = resolve_model(opts.model);
  const ManifoldSpec& spec = entry.spec;
  const Point p = parse_point(entry, opts.point, opts.seed);
  const CurvatureTensors tensors = riemann_oracle(assemble_chart(spec), flatten(p));

  json doc;
  doc["tool"] = "warpcurv";
  doc["version"] = kToolVersion;
  doc["model"] = entry.name;
  try {
    const json sj = spec_to_json(spec);
    doc["spec"] = sj;
    doc["spec_hash"] = spec_hash(sj);
  } catch (const CapabilityError&) {
    doc["spec"] = nullptr;
  }
  doc["seed"] = opts.seed;
  doc["point"] = point_to_json(p);

  const Eigen::MatrixXd rs = ricci_components(spec, p);
  doc["ricci"] = {{"specialized", matrix_json(rs)},
                  {"oracle", matrix_json(tensors.ricci)},
                  {"max_abs_diff", (rs - tensors.ricci).cwiseAbs().maxCoeff()}};

  const TangentVector U = default_frame(spec, p);
  const IsotropyResult iso = isotropy_scan(spec, p, U, std::max(opts.planes, 1), opts.seed);
  doc["isotropy"] = {{"mean", iso.mean}, {"max_deviation", iso.max_deviation}, {"planes", iso.planes}};

  std::mt19937_64 seeds(opts.seed);
  json planes = json::array();
  for (int k = 0; k < opts.planes; ++k) {
    const std::uint64_t ps = seeds();
    const PlaneEval e = eval_plane(spec, p, ps, tensors);
    json printed = json::object();
    for (NullForm f : applicable_forms(spec)) {
      printed[to_string(f)] = evaluate_form(f, spec, e.plane, FormulaPath::as_printed).value;
    }
    const double diff = std::abs(e.specialized.value - e.oracle);
    json row = {{"index", k},
                {"plane_seed", ps},
                {"L", vector_to_json(e.plane.L)},
                {"S", vector_to_json(e.plane.S)},
                {"specialized", result_json(e.specialized)},
                {"as_printed", printed},
                {"generic", e.generic},
                {"oracle", e.oracle},
                {"abs_diff", diff},
                {"discrepancy", diff > curvature_tolerance(e.scale)}};
    if (auto off = fiber_offset(spec, e.plane, e.specialized.value)) row["fiber_offset"] = *off;
    planes.push_back(row);
  }
  doc["planes"] = planes;
  return doc;
}

int cmd_report(const ReportOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    if (opts.format != "json" && opts.format != "csv" && opts.format != "text") {
      throw ValidationError("--format must be json, csv or text");
    }
    if (opts.planes < 0) throw ValidationError("--planes must be non-negative");
    const json doc = build_report(opts);
    if (opts.format == "json") {
      out << doc.dump(2) << "\n";
    } else if (opts.format == "csv") {
      out << "index,plane_seed,specialized,generic,oracle,abs_diff,fiber_offset\n";
      for (const auto& r : doc["planes"]) {
        out << r["index"].get<int>() << "," << r["plane_seed"].get<std::uint64_t>() << ","
            << fmt12(r["specialized"]["value"].get<double>()) << ","
            << fmt12(r["generic"].get<double>()) << "," << fmt12(r["oracle"].get<double>()) << ","
            << fmt12(r["abs_diff"].get<double>()) << ","
            << (r.contains("fiber_offset") ? fmt12(r["fiber_offset"].get<double>()) : "") << "\n";
      }
    } else {
      out << "model " << doc["model"].get<std::string>() << "  seed " << opts.seed << "\n";
      out << "ricci max |specialized - oracle| "
          << fmt12(doc["ricci"]["max_abs_diff"].get<double>()) << "\n";
      out << "isotropy mean " << fmt12(doc["isotropy"]["mean"].get<double>()) << "  max deviation "
          << fmt12(doc["isotropy"]["max_deviation"].get<double>()) << "\n";
      for (const auto& r : doc["planes"]) {
        out << "plane " << r["index"].get<int>() << "  K " << fmt12(r["specialized"]["value"].get<double>())
            << "  oracle " << fmt12(r["oracle"].get<double>()) << "  diff "
            << fmt12(r["abs_diff"].get<double>());
        if (r.contains("fiber_offset")) out << "  K-K_F/b^2 " << fmt12(r["fiber_offset"].get<double>());
        out << "\n";
      }
    }
    return kExitOk;
  } catch (...) {
    return exit_code_for_current_exception(err);
  }
}

// ------------------------------------------------------------ compare

CompareOutcome run_compare(const CompareOptions& opts) {
  const FormulaPath path = path_from_string(opts.path);
  if (opts.samples < 0) throw ValidationError("--samples must be non-negative");
  const CatalogEntry entry = resolve_model(opts.model);
  const ManifoldSpec& spec = entry.spec;
  const std::vector<NullForm> forms = applicable_forms(spec);

  CompareOutcome result;
  std::mt19937_64 rng(opts.seed);
  for (int k = 0; k < opts.samples; ++k) {
    const Point p = entry.sample_point(rng);
    const std::uint64_t ps = rng();
    const CurvatureTensors tensors = riemann_oracle(assemble_chart(spec), flatten(p));
    const PlaneEval e = eval_plane(spec, p, ps, tensors);
    const json point = flatten(p);
    auto record = [&](const std::string& term, const std::string& a, const std::string& b,
                      double va, double vb, double scale) {
      const double d = std::abs(va - vb);
      if (d <= curvature_tolerance(scale) && std::isfinite(d)) return false;
      result.ledger.push_back({{"model", entry.name}, {"point", point}, {"plane_seed", ps},
                               {"term", term}, {"path_a", a}, {"path_b", b}, {"value_a", va},
                               {"value_b", vb}, {"abs_diff", d}});
      return true;
    };

    if (record("value", "generic", "oracle", e.generic, e.oracle, e.scale)) result.derived_agrees = false;
    for (NullForm f : forms) {
      const std::string name = to_string(f);
      const NullCurvatureResult d = evaluate_form(f, spec, e.plane, FormulaPath::as_derived);
      if (path == FormulaPath::as_derived) {
        if (record("value", "as-derived/" + name, "oracle", d.value, e.oracle, e.scale)) {
          result.derived_agrees = false;
        }
        continue;
      }
      if (std::abs(d.value - e.oracle) > curvature_tolerance(e.scale)) result.derived_agrees = false;
      const NullCurvatureResult pr = evaluate_form(f, spec, e.plane, FormulaPath::as_printed);
      for (const auto& t : pr.breakdown) {
        const double dv = d.term(t.name).value_or(0.0);
        record(t.name, "as-printed/" + name, "as-derived/" + name, t.value, dv,
               std::max({std::abs(t.value), std::abs(dv), e.scale}));
      }
      record("denominator", "as-printed/" + name, "as-derived/" + name, pr.denominator,
             d.denominator, std::max(std::abs(pr.denominator), std::abs(d.denominator)));
      record("value", "as-printed/" + name, "oracle", pr.value, e.oracle,
             std::max(std::abs(pr.value), e.scale));
    }
    ++result.samples;
  }
  return result;
}

int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const CompareOutcome r = run_compare(opts);
    std::ofstream f(opts.ledger);
    if (!f) throw ValidationError("cannot write ledger '" + opts.ledger + "'");
    f << r.ledger.dump(2) << "\n";
    out << "model " << opts.model.model << "  path " << opts.path << "  samples " << r.samples
        << "  ledger entries " << r.ledger.size() << "  specialized/oracle "
        << (r.derived_agrees ? "agree" : "DISAGREE") << "\n";
    return r.derived_agrees ? kExitOk : kExitDisagreement;
  } catch (...) {
    return exit_code_for_current_exception(err);
  }
}

// --------------------------------------------------------------- scan

int cmd_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    if (opts.quantity != "KU" && opts.quantity != "ricci" && opts.quantity != "numerator") {
      throw ValidationError("--quantity must be KU, ricci or numerator");
    }
    if (opts.steps < 1) throw ValidationError("--steps must be positive");
    const CatalogEntry entry = resolve_model(opts.model);
    const ManifoldSpec& spec = entry.spec;
    const int idx = coordinate_index(spec, opts.var);
    std::vector<double> flat = flatten(parse_point(entry, opts.point, opts.seed));
    const std::uint64_t plane_seed = std::mt19937_64(opts.seed)();

    std::ostringstream buf;
    buf << "coordinate,quantity,value,oracle_value,abs_diff\n";
    for (int k = 0; k < opts.steps; ++k) {
      const double x = opts.steps == 1 ? opts.from
                                       : opts.from + (opts.to - opts.from) * k / (opts.steps - 1);
      flat[static_cast<std::size_t>(idx)] = x;
      const Point p = split_point(flat, spec);
      validate_point(spec, p);
      const CurvatureTensors tensors = riemann_oracle(assemble_chart(spec), flatten(p));
      double a = 0.0, b = 0.0;
      if (opts.quantity == "ricci") {
        a = scalar_curvature(metric_components(spec, p), ricci_components(spec, p));
        b = scalar_curvature(tensors.jet.g, tensors.ricci);
      } else {
        const PlaneEval e = eval_plane(spec, p, plane_seed, tensors);
        if (opts.quantity == "KU") {
          a = e.specialized.value;
          b = e.oracle;
        } else {
          a = e.specialized.numerator;
          b = e.oracle_numerator;
        }
      }
      buf << fmt12(x) << "," << opts.quantity << "," << fmt12(a) << "," << fmt12(b) << ","
          << fmt12(std::abs(a - b)) << "\n";
    }
    out << buf.str();
    return kExitOk;
  } catch (...) {
    return exit_code_for_current_exception(err);
  }
}

}  // namespace warpcurv::cli
