// Copyright 2026 The gpqspr Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gpqspr/cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gpqspr/analysis.h"
#include "gpqspr/dataset.h"
#include "gpqspr/descriptors.h"
#include "gpqspr/regression.h"
#include "gpqspr/symmetry.h"
#include "json.hpp"

namespace gpqspr::cli {
namespace {

using nlohmann::json;

struct GlobalOptions {
  bool json = false;
  std::string output;
  std::string data_dir;
};

// Raised by command bodies for a failed check (exit 1) after the report has
// been produced.
struct CheckFailed {
  std::string report;
};

json NumberOrNull(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string PredictorLabel(const std::string& column) {
  if (column == "gp") return "GP";
  if (column == "aut") return "#Aut";
  if (column == "wiener") return "W";
  return column;
}

std::string Equation(const RegressionFit& fit) {
  auto term = [](double c, const std::string& what, bool first) {
    std::string out;
    if (first) {
      out = FormatFixed(c, 6);
    } else {
      out = (c < 0 ? " - " : " + ") + FormatFixed(std::abs(c), 6);
    }
    return what.empty() ? out : out + " " + what;
  };
  const std::string x =
      fit.predictor_names.empty() ? "x" : PredictorLabel(fit.predictor_names[0]);
  switch (fit.kind) {
    case ModelKind::kLogSingle:
      return "MP = " + term(fit.coefficients[0], "ln(" + x + ")", true) +
             term(fit.coefficients[1], "", false);
    case ModelKind::kLinearSingle:
      return "MP = " + term(fit.coefficients[0], x, true) +
             term(fit.coefficients[1], "", false);
    case ModelKind::kMultilinear: {
      std::string out = "MP = " + term(fit.coefficients[0], "", true);
      for (size_t j = 1; j < fit.coefficients.size(); ++j) {
        out += term(fit.coefficients[j], PredictorLabel(fit.predictor_names[j - 1]),
                    false);
      }
      return out;
    }
  }
  return {};
}

json FitToJson(const RegressionFit& fit) {
  json residuals = json::array();
  for (const auto& r : fit.residuals) {
    residuals.push_back({{"name", r.name},
                         {"observed", r.observed},
                         {"predicted", r.predicted},
                         {"residual", r.residual},
                         {"percent_residual", NumberOrNull(r.percent_residual)}});
  }
  return {{"model_kind", ToString(fit.kind)},
          {"predictors", fit.predictor_names},
          {"coefficients", fit.coefficients},
          {"observations", fit.observations},
          {"r_squared", NumberOrNull(fit.r_squared)},
          {"multiple_r", NumberOrNull(fit.multiple_r())},
          {"adjusted_r_squared", NumberOrNull(fit.adjusted_r_squared)},
          {"standard_error", NumberOrNull(fit.standard_error)},
          {"residuals", residuals}};
}

json TableToJson(const ReportTable& table) {
  json out = {{"title", table.title},
              {"columns", table.columns},
              {"rows", table.rows},
              {"notes", table.notes}};
  if (table.footer) out["footer"] = *table.footer;
  return out;
}

Family RequireFamily(const std::string& text) {
  const auto family = ParseFamily(text);
  if (!family) {
    throw std::invalid_argument("unknown family '" + text +
                                "' (expected alkane, pah or octane_isomer)");
  }
  return *family;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Bundle LoadBundle(const GlobalOptions& global) {
  return Bundle::Load(global.data_dir.empty() ? Bundle::DefaultDirectory()
                                              : std::filesystem::path(global.data_dir));
}

// --- compute ---------------------------------------------------------------

struct ComputeOptions {
  std::string graph_path;
  bool orbits = false;
  bool list_automorphisms = false;
};

std::string RunCompute(const GlobalOptions& global, const ComputeOptions& opts) {
  const MolecularGraph g = load_graph_file(opts.graph_path);
  const DescriptorRecord record = descriptor_record(g);
  std::optional<AutomorphismSet> aut;
  if (opts.list_automorphisms) aut = automorphisms(g);

  if (global.json) {
    json out = {{"name", record.name},
                {"vertex_count", record.vertex_count},
                {"gp", ToString(record.gp)},
                {"gp_value", ToDouble(record.gp)},
                {"wiener", record.wiener},
                {"aut_order", record.aut_order},
                {"orbit_count", record.orbits.size()},
                {"orbits", record.orbits.orbits}};
    if (aut) {
      json members = json::array();
      for (const auto& p : aut->members) members.push_back(p.ToCycleString());
      out["automorphisms"] = members;
    }
    return out.dump(2) + "\n";
  }
  std::string out;
  if (!record.name.empty()) out += "name: " + record.name + "\n";
  out += "GP=" + ToString(record.gp) + " |Aut|=" + std::to_string(record.aut_order) +
         " W=" + std::to_string(record.wiener) +
         " orbits=" + std::to_string(record.orbits.size()) +
         " n=" + std::to_string(record.vertex_count) + "\n";
  if (opts.orbits) out += "orbits: " + ToString(record.orbits) + "\n";
  if (aut) {
    for (const auto& p : aut->members) out += "automorphism: " + p.ToCycleString() + "\n";
  }
  return out;
}

// --- verify ----------------------------------------------------------------

std::string RunVerify(const GlobalOptions& global, const std::string& family_text,
                      bool details) {
  const Bundle bundle = LoadBundle(global);
  std::optional<Family> only;
  if (!family_text.empty()) only = RequireFamily(family_text);
  const VerificationReport report = verify_bundle(bundle, only);

  auto label = [](Family f) -> std::string {
    switch (f) {
      case Family::kAlkane:
        return "alkanes";
      case Family::kPah:
        return "PAHs";
      case Family::kOctaneIsomer:
        return "octane isomers";
    }
    return "";
  };
  std::string out;
  if (global.json) {
    json families = json::object();
    json rows = json::array();
    for (Family f : kAllFamilies) {
      if (only && f != *only) continue;
      families[ToString(f)] = {{"passed", report.passed(f)}, {"total", report.total(f)}};
    }
    for (const auto& r : report.rows) {
      if (!details && r.ok) continue;
      rows.push_back({{"name", r.name},
                      {"family", ToString(r.family)},
                      {"ok", r.ok},
                      {"gp", ToString(r.computed.gp)},
                      {"wiener", r.computed.wiener},
                      {"aut_order", r.computed.aut_order},
                      {"detail", r.detail}});
    }
    out = json{{"ok", report.all_passed()}, {"families", families},
               {details ? "molecules" : "mismatches", rows}}
              .dump(2) +
          "\n";
  } else {
    std::string summary;
    for (Family f : kAllFamilies) {
      if (only && f != *only) continue;
      if (!summary.empty()) summary += ", ";
      summary += label(f) + " " + std::to_string(report.passed(f)) + "/" +
                 std::to_string(report.total(f));
    }
    out = summary + "\n";
    for (const auto& r : report.rows) {
      if (r.ok && !details) continue;
      out += std::string(r.ok ? "ok       " : "MISMATCH ") + ToString(r.family) +
             " " + r.name + ": GP=" + ToString(r.computed.gp) +
             " W=" + std::to_string(r.computed.wiener) +
             " |Aut|=" + std::to_string(r.computed.aut_order);
      if (!r.ok) out += " (" + r.detail + ")";
      out += "\n";
    }
  }
  if (!report.all_passed()) throw CheckFailed{out};
  return out;
}

// --- fit -------------------------------------------------------------------

struct ModelOptions {
  std::string family;
  std::string model;
  std::string x;
  std::string split;
  std::string descriptors = "published";
  std::vector<std::string> exclude;
};

ModelSpec ToSpec(const ModelOptions& opts) {
  ModelSpec spec;
  spec.family = RequireFamily(opts.family);
  spec.model = opts.model;
  ModelKindFor(spec.model);
  spec.predictors = SplitList(opts.x);
  if (!opts.split.empty()) {
    spec.split = ParseSplit(opts.split);
    if (!spec.split) throw std::invalid_argument("unknown split '" + opts.split + "'");
  }
  if (opts.descriptors == "published") {
    spec.source = DescriptorSource::kPublished;
  } else if (opts.descriptors == "computed") {
    spec.source = DescriptorSource::kComputed;
  } else {
    throw std::invalid_argument("--descriptors must be published or computed");
  }
  spec.exclude = opts.exclude;
  return spec;
}

std::string RunFit(const GlobalOptions& global, const ModelOptions& opts) {
  const Bundle bundle = LoadBundle(global);
  const ModelSpec spec = ToSpec(opts);
  const RegressionFit fit = FitModel(bundle, spec);
  const Split split = ResolvedSplit(spec);

  // R^2 of the fitted model on each split, where the family has splits.
  std::vector<std::pair<std::string, double>> by_split;
  if (spec.family != Family::kOctaneIsomer) {
    for (Split s : {Split::kTrain, Split::kTest, Split::kAll}) {
      const ModelData data = CollectModelData(bundle, spec, s);
      if (data.observed.size() >= 2) by_split.emplace_back(ToString(s), RSquaredOn(fit, data));
    }
  }

  if (global.json) {
    json out = FitToJson(fit);
    out["family"] = ToString(spec.family);
    out["split"] = ToString(split);
    out["descriptors"] = opts.descriptors;
    out["excluded"] = spec.exclude;
    out["equation"] = Equation(fit);
    json variants = json::object();
    for (const auto& [name, r2] : by_split) variants[name] = r2;
    out["r_squared_by_split"] = variants;
    return out.dump(2) + "\n";
  }
  std::string out = "family: " + std::string(ToString(spec.family)) +
                    "  model: " + ToString(fit.kind) +
                    "  split: " + ToString(split) +
                    "  rows: " + std::to_string(fit.observations) +
                    "  descriptors: " + opts.descriptors + "\n";
  if (!spec.exclude.empty()) {
    out += "excluded:";
    for (const auto& name : spec.exclude) out += " " + name;
    out += "\n";
  }
  out += Equation(fit) + "\n";
  out += "R^2=" + FormatFixed(fit.r_squared, 6) +
         " multiple R=" + FormatFixed(fit.multiple_r(), 6) +
         " adjusted R^2=" + FormatFixed(fit.adjusted_r_squared, 6) +
         " standard error=" + FormatFixed(fit.standard_error, 6) + "\n";
  if (!by_split.empty()) {
    out += "R^2 by split:";
    for (const auto& [name, r2] : by_split) out += " " + name + "=" + FormatFixed(r2, 6);
    out += "\n";
  }
  return out;
}

// --- predict ---------------------------------------------------------------

std::string RunPredict(const GlobalOptions& global, const ModelOptions& opts,
                       const std::string& coefficient_source,
                       const std::vector<double>& coef,
                       const std::vector<double>& values) {
  const ModelSpec spec = ToSpec(opts);
  const ModelKind kind = ModelKindFor(spec.model);
  RegressionFit model;
  std::string source;
  if (!coef.empty()) {
    std::vector<std::string> names = ResolvedPredictors(spec);
    if (kind == ModelKind::kMultilinear && names.size() + 1 != coef.size()) {
      names.clear();
    }
    model = fixed_model(kind, coef, names);
    source = "given";
  } else {
    const Bundle bundle = LoadBundle(global);
    if (coefficient_source == "published") {
      auto published = PublishedFit(bundle, spec);
      if (!published) {
        throw std::invalid_argument("no published coefficients for this family/model");
      }
      model = *published;
    } else if (coefficient_source == "fitted") {
      model = FitModel(bundle, spec);
    } else {
      throw std::invalid_argument("--coefficients must be fitted or published");
    }
    source = coefficient_source;
  }
  const double predicted = predict(model, values);
  if (global.json) {
    return json{{"predicted", predicted},
                {"inputs", values},
                {"model_kind", ToString(model.kind)},
                {"coefficients", model.coefficients},
                {"coefficient_source", source}}
               .dump(2) +
           "\n";
  }
  return "MP-hat=" + FormatFixed(predicted) + "\n";
}

// --- report ----------------------------------------------------------------

std::string RunReport(const GlobalOptions& global, const std::string& table_id,
                      const std::string& format, const std::string& coefficients) {
  const Bundle bundle = LoadBundle(global);
  if (format != "text" && format != "csv") {
    throw std::invalid_argument("--format must be text or csv");
  }
  ReportTable table;
  json extra = json::object();
  if (table_id == "octane_correlations") {
    table = OctaneCorrelationTable(bundle);
    json values = json::array();
    for (const auto& c : OctaneCorrelations(bundle)) {
      values.push_back({{"relation", c.label},
                        {"predictor", c.x},
                        {"rows", c.rows},
                        {"r_squared", c.r_squared}});
    }
    extra["correlations"] = values;
  } else {
    CoefficientSource source;
    if (coefficients == "fitted") {
      source = CoefficientSource::kFitted;
    } else if (coefficients == "published") {
      source = CoefficientSource::kPublished;
    } else {
      throw std::invalid_argument("--coefficients must be fitted or published");
    }
    const ResidualReport report = BuildResidualReport(bundle, table_id, source);
    table = report.table;
    extra["average_percent_residual"] = report.residuals.average_percent_residual;
    extra["coefficients"] = report.model.coefficients;
  }
  if (global.json) {
    json out = TableToJson(table);
    out.update(extra);
    return out.dump(2) + "\n";
  }
  return format == "csv" ? RenderCsv(table) : RenderText(table);
}

void Emit(const GlobalOptions& global, const std::string& text, std::ostream& out) {
  if (global.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(global.output, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write " + global.output);
  file << text;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Symmetry-aware topological descriptors and melting-point QSPR models",
               "gpqspr"};
  app.require_subcommand(1);
  GlobalOptions global;
  app.add_flag("--json", global.json, "Machine-readable JSON output");
  app.add_option("--output", global.output, "Write the result to this file");
  app.add_option("--data-dir", global.data_dir, "Bundled data directory");

  ComputeOptions compute_opts;
  auto* compute = app.add_subcommand("compute", "Descriptors of a graph file");
  compute->fallthrough();
  compute->add_option("graph", compute_opts.graph_path, "Edge-list graph file")
      ->required();
  compute->add_flag("--orbits", compute_opts.orbits, "List the vertex orbits");
  compute->add_flag("--automorphisms", compute_opts.list_automorphisms,
                    "List every automorphism in cycle notation");

  std::string verify_family;
  bool verify_details = false;
  auto* verify = app.add_subcommand("verify", "Check bundled molecules against reference values");
  verify->fallthrough();
  verify->add_option("--family", verify_family, "Only this family");
  verify->add_flag("--details", verify_details, "List every molecule");

  ModelOptions fit_opts;
  auto add_model_options = [](CLI::App* cmd, ModelOptions& o) {
    cmd->add_option("--family", o.family, "alkane, pah or octane_isomer")->required();
    cmd->add_option("--model", o.model, "log, linear or multilinear")->required();
    cmd->add_option("--x", o.x, "Predictor(s): gp, aut, wiener (comma-separated)");
    cmd->add_option("--split", o.split, "train, test or all");
    cmd->add_option("--descriptors", o.descriptors, "published or computed");
    cmd->add_option("--exclude", o.exclude, "Drop a molecule (repeatable)");
  };
  auto* fit = app.add_subcommand("fit", "Fit a melting-point model");
  fit->fallthrough();
  add_model_options(fit, fit_opts);

  ModelOptions predict_opts;
  std::string predict_source = "fitted";
  std::vector<double> predict_coef;
  std::vector<double> predict_values;
  auto* predict_cmd = app.add_subcommand("predict", "Predict a melting point");
  predict_cmd->fallthrough();
  add_model_options(predict_cmd, predict_opts);
  predict_cmd->add_option("--coefficients", predict_source, "fitted or published");
  predict_cmd->add_option("--coef", predict_coef,
                          "Explicit coefficients (repeatable, model order)");
  predict_cmd->add_option("values", predict_values, "Predictor value(s)")
      ->required();

  std::string table_id;
  std::string report_format = "text";
  std::string report_coefficients = "fitted";
  auto* report = app.add_subcommand("report", "Reproduce a residual or correlation table");
  report->fallthrough();
  report->add_option("table", table_id, "table2, table3, table5 or octane_correlations")
      ->required();
  report->add_option("--format", report_format, "text or csv");
  report->add_option("--coefficients", report_coefficients, "fitted or published");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::string text;
    if (*compute) {
      text = RunCompute(global, compute_opts);
    } else if (*verify) {
      try {
        text = RunVerify(global, verify_family, verify_details);
      } catch (const CheckFailed& failed) {
        Emit(global, failed.report, out);
        err << "error: verification failed\n";
        return kExitFailure;
      }
    } else if (*fit) {
      text = RunFit(global, fit_opts);
    } else if (*predict_cmd) {
      text = RunPredict(global, predict_opts, predict_source, predict_coef,
                        predict_values);
    } else if (*report) {
      text = RunReport(global, table_id, report_format, report_coefficients);
    }
    Emit(global, text, out);
    return kExitOk;
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace gpqspr::cli
