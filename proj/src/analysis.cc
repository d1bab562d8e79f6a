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

#include "gpqspr/analysis.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpqspr {
namespace {

bool HasSplits(Family family) { return family != Family::kOctaneIsomer; }

double PredictorValue(const std::string& column, const DescriptorRecord* computed,
                      const ReferenceValues& published, DescriptorSource source) {
  if (column == "gp") {
    return source == DescriptorSource::kPublished ? ToDouble(published.gp)
                                                  : ToDouble(computed->gp);
  }
  if (column == "aut") {
    if (source == DescriptorSource::kPublished && published.aut_order) {
      return static_cast<double>(*published.aut_order);
    }
    return static_cast<double>(computed->aut_order);
  }
  if (column == "wiener") {
    if (source == DescriptorSource::kPublished && published.wiener) {
      return static_cast<double>(*published.wiener);
    }
    return static_cast<double>(computed->wiener);
  }
  throw std::invalid_argument("unknown predictor '" + column +
                              "' (expected gp, aut or wiener)");
}

std::string ColumnLabel(const std::string& column) {
  if (column == "gp") return "GP";
  if (column == "aut") return "#Aut";
  if (column == "wiener") return "W";
  return column;
}

}  // namespace

ModelKind ModelKindFor(const std::string& model) {
  if (model == "log") return ModelKind::kLogSingle;
  if (model == "linear") return ModelKind::kLinearSingle;
  if (model == "multilinear") return ModelKind::kMultilinear;
  throw std::invalid_argument("unknown model '" + model +
                              "' (expected log, linear or multilinear)");
}

std::vector<std::string> ResolvedPredictors(const ModelSpec& spec) {
  const ModelKind kind = ModelKindFor(spec.model);
  std::vector<std::string> predictors = spec.predictors;
  if (predictors.empty()) {
    predictors = kind == ModelKind::kMultilinear
                     ? std::vector<std::string>{"aut", "gp", "wiener"}
                     : std::vector<std::string>{"gp"};
  }
  for (const auto& p : predictors) {
    if (p != "gp" && p != "aut" && p != "wiener") {
      throw std::invalid_argument("unknown predictor '" + p +
                                  "' (expected gp, aut or wiener)");
    }
  }
  if (kind != ModelKind::kMultilinear && predictors.size() != 1) {
    throw std::invalid_argument("model '" + spec.model +
                                "' takes exactly one predictor");
  }
  return predictors;
}

Split ResolvedSplit(const ModelSpec& spec) {
  if (spec.split) return *spec.split;
  if (ModelKindFor(spec.model) == ModelKind::kMultilinear) return Split::kAll;
  return HasSplits(spec.family) ? Split::kTrain : Split::kAll;
}

ModelData CollectModelData(const Bundle& bundle, const ModelSpec& spec,
                           Split split) {
  const auto predictors = ResolvedPredictors(spec);
  std::vector<MoleculeEntry> entries;
  for (const auto& entry : bundle.family(spec.family)) {
    if (split != Split::kAll && entry.split != split) continue;
    if (std::find(spec.exclude.begin(), spec.exclude.end(), entry.name) !=
        spec.exclude.end()) {
      continue;
    }
    entries.push_back(entry);
  }
  for (const auto& name : spec.exclude) {
    const auto all = bundle.family(spec.family);
    if (std::none_of(all.begin(), all.end(),
                     [&](const auto& e) { return e.name == name; })) {
      throw std::invalid_argument("cannot exclude unknown molecule '" + name + "'");
    }
  }
  // Published values are always available for GP; the other columns may
  // need the graphs.
  const bool needs_records =
      spec.source == DescriptorSource::kComputed ||
      std::any_of(predictors.begin(), predictors.end(),
                  [](const auto& p) { return p != "gp"; });
  std::vector<DescriptorRecord> records;
  if (needs_records) records = compute_records(entries);

  ModelData data;
  for (size_t i = 0; i < entries.size(); ++i) {
    const auto& ref = bundle.reference(spec.family, entries[i].name);
    std::vector<double> row;
    for (const auto& p : predictors) {
      row.push_back(PredictorValue(p, needs_records ? &records[i] : nullptr, ref,
                                   spec.source));
    }
    data.names.push_back(entries[i].name);
    data.rows.push_back(std::move(row));
    data.observed.push_back(entries[i].melting_point);
    data.splits.push_back(entries[i].split);
  }
  return data;
}

RegressionFit FitModel(const Bundle& bundle, const ModelSpec& spec) {
  const ModelKind kind = ModelKindFor(spec.model);
  const auto predictors = ResolvedPredictors(spec);
  const ModelData data = CollectModelData(bundle, spec, ResolvedSplit(spec));
  RegressionFit fit;
  if (kind == ModelKind::kMultilinear) {
    PredictorMatrix matrix{predictors, data.rows};
    fit = fit_multilinear(matrix, data.observed, data.names);
  } else {
    std::vector<double> x;
    for (const auto& row : data.rows) x.push_back(row[0]);
    fit = kind == ModelKind::kLogSingle
              ? fit_log_single(x, data.observed, data.names)
              : fit_linear_single(x, data.observed, data.names);
  }
  fit.predictor_names = predictors;
  return fit;
}

std::optional<RegressionFit> PublishedFit(const Bundle& bundle,
                                          const ModelSpec& spec) {
  const PublishedModel* model = bundle.published_model(spec.family, spec.model);
  if (model == nullptr) return std::nullopt;
  if (model->predictors != ResolvedPredictors(spec)) return std::nullopt;
  return fixed_model(ModelKindFor(spec.model), model->coefficients,
                     model->predictors);
}

double RSquaredOn(const RegressionFit& fit, const ModelData& data) {
  const double ss_res = residual_sum_of_squares(fit, data.rows, data.observed);
  double mean = 0;
  for (double v : data.observed) mean += v;
  mean /= static_cast<double>(data.observed.size());
  double ss_tot = 0;
  for (double v : data.observed) ss_tot += (v - mean) * (v - mean);
  return 1.0 - ss_res / ss_tot;
}

std::string FormatFixed(double value, int digits) {
  if (std::isnan(value)) return "nan";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  std::string out = buffer;
  if (out.front() == '-' &&
      out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(out.begin());
  }
  return out;
}

std::string RenderText(const ReportTable& table) {
  std::vector<size_t> width(table.columns.size(), 0);
  auto widen = [&](const std::vector<std::string>& cells) {
    for (size_t j = 0; j < cells.size() && j < width.size(); ++j) {
      width[j] = std::max(width[j], cells[j].size());
    }
  };
  widen(table.columns);
  for (const auto& row : table.rows) widen(row);
  if (table.footer) widen(*table.footer);

  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (size_t j = 0; j < width.size(); ++j) {
      const std::string& cell = j < cells.size() ? cells[j] : std::string();
      if (j > 0) out += "  ";
      // First column left-aligned, the rest right-aligned.
      if (j == 0) {
        out += cell + std::string(width[j] - cell.size(), ' ');
      } else {
        out += std::string(width[j] - cell.size(), ' ') + cell;
      }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  size_t total = 0;
  for (size_t w : width) total += w;
  total += 2 * (width.empty() ? 0 : width.size() - 1);
  const std::string rule(total, '-');

  std::string out = table.title + "\n" + rule + "\n" + line(table.columns) +
                    rule + "\n";
  for (const auto& row : table.rows) out += line(row);
  if (table.footer) out += rule + "\n" + line(*table.footer);
  for (const auto& note : table.notes) out += "note: " + note + "\n";
  return out;
}

std::string RenderCsv(const ReportTable& table) {
  auto quote = [](const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (size_t j = 0; j < cells.size(); ++j) {
      if (j > 0) out += ',';
      out += quote(cells[j]);
    }
    return out + "\n";
  };
  std::string out = line(table.columns);
  for (const auto& row : table.rows) out += line(row);
  if (table.footer) out += line(*table.footer);
  return out;
}

ResidualReport BuildResidualReport(const Bundle& bundle,
                                   const std::string& table_id,
                                   CoefficientSource coefficients) {
  ModelSpec spec;
  Split evaluate_on = Split::kTest;
  std::string title;
  if (table_id == "table2") {
    spec.family = Family::kAlkane;
    spec.model = "log";
    title = "Alkane log model, test split";
  } else if (table_id == "table3") {
    spec.family = Family::kAlkane;
    spec.model = "log";
    evaluate_on = Split::kAll;
    title = "Alkane log model, all alkanes";
  } else if (table_id == "table5") {
    spec.family = Family::kPah;
    spec.model = "linear";
    title = "PAH linear model, test split";
  } else {
    throw std::invalid_argument("unknown table '" + table_id +
                                "' (expected table2, table3, table5 or "
                                "octane_correlations)");
  }

  ResidualReport report;
  if (coefficients == CoefficientSource::kPublished) {
    auto published = PublishedFit(bundle, spec);
    if (!published) {
      throw std::invalid_argument("no published coefficients for " + table_id);
    }
    report.model = *published;
    title += " (published coefficients)";
  } else {
    report.model = FitModel(bundle, spec);
    title += " (fitted coefficients)";
  }
  const ModelData data = CollectModelData(bundle, spec, evaluate_on);
  report.residuals = evaluate(report.model, data.names, data.rows, data.observed);

  ReportTable& table = report.table;
  table.title = title;
  table.columns = {spec.family == Family::kAlkane ? "Alkane" : "Molecule", "GP",
                   "MP", "MP-hat", "Residual", "% Residual"};
  for (size_t i = 0; i < data.names.size(); ++i) {
    const ResidualRow& row = report.residuals.rows[i];
    table.rows.push_back({row.name, FormatFixed(data.rows[i][0], 0),
                          FormatFixed(row.observed, 2), FormatFixed(row.predicted),
                          FormatFixed(row.residual),
                          FormatFixed(row.percent_residual)});
  }
  table.footer = std::vector<std::string>{
      "average", "", "", "", "",
      FormatFixed(report.residuals.average_percent_residual)};
  std::string model_line = ToString(report.model.kind);
  model_line += " coefficients:";
  for (double c : report.model.coefficients) model_line += " " + FormatFixed(c, 6);
  table.notes.push_back(model_line);
  return report;
}

std::vector<Correlation> OctaneCorrelations(const Bundle& bundle) {
  const std::string kOutlier = "2,2,3,3-tetramethylbutane";
  const std::string kUnbranched = "octane";
  struct Item {
    std::string label;
    std::string x;
    std::vector<std::string> exclude;
  };
  const std::vector<Item> items = {
      {"MP vs GP, all isomers", "gp", {}},
      {"MP vs #Aut, all isomers", "aut", {}},
      {"MP vs #Aut, branched isomers (octane excluded)", "aut", {kUnbranched}},
      {"MP vs GP, 2,2,3,3-tetramethylbutane excluded", "gp", {kOutlier}},
      {"MP vs #Aut, 2,2,3,3-tetramethylbutane excluded", "aut", {kOutlier}},
  };
  std::vector<Correlation> out;
  for (const auto& item : items) {
    ModelSpec spec;
    spec.family = Family::kOctaneIsomer;
    spec.model = "linear";
    spec.predictors = {item.x};
    spec.exclude = item.exclude;
    const ModelData data = CollectModelData(bundle, spec, Split::kAll);
    std::vector<double> x;
    for (const auto& row : data.rows) x.push_back(row[0]);
    out.push_back({item.label, item.x, data.names.size(),
                   r_squared_between(x, data.observed)});
  }
  return out;
}

ReportTable OctaneCorrelationTable(const Bundle& bundle) {
  ReportTable table;
  table.title = "Octane isomers: squared correlation with melting point";
  table.columns = {"Relation", "Predictor", "Rows", "R^2"};
  for (const auto& c : OctaneCorrelations(bundle)) {
    table.rows.push_back({c.label, ColumnLabel(c.x), std::to_string(c.rows),
                          FormatFixed(c.r_squared, 4)});
  }
  return table;
}

}  // namespace gpqspr
