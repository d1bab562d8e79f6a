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

// QSPR model runs over the bundled families and the report tables built from
// them. Shared by the CLI and the acceptance suite.

#ifndef GPQSPR_ANALYSIS_H_
#define GPQSPR_ANALYSIS_H_

#include <optional>
#include <string>
#include <vector>

#include "gpqspr/dataset.h"
#include "gpqspr/regression.h"

namespace gpqspr {

// Where predictor values come from: the printed reference tables or
// recomputed from the bundled graphs. Published values fall back to computed
// ones for columns a table does not list.
enum class DescriptorSource { kPublished, kComputed };

struct ModelSpec {
  Family family = Family::kAlkane;
  std::string model = "log";  // "log", "linear" or "multilinear"
  // Predictor columns among "gp", "aut", "wiener". Empty selects the
  // default: {"gp"} for single-predictor models, {"aut","gp","wiener"} for
  // multilinear.
  std::vector<std::string> predictors;
  // Empty selects the default: train for single-predictor models on families
  // with a train/test split, all rows otherwise.
  std::optional<Split> split;
  DescriptorSource source = DescriptorSource::kPublished;
  std::vector<std::string> exclude;  // molecule names dropped before fitting
};

// Throws std::invalid_argument for an unknown model or predictor.
ModelKind ModelKindFor(const std::string& model);
std::vector<std::string> ResolvedPredictors(const ModelSpec& spec);
Split ResolvedSplit(const ModelSpec& spec);

struct ModelData {
  std::vector<std::string> names;
  std::vector<std::vector<double>> rows;  // one value per predictor
  std::vector<double> observed;           // melting points
  std::vector<Split> splits;
};

// Rows of spec.family in table order, filtered by `split` (kAll keeps every
// row) and spec.exclude.
ModelData CollectModelData(const Bundle& bundle, const ModelSpec& spec,
                           Split split);

RegressionFit FitModel(const Bundle& bundle, const ModelSpec& spec);

// The published coefficients for spec.family/spec.model, if bundled.
std::optional<RegressionFit> PublishedFit(const Bundle& bundle,
                                          const ModelSpec& spec);

// 1 - RSS/TSS of the model on the given rows.
double RSquaredOn(const RegressionFit& fit, const ModelData& data);

struct ReportTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::optional<std::vector<std::string>> footer;
  std::vector<std::string> notes;
};

std::string RenderText(const ReportTable& table);
std::string RenderCsv(const ReportTable& table);

// Fixed-point rendering with `digits` decimals; "-0.000" is printed as
// "0.000".
std::string FormatFixed(double value, int digits = 3);

enum class CoefficientSource { kFitted, kPublished };

struct ResidualReport {
  RegressionFit model;
  ResidualTable residuals;
  ReportTable table;
};

// table_id: "table2" (alkane log model on the test split), "table3" (alkane
// log model on all rows), "table5" (PAH linear model on the test split).
// Throws std::invalid_argument for other ids.
ResidualReport BuildResidualReport(const Bundle& bundle,
                                   const std::string& table_id,
                                   CoefficientSource coefficients);

struct Correlation {
  std::string label;
  std::string x;
  size_t rows = 0;
  double r_squared = 0;
};

// Squared correlations of the octane-isomer melting points with GP and |Aut|,
// over all isomers and with single outliers removed.
std::vector<Correlation> OctaneCorrelations(const Bundle& bundle);
ReportTable OctaneCorrelationTable(const Bundle& bundle);

}  // namespace gpqspr

#endif  // GPQSPR_ANALYSIS_H_
