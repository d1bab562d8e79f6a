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

// Ordinary least squares for the three QSPR model families:
//
//   log_single     y = a * ln(x) + b        coefficients (a, b)
//   linear_single  y = a * x + b            coefficients (a, b)
//   multilinear    y = c0 + c1 x1 + ... cp  coefficients (c0, c1, ..., cp)
//
// The log model is linear in its parameters, so OLS on ln(x) is its exact
// least-squares optimum.

#ifndef GPQSPR_REGRESSION_H_
#define GPQSPR_REGRESSION_H_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpqspr {

enum class ModelKind { kLogSingle, kLinearSingle, kMultilinear };

const char* ToString(ModelKind kind);

enum class RegressionErrorKind {
  kLengthMismatch,
  kTooFewRows,
  kNonPositive,
  kDegenerate,
  kRankDeficient,
  kArity,
};

class RegressionError : public std::runtime_error {
 public:
  RegressionError(RegressionErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  RegressionErrorKind kind() const { return kind_; }

 private:
  RegressionErrorKind kind_;
};

struct ResidualRow {
  std::string name;
  double observed = 0;
  double predicted = 0;
  double residual = 0;          // observed - predicted
  double percent_residual = 0;  // 100 |residual| / |observed|
};

struct RegressionFit {
  ModelKind kind = ModelKind::kLinearSingle;
  std::vector<std::string> predictor_names;
  std::vector<double> coefficients;
  size_t observations = 0;
  double r_squared = 0;
  double adjusted_r_squared = 0;
  double standard_error = 0;
  // Residuals on the fitting rows.
  std::vector<ResidualRow> residuals;

  double multiple_r() const;
  size_t predictor_count() const { return predictor_names.size(); }
};

// A fit with given coefficients and no training statistics (NaN), for
// evaluating published or user-supplied models.
RegressionFit fixed_model(ModelKind kind, std::vector<double> coefficients,
                          std::vector<std::string> predictor_names = {});

// `names` may be empty, in which case rows are named "1", "2", ...
RegressionFit fit_log_single(std::span<const double> x,
                             std::span<const double> y,
                             std::span<const std::string> names = {});
RegressionFit fit_linear_single(std::span<const double> x,
                                std::span<const double> y,
                                std::span<const std::string> names = {});

struct PredictorMatrix {
  std::vector<std::string> names;        // one per column
  std::vector<std::vector<double>> rows;  // each row has names.size() values
};

// QR-based OLS with an intercept column. Requires full column rank and at
// least one residual degree of freedom.
RegressionFit fit_multilinear(const PredictorMatrix& predictors,
                              std::span<const double> y,
                              std::span<const std::string> names = {});

double predict(const RegressionFit& fit, std::span<const double> row);

struct ResidualTable {
  std::vector<ResidualRow> rows;
  double average_percent_residual = 0;
};

ResidualTable evaluate(const RegressionFit& fit,
                       std::span<const std::string> names,
                       const std::vector<std::vector<double>>& predictor_rows,
                       std::span<const double> observed);

// Squared Pearson correlation.
double r_squared_between(std::span<const double> x, std::span<const double> y);

// Sum of squared residuals of the model over the given rows.
double residual_sum_of_squares(const RegressionFit& fit,
                               const std::vector<std::vector<double>>& rows,
                               std::span<const double> y);

}  // namespace gpqspr

#endif  // GPQSPR_REGRESSION_H_
