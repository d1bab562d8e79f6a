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

#include "gpqspr/regression.h"

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace gpqspr {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void CheckLengths(size_t a, size_t b, const char* what) {
  if (a != b) {
    throw RegressionError(RegressionErrorKind::kLengthMismatch,
                          std::string(what) + ": length mismatch (" +
                              std::to_string(a) + " vs " + std::to_string(b) +
                              ")");
  }
}

std::string RowName(std::span<const std::string> names, size_t i) {
  return names.empty() ? std::to_string(i + 1) : names[i];
}

ResidualRow MakeRow(std::string name, double observed, double predicted) {
  ResidualRow row;
  row.name = std::move(name);
  row.observed = observed;
  row.predicted = predicted;
  row.residual = observed - predicted;
  row.percent_residual =
      observed == 0 ? kNaN : 100.0 * std::abs(row.residual) / std::abs(observed);
  return row;
}

// Fills r^2, adjusted r^2, standard error and residuals from predictions on
// the training rows. p counts predictors, not the intercept.
void FillStatistics(RegressionFit& fit, std::span<const double> y,
                    std::span<const double> predicted,
                    std::span<const std::string> names) {
  const size_t n = y.size();
  const size_t p = fit.predictor_count();
  double mean = 0;
  for (double v : y) mean += v;
  mean /= static_cast<double>(n);
  double ss_res = 0;
  double ss_tot = 0;
  fit.residuals.clear();
  for (size_t i = 0; i < n; ++i) {
    fit.residuals.push_back(MakeRow(RowName(names, i), y[i], predicted[i]));
    ss_res += fit.residuals.back().residual * fit.residuals.back().residual;
    ss_tot += (y[i] - mean) * (y[i] - mean);
  }
  fit.observations = n;
  if (ss_tot == 0) {
    fit.r_squared = ss_res == 0 ? 1.0 : 0.0;
  } else {
    fit.r_squared = 1.0 - ss_res / ss_tot;
  }
  const double dof = static_cast<double>(n) - static_cast<double>(p) - 1.0;
  fit.adjusted_r_squared =
      1.0 - (1.0 - fit.r_squared) * (static_cast<double>(n) - 1.0) / dof;
  fit.standard_error = std::sqrt(ss_res / dof);
}

RegressionFit FitSingle(ModelKind kind, std::span<const double> x,
                        std::span<const double> y,
                        std::span<const std::string> names) {
  CheckLengths(x.size(), y.size(), "x/y");
  if (!names.empty()) CheckLengths(names.size(), y.size(), "names/y");
  if (x.size() < 3) {
    throw RegressionError(RegressionErrorKind::kTooFewRows,
                          "single-predictor fit needs at least 3 rows");
  }
  std::vector<double> t(x.begin(), x.end());
  if (kind == ModelKind::kLogSingle) {
    for (size_t i = 0; i < t.size(); ++i) {
      if (!(t[i] > 0)) {
        throw RegressionError(
            RegressionErrorKind::kNonPositive,
            "log model needs x > 0; row '" + RowName(names, i) + "' has x = " +
                std::to_string(t[i]));
      }
      t[i] = std::log(t[i]);
    }
  }
  const double n = static_cast<double>(t.size());
  double mx = 0;
  double my = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    mx += t[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0;
  double sxy = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    sxx += (t[i] - mx) * (t[i] - mx);
    sxy += (t[i] - mx) * (y[i] - my);
  }
  if (sxx == 0) {
    throw RegressionError(RegressionErrorKind::kDegenerate,
                          "predictor has zero variance");
  }
  RegressionFit fit;
  fit.kind = kind;
  fit.predictor_names = {kind == ModelKind::kLogSingle ? "ln(x)" : "x"};
  const double slope = sxy / sxx;
  fit.coefficients = {slope, my - slope * mx};
  std::vector<double> predicted(t.size());
  for (size_t i = 0; i < t.size(); ++i) {
    predicted[i] = fit.coefficients[0] * t[i] + fit.coefficients[1];
  }
  FillStatistics(fit, y, predicted, names);
  return fit;
}

}  // namespace

const char* ToString(ModelKind kind) {
  switch (kind) {
    case ModelKind::kLogSingle:
      return "log_single";
    case ModelKind::kLinearSingle:
      return "linear_single";
    case ModelKind::kMultilinear:
      return "multilinear";
  }
  return "unknown";
}

double RegressionFit::multiple_r() const { return std::sqrt(r_squared); }

RegressionFit fixed_model(ModelKind kind, std::vector<double> coefficients,
                          std::vector<std::string> predictor_names) {
  RegressionFit fit;
  fit.kind = kind;
  if (kind != ModelKind::kMultilinear) {
    if (coefficients.size() != 2) {
      throw RegressionError(RegressionErrorKind::kArity,
                            "single-predictor model takes 2 coefficients");
    }
    if (predictor_names.empty()) {
      predictor_names = {kind == ModelKind::kLogSingle ? "ln(x)" : "x"};
    }
  } else {
    if (coefficients.size() < 2) {
      throw RegressionError(RegressionErrorKind::kArity,
                            "multilinear model needs an intercept and at "
                            "least one slope");
    }
    if (predictor_names.empty()) {
      for (size_t j = 1; j < coefficients.size(); ++j) {
        predictor_names.push_back("x" + std::to_string(j));
      }
    }
    CheckLengths(predictor_names.size(), coefficients.size() - 1,
                 "predictor names/coefficients");
  }
  fit.predictor_names = std::move(predictor_names);
  fit.coefficients = std::move(coefficients);
  fit.r_squared = fit.adjusted_r_squared = fit.standard_error = kNaN;
  return fit;
}

RegressionFit fit_log_single(std::span<const double> x,
                             std::span<const double> y,
                             std::span<const std::string> names) {
  return FitSingle(ModelKind::kLogSingle, x, y, names);
}

RegressionFit fit_linear_single(std::span<const double> x,
                                std::span<const double> y,
                                std::span<const std::string> names) {
  return FitSingle(ModelKind::kLinearSingle, x, y, names);
}

RegressionFit fit_multilinear(const PredictorMatrix& predictors,
                              std::span<const double> y,
                              std::span<const std::string> names) {
  const size_t n = predictors.rows.size();
  const size_t p = predictors.names.size();
  CheckLengths(n, y.size(), "predictor rows/y");
  if (!names.empty()) CheckLengths(names.size(), n, "names/y");
  if (p == 0) {
    throw RegressionError(RegressionErrorKind::kArity,
                          "multilinear fit needs at least one predictor");
  }
  for (const auto& row : predictors.rows) {
    CheckLengths(row.size(), p, "predictor row/columns");
  }
  if (n < p + 2) {
    throw RegressionError(RegressionErrorKind::kTooFewRows,
                          "multilinear fit with " + std::to_string(p) +
                              " predictors needs at least " +
                              std::to_string(p + 2) + " rows");
  }
  Eigen::MatrixXd design(n, p + 1);
  Eigen::VectorXd response(n);
  for (size_t i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    for (size_t j = 0; j < p; ++j) design(i, j + 1) = predictors.rows[i][j];
    response(i) = y[i];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < static_cast<Eigen::Index>(p + 1)) {
    throw RegressionError(RegressionErrorKind::kRankDeficient,
                          "design matrix is rank deficient (rank " +
                              std::to_string(qr.rank()) + " of " +
                              std::to_string(p + 1) + ")");
  }
  const Eigen::VectorXd beta = qr.solve(response);
  const Eigen::VectorXd fitted = design * beta;

  RegressionFit fit;
  fit.kind = ModelKind::kMultilinear;
  fit.predictor_names = predictors.names;
  fit.coefficients.assign(beta.data(), beta.data() + beta.size());
  FillStatistics(fit, y, std::span<const double>(fitted.data(), n), names);
  return fit;
}

double predict(const RegressionFit& fit, std::span<const double> row) {
  const size_t arity = fit.kind == ModelKind::kMultilinear
                           ? fit.coefficients.size() - 1
                           : 1;
  if (row.size() != arity) {
    throw RegressionError(RegressionErrorKind::kArity,
                          "model expects " + std::to_string(arity) +
                              " predictor values, got " +
                              std::to_string(row.size()));
  }
  switch (fit.kind) {
    case ModelKind::kLogSingle:
      if (!(row[0] > 0)) {
        throw RegressionError(RegressionErrorKind::kNonPositive,
                              "log model needs x > 0, got " +
                                  std::to_string(row[0]));
      }
      return fit.coefficients[0] * std::log(row[0]) + fit.coefficients[1];
    case ModelKind::kLinearSingle:
      return fit.coefficients[0] * row[0] + fit.coefficients[1];
    case ModelKind::kMultilinear: {
      double value = fit.coefficients[0];
      for (size_t j = 0; j < row.size(); ++j) {
        value += fit.coefficients[j + 1] * row[j];
      }
      return value;
    }
  }
  return kNaN;
}

ResidualTable evaluate(const RegressionFit& fit,
                       std::span<const std::string> names,
                       const std::vector<std::vector<double>>& predictor_rows,
                       std::span<const double> observed) {
  CheckLengths(predictor_rows.size(), observed.size(), "predictor rows/observed");
  if (!names.empty()) CheckLengths(names.size(), observed.size(), "names/observed");
  ResidualTable table;
  double sum = 0;
  for (size_t i = 0; i < observed.size(); ++i) {
    table.rows.push_back(MakeRow(RowName(names, i), observed[i],
                                 predict(fit, predictor_rows[i])));
    sum += table.rows.back().percent_residual;
  }
  table.average_percent_residual =
      table.rows.empty() ? 0.0 : sum / static_cast<double>(table.rows.size());
  return table;
}

double r_squared_between(std::span<const double> x, std::span<const double> y) {
  CheckLengths(x.size(), y.size(), "x/y");
  if (x.size() < 3) {
    throw RegressionError(RegressionErrorKind::kTooFewRows,
                          "correlation needs at least 3 rows");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0;
  double my = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0;
  double syy = 0;
  double sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) {
    throw RegressionError(RegressionErrorKind::kDegenerate,
                          "correlation undefined for a zero-variance series");
  }
  return (sxy * sxy) / (sxx * syy);
}

double residual_sum_of_squares(const RegressionFit& fit,
                               const std::vector<std::vector<double>>& rows,
                               std::span<const double> y) {
  CheckLengths(rows.size(), y.size(), "rows/y");
  double ss = 0;
  for (size_t i = 0; i < y.size(); ++i) {
    const double r = y[i] - predict(fit, rows[i]);
    ss += r * r;
  }
  return ss;
}

}  // namespace gpqspr
