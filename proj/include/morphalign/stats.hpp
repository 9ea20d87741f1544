// Copyright 2026 The MorphAlign Authors
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

// Two-sample t-tests, Pearson correlation, OLS with dummy-coded factors and
// nested-model F-tests.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace morphalign::stats {

double mean(std::span<const double> x);
/// Sample variance (n - 1 denominator).
double variance(std::span<const double> x);

/// Student-t and F distribution functions (incomplete-beta based).
double student_t_cdf(double t, double df);
double student_t_quantile(double p, double df);
double f_cdf(double x, double df_num, double df_den);
/// Upper tail P(F > x), accurate far into the tail.
double f_sf(double x, double df_num, double df_den);
double f_quantile(double p, double df_num, double df_den);

struct TTestResult {
  double mean_a = 0.0;
  double mean_b = 0.0;
  double t = 0.0;
  double df = 0.0;
  /// Two-sided.
  double p = 1.0;
};

/// Welch's unequal-variance t-test with Welch-Satterthwaite df. Both groups
/// need at least two values. Two constant groups with equal means give
/// t = 0, p = 1; constant groups with different means are a StatError.
TTestResult welch_t(std::span<const double> a, std::span<const double> b);

/// Equal-variance (pooled) t-test, df = n_a + n_b - 2.
TTestResult pooled_t(std::span<const double> a, std::span<const double> b);

struct PearsonResult {
  double r = 0.0;
  /// F = r^2 (n - 2) / (1 - r^2) on (1, n - 2) degrees of freedom.
  double F = 0.0;
  double df_num = 1.0;
  double df_den = 0.0;
  double p = 1.0;
};

PearsonResult pearson_r(std::span<const double> x, std::span<const double> y);

/// Regression design. An intercept column is always present; factors are
/// dummy coded against their first level in sorted order, producing
/// columns named "factor[level]".
class Design {
 public:
  explicit Design(std::size_t rows);

  Design& add_numeric(const std::string& name, std::vector<double> values);
  Design& add_factor(const std::string& name, const std::vector<std::string>& levels);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<double>>& columns() const { return columns_; }

 private:
  void add_column(std::string name, std::vector<double> values);

  std::size_t rows_;
  std::vector<std::string> names_;
  std::vector<std::vector<double>> columns_;
};

struct FTestResult {
  double F = 0.0;
  double df_num = 0.0;
  double df_den = 0.0;
  double p = 1.0;
};

struct RegressionResult {
  std::vector<std::string> names;
  std::vector<double> coefficients;
  std::vector<double> residuals;
  std::vector<double> response;
  double rss = 0.0;
  double tss = 0.0;
  double r2 = 0.0;
  double adj_r2 = 0.0;
  double df_resid = 0.0;
  /// Against the intercept-only model until nested_f() supplies another.
  FTestResult vs_reduced;

  std::optional<double> coefficient(const std::string& name) const;
};

/// Least squares via column-pivoted QR. Requires rows >= cols + 1, a
/// non-constant response and full column rank; a rank-deficient design is a
/// StatError naming the dependent columns.
RegressionResult ols_fit(std::span<const double> y, const Design& design);

/// F = ((RSS_r - RSS_f) / (df_r - df_f)) / (RSS_f / df_f). The reduced
/// model's columns must be a subset of the full model's, over the same
/// response. A perfect full fit gives F = inf, p = 0.
FTestResult nested_f(const RegressionResult& full, const RegressionResult& reduced);

/// Kolmogorov-Smirnov distance between `sample` and Uniform(0, 1).
double ks_uniform_statistic(std::vector<double> sample);
/// Asymptotic two-sided p-value for a KS distance over n points.
double ks_pvalue(double d, std::size_t n);

}  // namespace morphalign::stats
