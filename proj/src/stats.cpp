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

#include "morphalign/stats.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <limits>
#include <set>

#include "morphalign/errors.hpp"

namespace morphalign::stats {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double two_sided_t_p(double t, double df) {
  if (std::isinf(t)) return 0.0;
  const boost::math::students_t dist(df);
  return std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t))));
}

void require_size(std::span<const double> x, std::size_t n, const char* what) {
  if (x.size() < n) {
    throw StatError(std::string(what) + ": need at least " + std::to_string(n) +
                    " values, got " + std::to_string(x.size()));
  }
}

}  // namespace

double mean(std::span<const double> x) {
  if (x.empty()) throw StatError("mean of empty sample");
  double s = 0.0;
  for (const double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double variance(std::span<const double> x) {
  require_size(x, 2, "variance");
  const double m = mean(x);
  double ss = 0.0;
  for (const double v : x) ss += (v - m) * (v - m);
  return ss / static_cast<double>(x.size() - 1);
}

double student_t_cdf(double t, double df) {
  return boost::math::cdf(boost::math::students_t(df), t);
}

double student_t_quantile(double p, double df) {
  return boost::math::quantile(boost::math::students_t(df), p);
}

double f_cdf(double x, double df_num, double df_den) {
  if (x <= 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  return boost::math::cdf(boost::math::fisher_f(df_num, df_den), x);
}

double f_sf(double x, double df_num, double df_den) {
  if (x <= 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  return boost::math::cdf(boost::math::complement(boost::math::fisher_f(df_num, df_den), x));
}

double f_quantile(double p, double df_num, double df_den) {
  return boost::math::quantile(boost::math::fisher_f(df_num, df_den), p);
}

TTestResult welch_t(std::span<const double> a, std::span<const double> b) {
  require_size(a, 2, "welch_t group a");
  require_size(b, 2, "welch_t group b");
  TTestResult r;
  r.mean_a = mean(a);
  r.mean_b = mean(b);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double sa = variance(a) / na;
  const double sb = variance(b) / nb;
  if (sa + sb == 0.0) {
    if (r.mean_a != r.mean_b) {
      throw StatError("welch_t: both groups are constant with different means");
    }
    r.t = 0.0;
    r.df = na + nb - 2.0;
    r.p = 1.0;
    return r;
  }
  r.t = (r.mean_a - r.mean_b) / std::sqrt(sa + sb);
  r.df = (sa + sb) * (sa + sb) / (sa * sa / (na - 1.0) + sb * sb / (nb - 1.0));
  r.p = two_sided_t_p(r.t, r.df);
  return r;
}

TTestResult pooled_t(std::span<const double> a, std::span<const double> b) {
  require_size(a, 2, "pooled_t group a");
  require_size(b, 2, "pooled_t group b");
  TTestResult r;
  r.mean_a = mean(a);
  r.mean_b = mean(b);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  r.df = na + nb - 2.0;
  const double sp2 = ((na - 1.0) * variance(a) + (nb - 1.0) * variance(b)) / r.df;
  if (sp2 == 0.0) {
    if (r.mean_a != r.mean_b) {
      throw StatError("pooled_t: both groups are constant with different means");
    }
    return r;
  }
  r.t = (r.mean_a - r.mean_b) / std::sqrt(sp2 * (1.0 / na + 1.0 / nb));
  r.p = two_sided_t_p(r.t, r.df);
  return r;
}

PearsonResult pearson_r(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw StatError("pearson_r: length mismatch");
  require_size(x, 3, "pearson_r");
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) throw StatError("pearson_r: zero variance");
  PearsonResult r;
  r.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  r.df_den = static_cast<double>(x.size()) - 2.0;
  const double r2 = r.r * r.r;
  r.F = r2 >= 1.0 ? kInf : r2 * r.df_den / (1.0 - r2);
  r.p = f_sf(r.F, r.df_num, r.df_den);
  return r;
}

Design::Design(std::size_t rows) : rows_(rows) {
  add_column("(Intercept)", std::vector<double>(rows, 1.0));
}

void Design::add_column(std::string name, std::vector<double> values) {
  if (values.size() != rows_) {
    throw StatError("design column '" + name + "' has " + std::to_string(values.size()) +
                    " rows, expected " + std::to_string(rows_));
  }
  if (std::find(names_.begin(), names_.end(), name) != names_.end()) {
    throw StatError("duplicate design column '" + name + "'");
  }
  names_.push_back(std::move(name));
  columns_.push_back(std::move(values));
}

Design& Design::add_numeric(const std::string& name, std::vector<double> values) {
  add_column(name, std::move(values));
  return *this;
}

Design& Design::add_factor(const std::string& name, const std::vector<std::string>& levels) {
  if (levels.size() != rows_) {
    throw StatError("factor '" + name + "' has " + std::to_string(levels.size()) +
                    " rows, expected " + std::to_string(rows_));
  }
  const std::set<std::string> distinct(levels.begin(), levels.end());
  auto it = distinct.begin();
  if (it != distinct.end()) ++it;  // first level is the reference
  for (; it != distinct.end(); ++it) {
    std::vector<double> dummy(rows_);
    for (std::size_t i = 0; i < rows_; ++i) dummy[i] = levels[i] == *it ? 1.0 : 0.0;
    add_column(name + "[" + *it + "]", std::move(dummy));
  }
  return *this;
}

std::optional<double> RegressionResult::coefficient(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return coefficients[i];
  }
  return std::nullopt;
}

RegressionResult ols_fit(std::span<const double> y, const Design& design) {
  const std::size_t n = design.rows();
  const std::size_t p = design.cols();
  if (y.size() != n) throw StatError("ols_fit: response length does not match design rows");
  if (n < p + 1) {
    throw StatError("ols_fit: " + std::to_string(n) + " rows cannot fit " + std::to_string(p) +
                    " coefficients (need rows >= columns + 1)");
  }
  Eigen::MatrixXd X(n, p);
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t i = 0; i < n; ++i) X(i, j) = design.columns()[j][i];
  }
  const Eigen::Map<const Eigen::VectorXd> Y(y.data(), static_cast<Eigen::Index>(n));

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  qr.setThreshold(1e-10);
  if (static_cast<std::size_t>(qr.rank()) < p) {
    std::string cols;
    const auto& perm = qr.colsPermutation().indices();
    for (Eigen::Index k = qr.rank(); k < perm.size(); ++k) {
      if (!cols.empty()) cols += ", ";
      cols += design.names()[static_cast<std::size_t>(perm[k])];
    }
    throw StatError("ols_fit: design is rank deficient; collinear column(s): " + cols);
  }
  const Eigen::VectorXd beta = qr.solve(Y);
  const Eigen::VectorXd resid = Y - X * beta;

  RegressionResult r;
  r.names = design.names();
  r.coefficients.assign(beta.data(), beta.data() + p);
  r.residuals.assign(resid.data(), resid.data() + n);
  r.response.assign(y.begin(), y.end());
  const double ybar = Y.mean();
  r.tss = (Y.array() - ybar).square().sum();
  if (r.tss == 0.0) throw StatError("ols_fit: response has zero variance");
  r.rss = resid.squaredNorm();
  r.df_resid = static_cast<double>(n - p);
  r.r2 = std::clamp(1.0 - r.rss / r.tss, 0.0, 1.0);
  r.adj_r2 = 1.0 - (1.0 - r.r2) * static_cast<double>(n - 1) / r.df_resid;

  // Against the intercept-only model (RSS_r = TSS, df_r = n - 1).
  FTestResult& f = r.vs_reduced;
  f.df_num = static_cast<double>(p - 1);
  f.df_den = r.df_resid;
  if (p == 1) {
    f.F = 0.0;
    f.p = 1.0;
  } else if (r.rss == 0.0) {
    f.F = kInf;
    f.p = 0.0;
  } else {
    f.F = std::max(0.0, (r.tss - r.rss) / f.df_num) / (r.rss / f.df_den);
    f.p = f_sf(f.F, f.df_num, f.df_den);
  }
  return r;
}

FTestResult nested_f(const RegressionResult& full, const RegressionResult& reduced) {
  if (full.response != reduced.response) {
    throw StatError("nested_f: models were fit to different responses");
  }
  for (const auto& name : reduced.names) {
    if (std::find(full.names.begin(), full.names.end(), name) == full.names.end()) {
      throw StatError("nested_f: reduced column '" + name + "' is not in the full model");
    }
  }
  FTestResult f;
  f.df_num = reduced.df_resid - full.df_resid;
  f.df_den = full.df_resid;
  if (f.df_num <= 0.0) {
    f.F = 0.0;
    f.p = 1.0;
    return f;
  }
  const double gain = std::max(0.0, reduced.rss - full.rss);
  if (full.rss == 0.0) {
    f.F = gain > 0.0 ? kInf : 0.0;
    f.p = gain > 0.0 ? 0.0 : 1.0;
    return f;
  }
  f.F = (gain / f.df_num) / (full.rss / f.df_den);
  f.p = f_sf(f.F, f.df_num, f.df_den);
  return f;
}

double ks_uniform_statistic(std::vector<double> sample) {
  if (sample.empty()) throw StatError("ks_uniform_statistic: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double u = std::clamp(sample[i], 0.0, 1.0);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - u, u - static_cast<double>(i) / n});
  }
  return d;
}

double ks_pvalue(double d, std::size_t n) {
  // Kolmogorov limiting distribution with the Stephens small-n correction.
  const double sn = std::sqrt(static_cast<double>(n));
  const double lambda = (sn + 0.12 + 0.11 / sn) * d;
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = sign * std::exp(-2.0 * k * k * lambda * lambda);
    sum += term;
    if (std::fabs(term) < 1e-16) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace morphalign::stats
