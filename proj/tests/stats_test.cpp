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

#include <gtest/gtest.h>

#include <cmath>

#include "morphalign/errors.hpp"
#include "morphalign/rng.hpp"
#include "stat_oracles.hpp"

namespace morphalign::stats {
namespace {

using Vec = std::vector<double>;
using oracle::HandWelch;
using oracle::NormalEquations;

const Vec kX = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
const std::vector<std::string> kG = {"a", "b", "a", "c", "b", "a", "c", "b", "c", "a"};
const Vec kY = {2.1, 3.9, 6.2, 8.1, 9.7, 12.2, 13.8, 16.1, 18.3, 19.9};

//===----------------------------------------------------------------------===//
// Distributions
//===----------------------------------------------------------------------===//

TEST(Distributions, PublishedQuantiles) {
  EXPECT_NEAR(student_t_quantile(0.975, 10), 2.228, 0.001);
  EXPECT_NEAR(f_quantile(0.95, 3, 45), 2.81, 0.01);
}

TEST(Distributions, MatchReferenceValues) {
  // scipy.stats reference values.
  EXPECT_NEAR(student_t_quantile(0.975, 10), 2.2281388519649385, 1e-10);
  EXPECT_NEAR(f_quantile(0.95, 3, 45), 2.811543506332673, 1e-10);
  EXPECT_NEAR(student_t_cdf(-2.5, 7.3), 0.019825117332800207, 1e-10);
  EXPECT_NEAR(f_sf(5.221, 3, 45), 0.0035289515193345053, 1e-10);
  EXPECT_NEAR(f_cdf(5.221, 3, 45) + f_sf(5.221, 3, 45), 1.0, 1e-14);
}

//===----------------------------------------------------------------------===//
// welch_t
//===----------------------------------------------------------------------===//

TEST(WelchT, IdenticalGroups) {
  const Vec a = {0.3, 0.5, 0.7};
  const auto r = welch_t(a, a);
  EXPECT_EQ(r.t, 0.0);
  EXPECT_DOUBLE_EQ(r.p, 1.0);
}

TEST(WelchT, MatchesHandFormula) {
  const Vec a = {1, 2, 3, 4};
  const Vec b = {2, 4, 6, 8};
  const auto [t, df] = HandWelch(a, b);
  const auto r = welch_t(a, b);
  EXPECT_NEAR(r.t, t, 1e-10);
  EXPECT_NEAR(r.df, df, 1e-10);
  // Closed form: t = -2.5 / sqrt(5/12 + 20/12) = -sqrt(3), df = 75/17.
  EXPECT_NEAR(r.t, -std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(r.df, 75.0 / 17.0, 1e-12);
  EXPECT_NEAR(r.p, 0.15158050484530383, 1e-10);
}

TEST(WelchT, TwoSmallGroups) {
  const Vec a = {0.9, 0.8};
  const Vec b = {0.1, 0.2};
  const auto [t, df] = HandWelch(a, b);
  const auto r = welch_t(a, b);
  EXPECT_NEAR(r.t, t, 1e-10);
  EXPECT_NEAR(r.t, 0.7 / 0.07071067811865475, 1e-9);
  EXPECT_NEAR(r.df, 2.0, 1e-12);
  EXPECT_NEAR(r.p, 0.010050506338833462, 1e-10);
}

TEST(WelchT, ShiftInvariantAndSwapAntisymmetric) {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Vec a(2 + rng.below(10)), b(2 + rng.below(10));
    for (auto& v : a) v = rng.uniform() * 5;
    for (auto& v : b) v = rng.uniform() * 3 + 1;
    const auto r = welch_t(a, b);
    const auto swapped = welch_t(b, a);
    EXPECT_NEAR(swapped.t, -r.t, 1e-12);
    EXPECT_NEAR(swapped.p, r.p, 1e-12);
    EXPECT_GE(r.p, 0.0);
    EXPECT_LE(r.p, 1.0);
    EXPECT_GT(r.df, 0.0);
    Vec a2 = a, b2 = b;
    for (auto& v : a2) v += 17.25;
    for (auto& v : b2) v += 17.25;
    const auto shifted = welch_t(a2, b2);
    EXPECT_NEAR(shifted.t, r.t, 1e-9);
    EXPECT_NEAR(shifted.df, r.df, 1e-7);
  }
}

TEST(WelchT, Errors) {
  EXPECT_THROW(welch_t(Vec{1.0}, Vec{1.0, 2.0}), StatError);
  EXPECT_THROW(welch_t(Vec{1.0, 1.0}, Vec{2.0, 2.0}), StatError);
  const auto same = welch_t(Vec{1.0, 1.0}, Vec{1.0, 1.0});
  EXPECT_EQ(same.t, 0.0);
  EXPECT_EQ(same.p, 1.0);
}

TEST(PooledT, EqualSizesMatchWelchStatistic) {
  const Vec a = {1, 2, 3, 4};
  const Vec b = {2, 4, 6, 8};
  EXPECT_NEAR(pooled_t(a, b).t, welch_t(a, b).t, 1e-12);
  EXPECT_EQ(pooled_t(a, b).df, 6.0);
}

//===----------------------------------------------------------------------===//
// pearson_r
//===----------------------------------------------------------------------===//

TEST(PearsonR, PerfectLines) {
  const Vec x = {1, 2, 3, 4, 5};
  Vec neg;
  for (double v : x) neg.push_back(-2 * v + 5);
  EXPECT_NEAR(pearson_r(x, x).r, 1.0, 1e-15);
  EXPECT_NEAR(pearson_r(x, neg).r, -1.0, 1e-15);
  EXPECT_EQ(pearson_r(x, x).p, 0.0);
}

TEST(PearsonR, MatchesCovarianceFormula) {
  const Vec x = {1.5, 2.0, 3.1, 4.7, 5.2, 6.9, 7.1};
  const Vec y = {2.3, 1.9, 3.5, 4.0, 6.1, 5.8, 7.7};
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  const double n = x.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    syy += y[i] * y[i];
    sxy += x[i] * y[i];
  }
  const double hand = (n * sxy - sx * sy) /
                      std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
  const auto r = pearson_r(x, y);
  EXPECT_NEAR(r.r, hand, 1e-12);
  EXPECT_NEAR(r.r, 0.9386391011435291, 1e-12);
  EXPECT_NEAR(r.F, 37.03212273213905, 1e-8);
  EXPECT_NEAR(r.p, 0.001732828344997653, 1e-10);
  EXPECT_EQ(r.df_den, 5.0);
}

TEST(PearsonR, Errors) {
  EXPECT_THROW(pearson_r(Vec{1, 2, 3}, Vec{4, 4, 4}), StatError);
  EXPECT_THROW(pearson_r(Vec{1, 2}, Vec{1, 2}), StatError);
  EXPECT_THROW(pearson_r(Vec{1, 2, 3}, Vec{1, 2}), StatError);
}

//===----------------------------------------------------------------------===//
// ols_fit / nested_f
//===----------------------------------------------------------------------===//

TEST(OlsFit, PerfectLinear) {
  Vec y;
  for (double v : kX) y.push_back(3.0 * v - 1.5);
  const auto r = ols_fit(y, Design(10).add_numeric("x", kX));
  EXPECT_NEAR(*r.coefficient("(Intercept)"), -1.5, 1e-12);
  EXPECT_NEAR(*r.coefficient("x"), 3.0, 1e-12);
  EXPECT_NEAR(r.r2, 1.0, 1e-12);
}

TEST(OlsFit, OrthogonalResponse) {
  // y is symmetric about the centre of x, so the fitted slope is zero.
  const Vec x = {1, 2, 3, 4, 5};
  const Vec y = {2, 1, 0, 1, 2};
  const auto r = ols_fit(y, Design(5).add_numeric("x", x));
  EXPECT_NEAR(*r.coefficient("x"), 0.0, 1e-12);
  EXPECT_NEAR(r.r2, 0.0, 1e-12);
}

TEST(OlsFit, MatchesNormalEquations) {
  Design d(10);
  d.add_numeric("x", kX).add_factor("g", kG);
  ASSERT_EQ(d.names(), (std::vector<std::string>{"(Intercept)", "x", "g[b]", "g[c]"}));
  const auto r = ols_fit(kY, d);
  const Vec beta = NormalEquations(d.columns(), kY);
  for (std::size_t i = 0; i < beta.size(); ++i) EXPECT_NEAR(r.coefficients[i], beta[i], 1e-9);
  // statsmodels reference.
  EXPECT_NEAR(*r.coefficient("(Intercept)"), 0.10869565217391308, 1e-9);
  EXPECT_NEAR(*r.coefficient("x"), 1.9982608695652186, 1e-9);
  EXPECT_NEAR(*r.coefficient("g[b]"), -0.2, 1e-9);
  EXPECT_NEAR(*r.coefficient("g[c]"), -0.030434782608696587, 1e-9);
  EXPECT_NEAR(r.r2, 0.9991939433153264, 1e-12);
  EXPECT_NEAR(r.adj_r2, 0.9987909149729897, 1e-12);
}

TEST(OlsFit, ResidualsOrthogonalToDesign) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 30;
    Vec x1(n), x2(n), y(n);
    std::vector<std::string> f(n);
    for (std::size_t i = 0; i < n; ++i) {
      x1[i] = rng.uniform();
      x2[i] = rng.uniform();
      f[i] = std::string(1, static_cast<char>('p' + rng.below(3)));
      y[i] = rng.uniform();
    }
    Design d(n);
    d.add_numeric("x1", x1).add_numeric("x2", x2).add_factor("f", f);
    const auto r = ols_fit(y, d);
    for (const auto& col : d.columns()) {
      double dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot += col[i] * r.residuals[i];
      EXPECT_LT(std::fabs(dot), 1e-8);
    }
    const auto reduced = ols_fit(y, Design(n).add_numeric("x1", x1));
    EXPECT_GE(r.r2 + 1e-12, reduced.r2);
  }
}

TEST(OlsFit, RankDeficiencyNamesColumns) {
  Vec twice;
  for (double v : kX) twice.push_back(2 * v);
  try {
    ols_fit(kY, Design(10).add_numeric("x", kX).add_numeric("x2", twice));
    FAIL() << "expected StatError";
  } catch (const StatError& e) {
    const std::string msg = e.what();
    EXPECT_TRUE(msg.find("x") != std::string::npos) << msg;
  }
  EXPECT_THROW(ols_fit(Vec{1, 2}, Design(2).add_numeric("x", {1, 2})), StatError);
}

TEST(NestedF, MatchesAnovaReference) {
  Design full(10), reduced(10);
  full.add_numeric("x", kX).add_factor("g", kG);
  reduced.add_numeric("x", kX);
  const auto f = nested_f(ols_fit(kY, full), ols_fit(kY, reduced));
  EXPECT_EQ(f.df_num, 2.0);
  EXPECT_EQ(f.df_den, 6.0);
  EXPECT_NEAR(f.F, 0.8392475670543584, 1e-9);
  EXPECT_NEAR(f.p, 0.4771175712028668, 1e-9);
}

TEST(NestedF, SameModelGivesZero) {
  const auto m = ols_fit(kY, Design(10).add_numeric("x", kX));
  const auto f = nested_f(m, m);
  EXPECT_EQ(f.F, 0.0);
  EXPECT_EQ(f.p, 1.0);
}

TEST(NestedF, PerfectPredictorSendsPToZero) {
  Vec noise = {0.3, -0.1, 0.7, 0.2, -0.5, 0.9, 0.1, -0.3, 0.4, 0.05};
  const auto full = ols_fit(kY, Design(10).add_numeric("x", kX).add_numeric("y", kY));
  const auto reduced = ols_fit(kY, Design(10).add_numeric("x", kX));
  const auto f = nested_f(full, reduced);
  EXPECT_TRUE(f.F > 1e12);
  EXPECT_LT(f.p, 1e-15);
}

TEST(NestedF, NonNestedIsError) {
  Vec other = {5, 3, 1, 2, 4, 6, 8, 7, 9, 10};
  const auto a = ols_fit(kY, Design(10).add_numeric("x", kX));
  const auto b = ols_fit(kY, Design(10).add_numeric("z", other));
  EXPECT_THROW(nested_f(a, b), StatError);
}

TEST(NestedF, EqualsSquaredTForGroupDummy) {
  // One two-level factor with equal group sizes: F equals the pooled t^2,
  // and equal sizes make the pooled and Welch statistics coincide.
  const Vec a = {3.1, 2.7, 3.9, 3.3, 2.8};
  const Vec b = {4.2, 3.6, 4.9, 4.4, 3.8};
  Vec y = a;
  y.insert(y.end(), b.begin(), b.end());
  std::vector<std::string> g(5, "a");
  g.insert(g.end(), 5, "b");
  const auto full = ols_fit(y, Design(10).add_factor("g", g));
  const auto reduced = ols_fit(y, Design(10));
  const auto f = nested_f(full, reduced);
  const double t = welch_t(a, b).t;
  EXPECT_NEAR(f.F, t * t, 1e-6);
}

TEST(KolmogorovSmirnov, Basics) {
  Vec grid;
  for (int i = 0; i < 100; ++i) grid.push_back((i + 0.5) / 100.0);
  EXPECT_NEAR(ks_uniform_statistic(grid), 0.005, 1e-12);
  EXPECT_GT(ks_pvalue(0.005, 100), 0.99);
  EXPECT_LT(ks_pvalue(0.3, 100), 1e-6);
  // Critical value at alpha = 0.01 is about 1.63 / sqrt(n).
  EXPECT_NEAR(ks_pvalue(1.6276 / (std::sqrt(1000.0) + 0.12 + 0.11 / std::sqrt(1000.0)), 1000),
              0.01, 1e-4);
}

}  // namespace
}  // namespace morphalign::stats
