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


// Longhand statistics used as independent oracles by the tests.

#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace morphalign::oracle {

using Vec = std::vector<double>;

// Textbook Welch statistic and Satterthwaite df, written out longhand.
inline std::pair<double, double> HandWelch(const Vec& a, const Vec& b) {
  auto m = [](const Vec& v) {
    double s = 0;
    for (double x : v) s += x;
    return s / v.size();
  };
  auto s2 = [&](const Vec& v) {
    const double mu = m(v);
    double s = 0;
    for (double x : v) s += (x - mu) * (x - mu);
    return s / (v.size() - 1);
  };
  const double va = s2(a) / a.size();
  const double vb = s2(b) / b.size();
  const double t = (m(a) - m(b)) / std::sqrt(va + vb);
  const double df = (va + vb) * (va + vb) /
                    (va * va / (a.size() - 1) + vb * vb / (b.size() - 1));
  return {t, df};
}

// Solves (X'X) beta = X'y with Gauss-Jordan elimination on the augmented
// normal-equation matrix.
inline Vec NormalEquations(const std::vector<Vec>& cols, const Vec& y) {
  const std::size_t p = cols.size();
  std::vector<Vec> a(p, Vec(p + 1, 0.0));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t r = 0; r < y.size(); ++r) a[i][j] += cols[i][r] * cols[j][r];
    }
    for (std::size_t r = 0; r < y.size(); ++r) a[i][p] += cols[i][r] * y[r];
  }
  for (std::size_t c = 0; c < p; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < p; ++r) {
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    }
    std::swap(a[c], a[piv]);
    for (std::size_t r = 0; r < p; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= p; ++k) a[r][k] -= f * a[c][k];
    }
  }
  Vec beta(p);
  for (std::size_t i = 0; i < p; ++i) beta[i] = a[i][p] / a[i][i];
  return beta;
}

// Pearson r from the covariance definition.
inline double HandPearson(const Vec& x, const Vec& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= x.size();
  my /= y.size();
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace morphalign::oracle
