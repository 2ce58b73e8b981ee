// Copyright 2026 The schupp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "schupp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace schupp::linalg {
namespace {

// Row-major n x n view used by the Householder/QL routines.
struct Square {
  int n;
  std::vector<double> a;
  double& operator()(int r, int c) {
    return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)];
  }
};

// Householder reduction of v (symmetric on entry) to tridiagonal form;
// on exit v holds the orthogonal transform, d the diagonal, e the
// sub-diagonal in e[1..n-1].
void householder_tridiagonalize(Square& v, std::vector<double>& d, std::vector<double>& e) {
  const int n = v.n;
  for (int j = 0; j < n; ++j) d[j] = v(n - 1, j);

  for (int i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (int k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (int j = 0; j < i; ++j) {
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
        v(j, i) = 0.0;
      }
    } else {
      for (int k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (int j = 0; j < i; ++j) e[j] = 0.0;

      for (int j = 0; j < i; ++j) {
        f = d[j];
        v(j, i) = f;
        g = e[j] + v(j, j) * f;
        for (int k = j + 1; k <= i - 1; ++k) {
          g += v(k, j) * d[k];
          e[k] += v(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (int j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (int j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (int j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (int k = j; k <= i - 1; ++k) v(k, j) -= (f * e[k] + g * d[k]);
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  for (int i = 0; i < n - 1; ++i) {
    v(n - 1, i) = v(i, i);
    v(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (int k = 0; k <= i; ++k) d[k] = v(k, i + 1) / h;
      for (int j = 0; j <= i; ++j) {
        double g = 0.0;
        for (int k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
        for (int k = 0; k <= i; ++k) v(k, j) -= g * d[k];
      }
    }
    for (int k = 0; k <= i; ++k) v(k, i + 1) = 0.0;
  }
  for (int j = 0; j < n; ++j) {
    d[j] = v(n - 1, j);
    v(n - 1, j) = 0.0;
  }
  v(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicit QL with Wilkinson-style shifts on (d, e[1..n-1]). When v is
// non-null the rotations are accumulated into its columns.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, Square* v) {
  const int n = static_cast<int>(d.size());
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr int max_sweeps = 60;
  double f = 0.0;
  double tst1 = 0.0;
  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    int m = l;
    while (m < n - 1 && std::abs(e[m]) > eps * tst1) ++m;

    if (m > l) {
      int iter = 0;
      do {
        if (++iter > max_sweeps) throw ConvergenceError("tridiagonal QL did not converge");
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (int i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0;
        double c2 = c;
        double c3 = c;
        const double el1 = e[l + 1];
        double s = 0.0;
        double s2 = 0.0;
        for (int i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          if (v != nullptr) {
            for (int k = 0; k < n; ++k) {
              h = (*v)(k, i + 1);
              (*v)(k, i + 1) = s * (*v)(k, i) + c * h;
              (*v)(k, i) = c * (*v)(k, i) - s * h;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

SymmetricEigen collect(const std::vector<double>& d, const Square* v, int k) {
  const int n = static_cast<int>(d.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });

  SymmetricEigen out;
  out.n = n;
  k = std::clamp(k, 0, n);
  out.values.reserve(k);
  for (int c = 0; c < k; ++c) out.values.push_back(d[order[c]]);
  if (v != nullptr) {
    out.vectors.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
      for (int r = 0; r < n; ++r) {
        out.vectors[static_cast<std::size_t>(c) * n + r] =
            v->a[static_cast<std::size_t>(r) * n + order[c]];
      }
    }
  }
  return out;
}

}  // namespace

SymmetricEigen tridiag_eigs(std::span<const double> alpha, std::span<const double> beta, int k,
                            bool want_vectors) {
  const int n = static_cast<int>(alpha.size());
  if (n == 0) throw std::invalid_argument("tridiag_eigs: empty matrix");
  if (beta.size() + 1 != alpha.size()) {
    throw std::invalid_argument("tridiag_eigs: |beta| must equal |alpha| - 1");
  }
  std::vector<double> d(alpha.begin(), alpha.end());
  std::vector<double> e(n, 0.0);
  for (int i = 1; i < n; ++i) e[i] = beta[i - 1];

  if (!want_vectors) {
    ql_implicit(d, e, nullptr);
    return collect(d, nullptr, k);
  }
  Square v{n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;
  ql_implicit(d, e, &v);
  return collect(d, &v, k);
}

SymmetricEigen symmetric_eigs(std::span<const double> a, int n, int k, bool want_vectors) {
  if (n <= 0 || a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("symmetric_eigs: matrix size mismatch");
  }
  Square v{n, std::vector<double>(a.begin(), a.end())};
  std::vector<double> d(n, 0.0);
  std::vector<double> e(n, 0.0);
  householder_tridiagonalize(v, d, e);
  ql_implicit(d, e, want_vectors ? &v : nullptr);
  return collect(d, want_vectors ? &v : nullptr, k);
}

}  // namespace schupp::linalg
