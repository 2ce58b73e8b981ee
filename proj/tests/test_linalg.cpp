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


#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "schupp/linalg.hpp"
#include "schupp/vecops.hpp"

using schupp::linalg::symmetric_eigs;
using schupp::linalg::tridiag_eigs;

namespace {

std::vector<std::vector<double>> random_symmetric(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) a[i][j] = a[j][i] = u(rng);
  return a;
}

std::vector<double> flat(const std::vector<std::vector<double>>& a) {
  std::vector<double> out;
  for (const auto& row : a) out.insert(out.end(), row.begin(), row.end());
  return out;
}

}  // namespace

TEST_CASE("tridiagonal eigenvalues match Jacobi rotations") {
  for (int n : {1, 2, 5, 17, 40}) {
    std::mt19937 rng(n);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<double> alpha(n), beta(n > 0 ? n - 1 : 0);
    for (double& v : alpha) v = u(rng);
    for (double& v : beta) v = u(rng);
    std::vector<std::vector<double>> dense(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) dense[i][i] = alpha[i];
    for (int i = 0; i + 1 < n; ++i) dense[i][i + 1] = dense[i + 1][i] = beta[i];
    const auto ref = oracle::jacobi_eigenvalues(dense);
    const auto got = tridiag_eigs(alpha, beta, n);
    REQUIRE(got.values.size() == static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) CHECK(got.values[i] == doctest::Approx(ref[i]).epsilon(1e-12));
  }
}

TEST_CASE("tridiagonal eigenvectors satisfy T v = lambda v") {
  const int n = 30;
  std::vector<double> alpha(n), beta(n - 1);
  for (int i = 0; i < n; ++i) alpha[i] = std::sin(1.0 + i);
  for (int i = 0; i + 1 < n; ++i) beta[i] = 0.3 + 0.1 * std::cos(i);
  const auto e = tridiag_eigs(alpha, beta, 4);
  REQUIRE(e.values.size() == 4);
  for (int c = 0; c < 4; ++c) {
    double norm2 = 0.0;
    for (int r = 0; r < n; ++r) {
      double tv = alpha[r] * e.vec(r, c);
      if (r > 0) tv += beta[r - 1] * e.vec(r - 1, c);
      if (r + 1 < n) tv += beta[r] * e.vec(r + 1, c);
      CHECK(std::abs(tv - e.values[c] * e.vec(r, c)) < 1e-12);
      norm2 += e.vec(r, c) * e.vec(r, c);
    }
    CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("dense symmetric eigenvalues match Jacobi rotations") {
  for (int n : {1, 3, 8, 25}) {
    const auto a = random_symmetric(n, 7u + static_cast<unsigned>(n));
    const auto ref = oracle::jacobi_eigenvalues(a);
    const auto got = symmetric_eigs(flat(a), n, n);
    for (int i = 0; i < n; ++i) CHECK(got.values[i] == doctest::Approx(ref[i]).epsilon(1e-11));
  }
}

TEST_CASE("dense eigenvectors are orthonormal") {
  const int n = 12;
  const auto a = random_symmetric(n, 99);
  const auto e = symmetric_eigs(flat(a), n, n);
  for (int c1 = 0; c1 < n; ++c1) {
    for (int c2 = 0; c2 < n; ++c2) {
      double d = 0.0;
      for (int r = 0; r < n; ++r) d += e.vec(r, c1) * e.vec(r, c2);
      CHECK(std::abs(d - (c1 == c2 ? 1.0 : 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("eigen routines reject malformed input") {
  std::vector<double> alpha{1.0, 2.0};
  std::vector<double> beta{0.5, 0.5};
  CHECK_THROWS(tridiag_eigs(alpha, beta, 1));
  CHECK_THROWS(symmetric_eigs(std::vector<double>(3, 0.0), 2, 1));
}

TEST_CASE("parallel vector kernels agree with the plain loops") {
  for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{8191}, std::size_t{50000}}) {
    std::vector<double> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = std::sin(0.1 * static_cast<double>(i));
      b[i] = std::cos(0.07 * static_cast<double>(i));
    }
    CHECK(schupp::vecops::dot(a, b) == doctest::Approx(schupp::vecops::dot_serial(a, b)).epsilon(1e-13));
    auto y1 = b, y2 = b;
    schupp::vecops::axpy(0.37, a, y1);
    schupp::vecops::axpy_serial(0.37, a, y2);
    CHECK(schupp::vecops::max_abs_diff(y1, y2) == 0.0);
    if (n > 0) {
      CHECK(schupp::vecops::norm(a) ==
            doctest::Approx(std::sqrt(schupp::vecops::dot_serial(a, a))).epsilon(1e-13));
    }
  }
}
