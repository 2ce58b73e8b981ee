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


#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace schupp::linalg {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lowest eigenpairs of a small symmetric matrix. vectors is column-major
/// n x values.size(): column c is the eigenvector of values[c].
struct SymmetricEigen {
  int n = 0;
  std::vector<double> values;
  std::vector<double> vectors;

  [[nodiscard]] double vec(int row, int col) const {
    return vectors[static_cast<std::size_t>(col) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(row)];
  }
};

/// k lowest eigenpairs of the tridiagonal matrix with diagonal alpha and
/// off-diagonal beta (|beta| = |alpha| - 1), by implicit QL with shifts.
SymmetricEigen tridiag_eigs(std::span<const double> alpha, std::span<const double> beta, int k,
                            bool want_vectors = true);

/// k lowest eigenpairs of a dense symmetric matrix (row-major n x n):
/// Householder reduction to tridiagonal form, then the QL sweep above.
SymmetricEigen symmetric_eigs(std::span<const double> a, int n, int k, bool want_vectors = true);

}  // namespace schupp::linalg
