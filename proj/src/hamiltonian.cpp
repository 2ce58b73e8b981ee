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


#include "schupp/hamiltonian.hpp"

#include <algorithm>
#include <stdexcept>

namespace schupp {
namespace kernels {
namespace {

void check_dims(const SectorBasis& basis, std::span<const double> x, std::span<double> y) {
  if (x.size() != basis.dim() || y.size() != basis.dim()) {
    throw std::invalid_argument("Hamiltonian apply: vector length does not match sector dimension");
  }
}

bool aligned(Config c, Config mask) {
  const Config m = c & mask;
  return m == 0 || m == mask;
}

}  // namespace

std::vector<PackedBond> pack(const BondList& bonds) {
  std::vector<PackedBond> out;
  out.reserve(bonds.bonds.size());
  for (const Bond& b : bonds.bonds) {
    out.push_back({(Config{1} << b.i) | (Config{1} << b.j), 0.25 * b.w, 0.5 * b.w});
  }
  return out;
}

void apply_parallel(std::span<const PackedBond> bonds, const SectorBasis& basis,
                    std::span<const double> x, std::span<double> y) {
  check_dims(basis, x, y);
  const auto configs = basis.configs();
  const auto n = static_cast<std::ptrdiff_t>(configs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < n; ++r) {
    const Config c = configs[r];
    double diag = 0.0;
    double off = 0.0;
    for (const PackedBond& b : bonds) {
      if (aligned(c, b.mask)) {
        diag += b.quarter;
      } else {
        diag -= b.quarter;
        off += b.half * x[basis.rank_unchecked(c ^ b.mask)];
      }
    }
    y[r] = diag * x[r] + off;
  }
}

void apply_serial(std::span<const PackedBond> bonds, const SectorBasis& basis,
                  std::span<const double> x, std::span<double> y) {
  check_dims(basis, x, y);
  std::fill(y.begin(), y.end(), 0.0);
  const auto configs = basis.configs();
  for (std::size_t col = 0; col < configs.size(); ++col) {
    const Config c = configs[col];
    for (const PackedBond& b : bonds) {
      if (aligned(c, b.mask)) {
        y[col] += b.quarter * x[col];
      } else {
        y[col] -= b.quarter * x[col];
        y[basis.rank_unchecked(c ^ b.mask)] += b.half * x[col];
      }
    }
  }
}

}  // namespace kernels

HamiltonianOperator::HamiltonianOperator(BondList bonds, std::shared_ptr<const SectorBasis> basis)
    : bonds_(std::move(bonds)), basis_(std::move(basis)) {
  if (!basis_) throw std::invalid_argument("Hamiltonian requires a basis");
  if (bonds_.n_sites != basis_->n_sites()) {
    throw std::invalid_argument("bond list and basis disagree on the number of sites");
  }
  for (const Bond& b : bonds_.bonds) {
    if (b.i < 0 || b.j <= b.i || b.j >= bonds_.n_sites) {
      throw std::invalid_argument("bond indices must satisfy 0 <= i < j < n_sites");
    }
  }
  packed_ = kernels::pack(bonds_);
}

void HamiltonianOperator::apply(std::span<const double> x, std::span<double> y) const {
  kernels::apply_parallel(packed_, *basis_, x, y);
}

std::vector<double> HamiltonianOperator::apply(std::span<const double> x) const {
  std::vector<double> y(dim());
  apply(x, y);
  return y;
}

double HamiltonianOperator::diagonal_element(std::size_t r) const {
  const Config c = basis_->unrank(r);
  double d = 0.0;
  for (const kernels::PackedBond& b : packed_) {
    d += kernels::aligned(c, b.mask) ? b.quarter : -b.quarter;
  }
  return d;
}

std::vector<double> HamiltonianOperator::diagonal() const {
  std::vector<double> d(dim());
  const auto n = static_cast<std::ptrdiff_t>(d.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < n; ++r) d[r] = diagonal_element(static_cast<std::size_t>(r));
  return d;
}

}  // namespace schupp
