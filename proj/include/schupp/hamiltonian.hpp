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

#include <memory>
#include <span>
#include <vector>

#include "schupp/basis.hpp"
#include "schupp/lattice.hpp"

namespace schupp {

namespace kernels {

/// Bond prepared for the configuration loop.
struct PackedBond {
  Config mask = 0;       // bits i and j
  double quarter = 0.0;  // w / 4, diagonal magnitude
  double half = 0.0;     // w / 2, spin-exchange amplitude
};

std::vector<PackedBond> pack(const BondList& bonds);

/// y = H x, gathered row by row; OpenMP splits the rows. Each output row is
/// summed in bond order, so the result does not depend on the thread count.
void apply_parallel(std::span<const PackedBond> bonds, const SectorBasis& basis,
                    std::span<const double> x, std::span<double> y);

/// Reference y = H x in scatter form (column by column), single-threaded.
void apply_serial(std::span<const PackedBond> bonds, const SectorBasis& basis,
                  std::span<const double> x, std::span<double> y);

}  // namespace kernels

/// H = sum_b w_b S_i . S_j restricted to one Sz sector, never stored.
class HamiltonianOperator {
 public:
  HamiltonianOperator(BondList bonds, std::shared_ptr<const SectorBasis> basis);

  [[nodiscard]] std::size_t dim() const { return basis_->dim(); }
  [[nodiscard]] const SectorBasis& basis() const { return *basis_; }
  [[nodiscard]] std::shared_ptr<const SectorBasis> basis_ptr() const { return basis_; }
  [[nodiscard]] const BondList& bonds() const { return bonds_; }

  void apply(std::span<const double> x, std::span<double> y) const;
  [[nodiscard]] std::vector<double> apply(std::span<const double> x) const;

  /// d[r] = sum_b (+w/4 if spins i, j of unrank(r) are aligned, else -w/4).
  [[nodiscard]] std::vector<double> diagonal() const;
  [[nodiscard]] double diagonal_element(std::size_t r) const;

 private:
  BondList bonds_;
  std::shared_ptr<const SectorBasis> basis_;
  std::vector<kernels::PackedBond> packed_;
};

}  // namespace schupp
