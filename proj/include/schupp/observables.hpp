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

#include <cstdlib>
#include <span>
#include <stdexcept>
#include <vector>

#include "schupp/basis.hpp"
#include "schupp/eigensolver.hpp"
#include "schupp/lattice.hpp"

namespace schupp {

/// Raised when a correlation is requested from a degenerate ground state,
/// where the value would depend on the arbitrary vector inside the multiplet.
class DegenerateStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// <v| S_i . S_j |v> for a normalized vector of the given sector.
double correlation(std::span<const double> v, const SectorBasis& basis, int i, int j);

/// Same, taking the state from a solver result. Refuses degenerate results
/// and results without a stored vector.
double correlation(const GroundStateResult& gs, const SectorBasis& basis, int i, int j);

/// sum_b w_b <S_i . S_j>, equal to <H> (the ground energy for a ground state).
double bond_energy(std::span<const double> v, const SectorBasis& basis, const BondList& bonds);

struct CorrelationSeries {
  LatticeSpec spec;
  int anchor = 0;
  std::vector<double> values;  // values[j] = <S_anchor . S_j>, every site j
  double ground_energy = 0.0;
  int n_up = 0;
  double bond_energy = 0.0;  // sum rule partner of ground_energy

  /// Column distance |x_j - x_anchor| of site j.
  [[nodiscard]] int distance(int j) const { return std::abs(j / spec.ny - anchor / spec.ny); }
  /// Row of site j.
  [[nodiscard]] int row(int j) const { return j % spec.ny; }
};

/// Ground state of spec in the MinAbsSz sector and its correlations with
/// the anchor. cfg.want_vector is forced on and n_eigs to at least 2.
CorrelationSeries profile(const LatticeSpec& spec, int anchor, const LanczosConfig& cfg);

}  // namespace schupp
