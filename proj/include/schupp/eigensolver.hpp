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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "schupp/hamiltonian.hpp"
#include "schupp/lattice.hpp"

namespace schupp {

struct LanczosConfig {
  double tol = 1e-12;       // on ||H v - theta v||
  int max_krylov = 300;     // basis vectors per restart cycle
  int max_restarts = 50;
  int n_eigs = 2;
  std::uint64_t seed = 0x5eed2014ULL;
  double degeneracy_tol = 1e-8;
  bool want_vector = false;
  /// Bytes the Krylov basis may occupy. Above it the basis is shortened and
  /// thick restarts do the rest.
  std::size_t memory_budget = std::size_t{3} << 30;

  void validate() const;
};

struct GroundStateResult {
  std::vector<double> energies;   // ascending
  std::vector<double> residuals;  // ||P_k (H v_k - E_k v_k)||, P_k projecting off v_0..v_k-1
  long iterations = 0;            // matrix applications
  int n_sites = 0;
  int n_up = 0;
  bool degenerate = false;
  std::shared_ptr<const std::vector<double>> vector;  // ground state when requested
  std::vector<double> ritz_trace;  // lowest Ritz value at each convergence check
  int krylov_dim = 0;              // basis length actually used

  [[nodiscard]] double ground() const { return energies.front(); }
};

class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}
  [[nodiscard]] double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

class MemoryBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// n_eigs lowest eigenpairs by thick-restart Lanczos with full
/// reorthogonalization. Eigenpairs are found one after another: each
/// converged vector is locked and the next search starts from a fresh
/// random vector orthogonal to everything locked, so degenerate levels
/// show up as repeated energies.
GroundStateResult lowest_eigs(const HamiltonianOperator& op, const LanczosConfig& cfg);

enum class SectorPolicy { MinAbsSz, ScanAll };

/// Sector n_up = ceil(N/2) (MinAbsSz) or the minimum over all
/// n_up in [ceil(N/2), N] (ScanAll; Sz -> -Sz covers the rest).
GroundStateResult ground_energy(const LatticeSpec& spec, const LanczosConfig& cfg,
                                SectorPolicy policy = SectorPolicy::MinAbsSz);

GroundStateResult solve_sector(const LatticeSpec& spec, int n_up, const LanczosConfig& cfg);

}  // namespace schupp
