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
#include <memory>

#include "doctest.h"
#include "oracle.hpp"
#include "schupp/eigensolver.hpp"
#include "schupp/vecops.hpp"

using namespace schupp;

namespace {

double oracle_ground(const LatticeSpec& s, int up) {
  return oracle::spectrum(oracle::dense(oracle::edges(s), oracle::sector(s.n_sites(), up)))(0);
}

}  // namespace

TEST_CASE("lowest two eigenvalues match dense diagonalization") {
  for (const LatticeSpec& s : oracle::family_zoo(12)) {
    const int up = (s.n_sites() + 1) / 2;
    CAPTURE(canonical_key(s));
    const auto dense = oracle::spectrum(oracle::dense(oracle::edges(s), oracle::sector(s.n_sites(), up)));
    const GroundStateResult r = solve_sector(s, up, LanczosConfig{});
    REQUIRE(r.energies.size() == std::min<std::size_t>(2, static_cast<std::size_t>(dense.size())));
    for (std::size_t k = 0; k < r.energies.size(); ++k) {
      CHECK(std::abs(r.energies[k] - dense(static_cast<Eigen::Index>(k))) < 1e-10);
      CHECK(r.residuals[k] <= 1e-12);
    }
  }
}

TEST_CASE("degenerate levels are found twice") {
  // The four-site pyrochlore ladder is a tetrahedron: the singlet ground level is doubly degenerate.
  const GroundStateResult r = ground_energy(LatticeSpec::pyro_a(2), LanczosConfig{});
  CHECK(r.ground() == doctest::Approx(-1.5).epsilon(1e-12));
  CHECK(r.energies[1] == doctest::Approx(-1.5).epsilon(1e-12));
  CHECK(r.degenerate);
  const GroundStateResult c = ground_energy(LatticeSpec::chain(8), LanczosConfig{});
  CHECK_FALSE(c.degenerate);
}

TEST_CASE("returned vector is a normalized eigenvector") {
  LanczosConfig cfg;
  cfg.want_vector = true;
  const LatticeSpec s = LatticeSpec::square_ladder(6);
  const auto basis = std::make_shared<SectorBasis>(12, 6);
  const HamiltonianOperator h(build(s), basis);
  const GroundStateResult r = lowest_eigs(h, cfg);
  REQUIRE(r.vector);
  const auto& v = *r.vector;
  CHECK(vecops::norm(v) == doctest::Approx(1.0).epsilon(1e-13));
  auto hv = h.apply(v);
  vecops::axpy(-r.ground(), v, hv);
  CHECK(vecops::norm(hv) < 1e-11);
}

TEST_CASE("scanning all sectors finds the singlet or doublet ground state") {
  for (const LatticeSpec& s : {LatticeSpec::chain(7), LatticeSpec::crossed_ladder(4, 0.5),
                               LatticeSpec::rectangle(3, 3, Crossing::CheckerB)}) {
    const double scan = ground_energy(s, LanczosConfig{}, SectorPolicy::ScanAll).ground();
    const double mid = ground_energy(s, LanczosConfig{}, SectorPolicy::MinAbsSz).ground();
    CHECK(scan == doctest::Approx(mid).epsilon(1e-12));
    double best = 1e300;
    for (int up = (s.n_sites() + 1) / 2; up <= s.n_sites(); ++up) best = std::min(best, oracle_ground(s, up));
    CHECK(std::abs(scan - best) < 1e-10);
  }
}

TEST_CASE("ferromagnetic coupling can pick a polarized sector") {
  // Saturated sector energy is the bond sum / 4; here it must not be below the singlet.
  const LatticeSpec s = LatticeSpec::chain(6);
  const GroundStateResult top = solve_sector(s, 6, LanczosConfig{});
  CHECK(top.ground() == doctest::Approx(5.0 / 4.0));
  CHECK(top.energies.size() == 1);
}

TEST_CASE("runs are reproducible for a fixed seed") {
  const LatticeSpec s = LatticeSpec::rectangle(4, 4, Crossing::CheckerA);
  const GroundStateResult a = ground_energy(s, LanczosConfig{});
  const GroundStateResult b = ground_energy(s, LanczosConfig{});
  CHECK(a.energies == b.energies);
  CHECK(a.iterations == b.iterations);
  LanczosConfig other;
  other.seed = 12345;
  CHECK(std::abs(ground_energy(s, other).ground() - a.ground()) < 1e-11);
}

TEST_CASE("a tight memory budget shortens the basis but keeps the answer") {
  const LatticeSpec s = LatticeSpec::chain(14);
  LanczosConfig small;
  const std::size_t dim = 3432;
  small.memory_budget = dim * sizeof(double) * 20;
  const GroundStateResult r = ground_energy(s, small);
  CHECK(r.krylov_dim <= 20);
  CHECK(std::abs(r.ground() - ground_energy(s, LanczosConfig{}).ground()) < 1e-10);

  LanczosConfig tiny;
  tiny.memory_budget = dim * sizeof(double) * 3;
  CHECK_THROWS_AS(ground_energy(s, tiny), MemoryBudgetError);
}

TEST_CASE("exhausted restarts raise a solver error with the best residual") {
  LanczosConfig cfg;
  cfg.max_krylov = 6;
  cfg.max_restarts = 0;
  cfg.n_eigs = 1;
  cfg.tol = 1e-14;
  try {
    (void)ground_energy(LatticeSpec::chain(16), cfg);
    FAIL("expected a SolverError");
  } catch (const SolverError& e) {
    CHECK(e.best_residual() > 0.0);
  }
}

TEST_CASE("invalid solver settings are rejected") {
  LanczosConfig cfg;
  cfg.tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = LanczosConfig{};
  cfg.n_eigs = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = LanczosConfig{};
  cfg.max_krylov = 4;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("Ritz values decrease monotonically") {
  const GroundStateResult r = ground_energy(LatticeSpec::chain(12), LanczosConfig{});
  REQUIRE_FALSE(r.ritz_trace.empty());
  for (std::size_t k = 1; k < r.ritz_trace.size(); ++k) CHECK(r.ritz_trace[k] <= r.ritz_trace[k - 1] + 1e-12);
}

TEST_CASE("every sector of the small lattices converges to the dense levels") {
  for (const LatticeSpec& s : oracle::family_zoo(10)) {
    const int n = s.n_sites();
    for (int up = (n + 1) / 2; up <= n; ++up) {
      CAPTURE(canonical_key(s));
      CAPTURE(up);
      const auto dense = oracle::spectrum(oracle::dense(oracle::edges(s), oracle::sector(n, up)));
      const GroundStateResult r = solve_sector(s, up, LanczosConfig{});
      for (std::size_t k = 0; k < r.energies.size(); ++k) {
        CHECK(std::abs(r.energies[k] - dense(static_cast<Eigen::Index>(k))) < 1e-10);
      }
    }
  }
}
