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


#include "schupp/observables.hpp"

#include <algorithm>
#include <vector>

#include "schupp/vecops.hpp"

namespace schupp {
namespace {

void check_state(std::span<const double> v, const SectorBasis& basis) {
  if (v.size() != basis.dim()) {
    throw std::invalid_argument("state vector length does not match sector dimension");
  }
}

void check_site(const SectorBasis& basis, int s) {
  if (s < 0 || s >= basis.n_sites()) throw std::out_of_range("site index out of range");
}

// Row-parallel expectation value of one bond operator, summed in block order.
double pair_expectation(std::span<const double> v, const SectorBasis& basis, int i, int j) {
  const Config mask = (Config{1} << i) | (Config{1} << j);
  const auto configs = basis.configs();
  const std::size_t n = configs.size();
  const auto nb = static_cast<std::ptrdiff_t>((n + vecops::kBlock - 1) / vecops::kBlock);
  std::vector<double> partial(static_cast<std::size_t>(nb), 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t blk = 0; blk < nb; ++blk) {
    const std::size_t lo = static_cast<std::size_t>(blk) * vecops::kBlock;
    const std::size_t hi = std::min(n, lo + vecops::kBlock);
    double s = 0.0;
    for (std::size_t r = lo; r < hi; ++r) {
      const Config c = configs[r];
      const Config m = c & mask;
      if (m == 0 || m == mask) {
        s += 0.25 * v[r] * v[r];
      } else {
        s += -0.25 * v[r] * v[r] + 0.5 * v[r] * v[basis.rank_unchecked(c ^ mask)];
      }
    }
    partial[static_cast<std::size_t>(blk)] = s;
  }
  double s = 0.0;
  for (double p : partial) s += p;
  return s;
}

}  // namespace

double correlation(std::span<const double> v, const SectorBasis& basis, int i, int j) {
  check_state(v, basis);
  check_site(basis, i);
  check_site(basis, j);
  if (i == j) return 0.75;
  return pair_expectation(v, basis, std::min(i, j), std::max(i, j));
}

double correlation(const GroundStateResult& gs, const SectorBasis& basis, int i, int j) {
  if (gs.degenerate) {
    throw DegenerateStateError("ground state is degenerate; correlations are not well defined");
  }
  if (!gs.vector) throw std::invalid_argument("solver result carries no ground-state vector");
  return correlation(*gs.vector, basis, i, j);
}

double bond_energy(std::span<const double> v, const SectorBasis& basis, const BondList& bonds) {
  check_state(v, basis);
  if (bonds.n_sites != basis.n_sites()) {
    throw std::invalid_argument("bond list and basis disagree on the number of sites");
  }
  double e = 0.0;
  for (const Bond& b : bonds.bonds) e += b.w * correlation(v, basis, b.i, b.j);
  return e;
}

CorrelationSeries profile(const LatticeSpec& spec, int anchor, const LanczosConfig& cfg) {
  validate(spec);
  if (anchor < 0 || anchor >= spec.n_sites()) throw std::out_of_range("anchor site out of range");
  LanczosConfig c = cfg;
  c.want_vector = true;
  c.n_eigs = std::max(c.n_eigs, 2);

  const int n_up = (spec.n_sites() + 1) / 2;
  auto basis = std::make_shared<const SectorBasis>(spec.n_sites(), n_up);
  const BondList bonds = build(spec);
  HamiltonianOperator op(bonds, basis);
  const GroundStateResult gs = lowest_eigs(op, c);

  CorrelationSeries out;
  out.spec = spec;
  out.anchor = anchor;
  out.ground_energy = gs.ground();
  out.n_up = n_up;
  out.values.resize(static_cast<std::size_t>(spec.n_sites()));
  for (int j = 0; j < spec.n_sites(); ++j) out.values[j] = correlation(gs, *basis, anchor, j);
  out.bond_energy = bond_energy(*gs.vector, *basis, bonds);
  return out;
}

}  // namespace schupp
