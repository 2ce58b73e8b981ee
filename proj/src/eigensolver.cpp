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


#include "schupp/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "schupp/linalg.hpp"
#include "schupp/vecops.hpp"

namespace schupp {
namespace {

using Vec = std::vector<double>;

constexpr std::size_t kRowBlock = 2048;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Modified Gram-Schmidt of w against basis[0..count); coefficients are added
// to coeffs when given. Used for the few locked vectors and local terms.
void project_out(Vec& w, const std::vector<Vec>& basis, std::size_t count, double* coeffs) {
  for (std::size_t i = 0; i < count; ++i) {
    const double h = vecops::dot(basis[i], w);
    vecops::axpy(-h, basis[i], w);
    if (coeffs != nullptr) coeffs[i] += h;
  }
}

// One classical Gram-Schmidt sweep against the whole Krylov basis: all
// coefficients from a single pass over the rows, then one update pass.
// Block partials are summed in block order.
void block_gram_schmidt(Vec& w, const std::vector<Vec>& basis, std::size_t count, double* coeffs) {
  const std::size_t dim = w.size();
  const auto nblocks = static_cast<std::ptrdiff_t>((dim + kRowBlock - 1) / kRowBlock);
  std::vector<double> partial(static_cast<std::size_t>(nblocks) * count, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t blk = 0; blk < nblocks; ++blk) {
    const std::size_t lo = static_cast<std::size_t>(blk) * kRowBlock;
    const std::size_t hi = std::min(dim, lo + kRowBlock);
    double* out = partial.data() + static_cast<std::size_t>(blk) * count;
    for (std::size_t i = 0; i < count; ++i) {
      const double* v = basis[i].data();
      double s = 0.0;
      for (std::size_t r = lo; r < hi; ++r) s += v[r] * w[r];
      out[i] = s;
    }
  }
  std::vector<double> h(count, 0.0);
  for (std::ptrdiff_t blk = 0; blk < nblocks; ++blk) {
    const double* in = partial.data() + static_cast<std::size_t>(blk) * count;
    for (std::size_t i = 0; i < count; ++i) h[i] += in[i];
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t blk = 0; blk < nblocks; ++blk) {
    const std::size_t lo = static_cast<std::size_t>(blk) * kRowBlock;
    const std::size_t hi = std::min(dim, lo + kRowBlock);
    for (std::size_t i = 0; i < count; ++i) {
      const double* v = basis[i].data();
      const double c = h[i];
      for (std::size_t r = lo; r < hi; ++r) w[r] -= c * v[r];
    }
  }
  for (std::size_t i = 0; i < count; ++i) coeffs[i] += h[i];
}

Vec random_start(std::size_t dim, std::uint64_t seed, const std::vector<Vec>& locked) {
  std::mt19937_64 gen(seed);
  Vec v(dim);
  // mt19937_64 output is fixed by the standard; the mapping to [-0.5, 0.5) is explicit.
  for (double& x : v) x = static_cast<double>(gen() >> 11) * 0x1.0p-53 - 0.5;
  project_out(v, locked, locked.size(), nullptr);
  project_out(v, locked, locked.size(), nullptr);
  const double nv = vecops::norm(v);
  if (!(nv > 0.0)) throw SolverError("start vector vanished after deflation", 0.0);
  vecops::scale(1.0 / nv, v);
  return v;
}

// basis[0..keep) replaced in place by V * S[:, 0..keep); rows are processed
// in independent blocks.
void rotate_basis(std::vector<Vec>& basis, std::size_t used, const linalg::SymmetricEigen& s,
                  std::size_t keep) {
  const std::size_t dim = basis.front().size();
  const auto nblocks = static_cast<std::ptrdiff_t>((dim + kRowBlock - 1) / kRowBlock);
#pragma omp parallel
  {
    std::vector<double> tmp(kRowBlock * keep);
#pragma omp for schedule(static)
    for (std::ptrdiff_t blk = 0; blk < nblocks; ++blk) {
      const std::size_t lo = static_cast<std::size_t>(blk) * kRowBlock;
      const std::size_t hi = std::min(dim, lo + kRowBlock);
      std::fill(tmp.begin(), tmp.end(), 0.0);
      for (std::size_t c = 0; c < keep; ++c) {
        double* out = tmp.data() + c * kRowBlock;
        for (std::size_t l = 0; l < used; ++l) {
          const double coef = s.vec(static_cast<int>(l), static_cast<int>(c));
          const double* src = basis[l].data();
          for (std::size_t r = lo; r < hi; ++r) out[r - lo] += coef * src[r];
        }
      }
      for (std::size_t c = 0; c < keep; ++c) {
        std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(c * kRowBlock),
                  tmp.begin() + static_cast<std::ptrdiff_t>(c * kRowBlock + (hi - lo)),
                  basis[c].begin() + static_cast<std::ptrdiff_t>(lo));
      }
    }
  }
}

// Random unit vector orthogonal to the locked vectors and the current basis;
// false when they already span the sector.
bool fresh_direction(Vec& w, const std::vector<Vec>& locked, const std::vector<Vec>& basis,
                     std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  for (double& x : w) x = static_cast<double>(gen() >> 11) * 0x1.0p-53 - 0.5;
  std::vector<double> scratch(basis.size(), 0.0);
  for (int pass = 0; pass < 2; ++pass) {
    project_out(w, locked, locked.size(), nullptr);
    block_gram_schmidt(w, basis, basis.size(), scratch.data());
  }
  const double nw = vecops::norm(w);
  if (!(nw > 1e-8 * std::sqrt(static_cast<double>(w.size())))) return false;
  vecops::scale(1.0 / nw, w);
  return true;
}

Vec ritz_vector(const std::vector<Vec>& basis, std::size_t used, const linalg::SymmetricEigen& s,
                int col) {
  Vec y(basis.front().size(), 0.0);
  for (std::size_t l = 0; l < used; ++l) {
    vecops::axpy(s.vec(static_cast<int>(l), col), basis[l], y);
  }
  vecops::scale(1.0 / vecops::norm(y), y);
  return y;
}

// ||P (H y - theta y)|| with P the projector off the locked vectors. Measured
// in the full space the residual of a later pair cannot drop below those of
// the pairs locked before it.
double true_residual(const HamiltonianOperator& op, const Vec& y, double theta,
                     const std::vector<Vec>& locked, long& matvecs) {
  Vec hy = op.apply(y);
  ++matvecs;
  vecops::axpy(-theta, y, hy);
  project_out(hy, locked, locked.size(), nullptr);
  return vecops::norm(hy);
}

struct Eigenpair {
  double value = 0.0;
  Vec vector;
  double residual = 0.0;
};

// Lowest eigenpair of H restricted to the orthogonal complement of `locked`.
class LowestSearch {
 public:
  LowestSearch(const HamiltonianOperator& op, const std::vector<Vec>& locked, int max_k,
               const LanczosConfig& cfg)
      : op_(op), locked_(locked), max_k_(max_k), cfg_(cfg),
        t_(static_cast<std::size_t>(max_k) * static_cast<std::size_t>(max_k), 0.0) {}

  Eigenpair run(std::uint64_t seed, long& matvecs, std::vector<double>* trace) {
    const std::size_t dim = op_.dim();
    std::vector<Vec> basis;
    basis.reserve(static_cast<std::size_t>(max_k_));
    basis.push_back(random_start(dim, seed, locked_));
    Vec w(dim);
    std::vector<double> h(static_cast<std::size_t>(max_k_));

    bool tridiagonal = true;  // until the first restart
    int restarts = 0;
    int next_check = 1;
    double best_residual = std::numeric_limits<double>::infinity();
    double norm_scale = 1.0;
    std::uint64_t injections = 0;

    for (int j = 0;; ++j) {
      op_.apply(basis[j], w);
      ++matvecs;
      std::fill(h.begin(), h.end(), 0.0);
      // Three-term part first, then full reorthogonalization.
      project_out(w, locked_, locked_.size(), nullptr);
      double before = vecops::norm(w);
      for (int p = 0; p <= std::min(j, 1); ++p) {
        const double c = vecops::dot(basis[j - p], w);
        vecops::axpy(-c, basis[j - p], w);
        h[j - p] += c;
      }
      // Repeat the sweep while it still removes most of the vector.
      block_gram_schmidt(w, basis, basis.size(), h.data());
      for (int pass = 0; pass < 2 && vecops::norm(w) < 0.7 * before; ++pass) {
        before = vecops::norm(w);
        project_out(w, locked_, locked_.size(), nullptr);
        block_gram_schmidt(w, basis, basis.size(), h.data());
      }
      for (int i = 0; i <= j; ++i) {
        t(i, j) = h[i];
        t(j, i) = h[i];
      }
      const double beta = vecops::norm(w);
      norm_scale = std::max(norm_scale, std::abs(h[j]) + beta);
      const int m = j + 1;
      const bool full = m == max_k_;
      // With the complement exhausted whatever is left of w is round-off.
      const bool exhausted = static_cast<std::size_t>(m) + locked_.size() >= dim;
      const bool invariant = exhausted || beta <= std::min(0.1 * cfg_.tol, 1e-10 * norm_scale);

      if (m >= next_check || full || invariant) {
        next_check = m + std::max(1, m / 8);
        const auto eig = ritz(m, tridiagonal, 1);
        const double theta = eig.values[0];
        if (trace != nullptr) trace->push_back(theta);
        const double estimate = std::abs(beta * eig.vec(m - 1, 0));
        if (estimate <= 0.5 * cfg_.tol || invariant) {
          Vec y = ritz_vector(basis, static_cast<std::size_t>(m), eig, 0);
          project_out(y, locked_, locked_.size(), nullptr);
          vecops::scale(1.0 / vecops::norm(y), y);
          const double res = true_residual(op_, y, theta, locked_, matvecs);
          if (res <= cfg_.tol) return {theta, std::move(y), res};
          best_residual = std::min(best_residual, res);
        }
        best_residual = std::min(best_residual, estimate);
      }

      // An invariant subspace (one vector per degenerate level) is continued
      // with a fresh direction instead of normalized round-off.
      double coupling = beta;
      if (invariant) {
        if (!fresh_direction(w, locked_, basis, seed + 0xD1B54A32D192ED03ULL * ++injections)) {
          throw SolverError("Krylov space became invariant before reaching the residual tolerance",
                            best_residual);
        }
        coupling = 0.0;
      } else {
        vecops::scale(1.0 / beta, w);
      }

      if (!full) {
        basis.push_back(w);
        continue;
      }

      if (restarts == cfg_.max_restarts || max_k_ < 2) {
        throw SolverError("Lanczos did not converge after " + std::to_string(restarts) +
                              " restarts (best residual " + sci(best_residual) + ")",
                          best_residual);
      }
      ++restarts;
      // Thick restart: keep the lowest half of the Ritz vectors plus the
      // current residual direction.
      const int keep = std::max(1, std::min(max_k_ / 2, m - 1));
      const auto eig = ritz(m, tridiagonal, keep);
      rotate_basis(basis, static_cast<std::size_t>(m), eig, static_cast<std::size_t>(keep));
      basis.resize(static_cast<std::size_t>(keep));
      basis.push_back(w);
      std::fill(t_.begin(), t_.end(), 0.0);
      for (int i = 0; i < keep; ++i) {
        t(i, i) = eig.values[i];
        t(i, keep) = t(keep, i) = coupling * eig.vec(m - 1, i);
      }
      tridiagonal = false;
      j = keep - 1;
      next_check = keep + 1;
    }
  }

 private:
  double& t(int i, int j) {
    return t_[static_cast<std::size_t>(i) * static_cast<std::size_t>(max_k_) +
              static_cast<std::size_t>(j)];
  }

  linalg::SymmetricEigen ritz(int m, bool tridiagonal, int k) {
    if (tridiagonal) {
      std::vector<double> alpha(static_cast<std::size_t>(m));
      std::vector<double> beta(static_cast<std::size_t>(m - 1));
      for (int i = 0; i < m; ++i) alpha[i] = t(i, i);
      for (int i = 0; i + 1 < m; ++i) beta[i] = t(i + 1, i);
      return linalg::tridiag_eigs(alpha, beta, k, true);
    }
    std::vector<double> dense(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) dense[static_cast<std::size_t>(i) * m + j] = t(i, j);
    }
    return linalg::symmetric_eigs(dense, m, k, true);
  }

  const HamiltonianOperator& op_;
  const std::vector<Vec>& locked_;
  int max_k_;
  const LanczosConfig& cfg_;
  std::vector<double> t_;  // projected matrix V^T H V, row-major max_k x max_k
};

}  // namespace

void LanczosConfig::validate() const {
  if (!(tol > 0.0)) throw std::invalid_argument("Lanczos tol must be positive");
  if (n_eigs < 1) throw std::invalid_argument("n_eigs must be at least 1");
  if (max_krylov <= 2 * n_eigs) throw std::invalid_argument("max_krylov must exceed 2 * n_eigs");
  if (max_restarts < 0) throw std::invalid_argument("max_restarts must be nonnegative");
  if (!(degeneracy_tol >= 0.0)) throw std::invalid_argument("degeneracy_tol must be >= 0");
}

GroundStateResult lowest_eigs(const HamiltonianOperator& op, const LanczosConfig& cfg) {
  cfg.validate();
  GroundStateResult result;
  result.n_sites = op.basis().n_sites();
  result.n_up = op.basis().n_up();
  const std::size_t dim = op.dim();
  if (dim == 0) throw std::invalid_argument("empty sector");

  if (dim == 1) {
    result.energies = {op.diagonal_element(0)};
    result.residuals = {0.0};
    if (cfg.want_vector) result.vector = std::make_shared<const std::vector<double>>(1, 1.0);
    return result;
  }

  const auto n_want = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(cfg.n_eigs), dim));
  // Basis vectors plus locked vectors and three work vectors.
  const std::size_t per_vector = dim * sizeof(double);
  const std::size_t affordable = cfg.memory_budget / per_vector;
  const std::size_t overhead = static_cast<std::size_t>(n_want) + 3;
  if (affordable < overhead + 4) {
    throw MemoryBudgetError("Krylov memory budget of " + std::to_string(cfg.memory_budget) +
                            " bytes is too small for sector dimension " + std::to_string(dim));
  }
  const int max_k = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(cfg.max_krylov), affordable - overhead));

  std::vector<Vec> locked;
  std::vector<double> values;
  std::vector<double> residuals;
  for (int target = 0; target < n_want; ++target) {
    const int k = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(max_k),
                                                         dim - static_cast<std::size_t>(target)));
    result.krylov_dim = std::max(result.krylov_dim, k);
    LowestSearch search(op, locked, k, cfg);
    const std::uint64_t seed = cfg.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(target);
    Eigenpair pair = search.run(seed, result.iterations, target == 0 ? &result.ritz_trace : nullptr);
    values.push_back(pair.value);
    residuals.push_back(pair.residual);
    locked.push_back(std::move(pair.vector));
  }

  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
  for (int idx : order) {
    result.energies.push_back(values[idx]);
    result.residuals.push_back(residuals[idx]);
  }
  result.degenerate = result.energies.size() >= 2 &&
                      std::abs(result.energies[1] - result.energies[0]) < cfg.degeneracy_tol;
  if (cfg.want_vector) {
    result.vector = std::make_shared<const std::vector<double>>(std::move(locked[order.front()]));
  }
  return result;
}

GroundStateResult solve_sector(const LatticeSpec& spec, int n_up, const LanczosConfig& cfg) {
  auto basis = std::make_shared<const SectorBasis>(spec.n_sites(), n_up);
  HamiltonianOperator op(build(spec), std::move(basis));
  return lowest_eigs(op, cfg);
}

GroundStateResult ground_energy(const LatticeSpec& spec, const LanczosConfig& cfg,
                                SectorPolicy policy) {
  validate(spec);
  const int n = spec.n_sites();
  const int first = (n + 1) / 2;
  GroundStateResult best = solve_sector(spec, first, cfg);
  if (policy == SectorPolicy::ScanAll) {
    for (int n_up = first + 1; n_up <= n; ++n_up) {
      GroundStateResult r = solve_sector(spec, n_up, cfg);
      // Members of one spin multiplet tie across sectors; keep the lowest |Sz|.
      if (r.ground() < best.ground() - 1e-10) best = std::move(r);
    }
  }
  return best;
}

}  // namespace schupp
