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

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "schupp/eigensolver.hpp"
#include "schupp/lattice.hpp"

namespace schupp {

/// The interface of a requested cut cannot be written as sum_A S_A . S_A'.
class NotApplicableError : public std::runtime_error {
 public:
  NotApplicableError(const std::string& what, ApplicabilityReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  [[nodiscard]] const ApplicabilityReport& report() const { return report_; }

 private:
  ApplicabilityReport report_;
};

struct CacheEntry {
  std::string key;      // canonical key plus sector policy
  double tol = 0.0;     // tolerance the entry was solved with
  int n_up = 0;
  std::vector<double> energies;
  std::vector<double> residuals;
  bool degenerate = false;
  long iterations = 0;
};

/// Ground-energy cache, in memory and optionally on disk.
///
/// On disk every key owns one file holding a single JSON line with an
/// FNV-1a checksum; files are written to a temporary name and renamed, so
/// concurrent writers never expose partial records. Unreadable or
/// checksum-failing files count as misses and are overwritten.
class EnergyCache {
 public:
  EnergyCache() = default;
  explicit EnergyCache(std::filesystem::path dir);

  /// Directory from `dir` when non-empty, else from SCHUPP_CACHE, else memory only.
  static EnergyCache from_env(const std::string& dir = {});

  /// Entry with at least n_eigs energies whose residuals are all <= tol.
  std::optional<CacheEntry> lookup(const std::string& key, double tol, int n_eigs);
  void store(const CacheEntry& entry);

  [[nodiscard]] const std::optional<std::filesystem::path>& dir() const { return dir_; }
  [[nodiscard]] long hits() const { return hits_; }
  [[nodiscard]] long misses() const { return misses_; }
  [[nodiscard]] long rejected() const { return rejected_; }  // corrupt or too loose on disk

  static std::string file_name(const std::string& key);
  static std::string serialize(const CacheEntry& entry);
  /// nullopt when the line is malformed or its checksum does not match.
  static std::optional<CacheEntry> parse(const std::string& line);

 private:
  std::optional<std::filesystem::path> dir_;
  std::map<std::string, CacheEntry> memory_;
  std::mutex mutex_;
  long hits_ = 0;
  long misses_ = 0;
  long rejected_ = 0;
};

/// Cache key of a ground-state request.
std::string energy_key(const LatticeSpec& spec, SectorPolicy policy);

/// ground_energy() through the cache (no state vector is kept).
GroundStateResult cached_ground(const LatticeSpec& spec, const LanczosConfig& cfg,
                                SectorPolicy policy, EnergyCache* cache);

/// Bytes a solve of spec needs at the least: the largest sector's vectors
/// for a minimal Krylov basis, the locked vectors and the work space.
std::size_t minimum_memory(const LatticeSpec& spec, const LanczosConfig& cfg);

struct DeltaRecord {
  LatticeSpec parent;         // E_LR
  CutSpec cut;
  LatticeSpec left_doubled;   // E_LL
  LatticeSpec right_doubled;  // E_RR
  int d2 = 0;
  double e_lr = 0.0;
  double e_ll = 0.0;
  double e_rr = 0.0;
  double delta = 0.0;           // 2 e_lr - e_ll - e_rr
  double residual_bound = 0.0;  // sum of the three ground-state residuals
};

struct DeltaOptions {
  SectorPolicy policy = SectorPolicy::MinAbsSz;
  EnergyCache* cache = nullptr;
};

/// Left/right doubled systems of a cut, after the applicability check.
/// Throws NotApplicableError for a non-representable interface.
std::pair<LatticeSpec, LatticeSpec> doubled_pair(const LatticeSpec& spec, const CutSpec& cut);

DeltaRecord delta(const LatticeSpec& spec, const CutSpec& cut, const LanczosConfig& cfg,
                  const DeltaOptions& opts = {});

struct SweepRow {
  LatticeSpec parent;
  int d2 = 0;
  std::optional<DeltaRecord> record;
  std::string status = "ok";  // or the failure message
};

struct SweepOptions {
  DeltaOptions delta;
  int max_sites = 24;  // largest system (parent or doubled) that is solved
};

/// Every (length, d2) of the template's family with a valid cut and all
/// three systems within max_sites, lengths outermost, in the given order.
/// Failures are reported per row and the sweep continues.
std::vector<SweepRow> sweep(const LatticeSpec& family_template, const std::vector<int>& lengths,
                            const std::vector<int>& d2s, const LanczosConfig& cfg,
                            const SweepOptions& opts = {});

struct CounterexampleReport {
  double e5 = 0.0;
  double e6 = 0.0;
  double e7 = 0.0;
  double lhs = 0.0;  // 2 E6
  double rhs = 0.0;  // E5 + E7
  double gap = 0.0;  // lhs - rhs
  bool naive_violated = false;  // the odd-split analogue 2E6 >= E5 + E7 fails
  DeltaRecord legit;            // chain L = 6, d2 = 2
};

/// Compares 2E_6 against E_5 + E_7 for open chains, next to the valid even split at L = 6.
CounterexampleReport counterexample_check(const LanczosConfig& cfg, const DeltaOptions& opts = {});

/// family,nx,ny,variant,d2,e_lr,e_ll,e_rr,delta,residual_bound,status
std::string csv_header();
std::string csv_row(const SweepRow& row);
std::string csv_row(const DeltaRecord& rec);

}  // namespace schupp
