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


#include "schupp/schupp.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "schupp/basis.hpp"

namespace schupp {
namespace {

using nlohmann::json;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
  return buf;
}

json payload(const CacheEntry& e) {
  return json{{"key", e.key},           {"tol", e.tol},
              {"n_up", e.n_up},         {"energies", e.energies},
              {"residuals", e.residuals}, {"degenerate", e.degenerate},
              {"iterations", e.iterations}};
}

bool usable(const CacheEntry& e, double tol, int n_eigs) {
  if (e.energies.size() < static_cast<std::size_t>(n_eigs)) return false;
  if (e.residuals.size() != e.energies.size()) return false;
  for (int k = 0; k < n_eigs; ++k) {
    if (!(e.residuals[k] <= tol)) return false;
  }
  return true;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ';';
  }
  return s;
}

const char* policy_name(SectorPolicy p) { return p == SectorPolicy::ScanAll ? "scan" : "min"; }

}  // namespace

EnergyCache::EnergyCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(*dir_);
}

EnergyCache EnergyCache::from_env(const std::string& dir) {
  if (!dir.empty()) return EnergyCache(dir);
  if (const char* env = std::getenv("SCHUPP_CACHE"); env != nullptr && *env != '\0') {
    return EnergyCache(env);
  }
  return EnergyCache();
}

std::string EnergyCache::file_name(const std::string& key) { return hex64(fnv1a(key)) + ".json"; }

std::string EnergyCache::serialize(const CacheEntry& entry) {
  json j = payload(entry);
  j["checksum"] = hex64(fnv1a(payload(entry).dump()));
  return j.dump();
}

std::optional<CacheEntry> EnergyCache::parse(const std::string& line) {
  try {
    json j = json::parse(line);
    const std::string sum = j.at("checksum").get<std::string>();
    CacheEntry e;
    e.key = j.at("key").get<std::string>();
    e.tol = j.at("tol").get<double>();
    e.n_up = j.at("n_up").get<int>();
    e.energies = j.at("energies").get<std::vector<double>>();
    e.residuals = j.at("residuals").get<std::vector<double>>();
    e.degenerate = j.at("degenerate").get<bool>();
    e.iterations = j.at("iterations").get<long>();
    if (hex64(fnv1a(payload(e).dump())) != sum) return std::nullopt;
    return e;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

std::optional<CacheEntry> EnergyCache::lookup(const std::string& key, double tol, int n_eigs) {
  std::lock_guard lock(mutex_);
  if (auto it = memory_.find(key); it != memory_.end() && usable(it->second, tol, n_eigs)) {
    ++hits_;
    return it->second;
  }
  if (dir_) {
    std::ifstream in(*dir_ / file_name(key));
    std::string line;
    if (in && std::getline(in, line)) {
      auto e = parse(line);
      if (e && e->key == key && usable(*e, tol, n_eigs)) {
        memory_[key] = *e;
        ++hits_;
        return e;
      }
      ++rejected_;
    }
  }
  ++misses_;
  return std::nullopt;
}

void EnergyCache::store(const CacheEntry& entry) {
  std::lock_guard lock(mutex_);
  memory_[entry.key] = entry;
  if (!dir_) return;
  const auto final_path = *dir_ / file_name(entry.key);
  auto tmp = final_path;
  tmp += ".tmp." + std::to_string(static_cast<unsigned long long>(fnv1a(entry.key) ^
                                                                  reinterpret_cast<std::uintptr_t>(this)));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << serialize(entry) << '\n';
    if (!out.flush()) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, final_path);
}

std::string energy_key(const LatticeSpec& spec, SectorPolicy policy) {
  return canonical_key(spec) + "|" + policy_name(policy);
}

GroundStateResult cached_ground(const LatticeSpec& spec, const LanczosConfig& cfg,
                                SectorPolicy policy, EnergyCache* cache) {
  if (cache == nullptr || cfg.want_vector) return ground_energy(spec, cfg, policy);
  const std::string key = energy_key(spec, policy);
  const int n_eigs = static_cast<int>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(cfg.n_eigs), binomial(spec.n_sites(), (spec.n_sites() + 1) / 2)));
  if (auto hit = cache->lookup(key, cfg.tol, n_eigs)) {
    GroundStateResult r;
    r.energies = hit->energies;
    r.residuals = hit->residuals;
    r.iterations = hit->iterations;
    r.n_sites = spec.n_sites();
    r.n_up = hit->n_up;
    r.degenerate = hit->degenerate;
    return r;
  }
  GroundStateResult r = ground_energy(spec, cfg, policy);
  cache->store({key, cfg.tol, r.n_up, r.energies, r.residuals, r.degenerate, r.iterations});
  return r;
}

std::size_t minimum_memory(const LatticeSpec& spec, const LanczosConfig& cfg) {
  validate(spec);
  const std::uint64_t dim = binomial(spec.n_sites(), (spec.n_sites() + 1) / 2);
  // Minimal Krylov basis of 4 vectors, the locked vectors, three work vectors.
  const std::uint64_t vectors = 4 + static_cast<std::uint64_t>(cfg.n_eigs) + 3;
  return static_cast<std::size_t>(dim * vectors * sizeof(double));
}

std::pair<LatticeSpec, LatticeSpec> doubled_pair(const LatticeSpec& spec, const CutSpec& c) {
  const CutResult parts = cut(spec, c);
  ApplicabilityReport report = check_applicability(parts.iface);
  if (report.status != Applicability::Applicable) {
    std::string why = report.symmetric ? "interface matrix is not positive semidefinite (min eigenvalue " +
                                             num(report.eigenvalues.front()) + ")"
                                       : "interface matrix is not symmetric";
    throw NotApplicableError("cut not applicable: " + why, std::move(report));
  }
  return {mirror_double(parts.left, parts.iface, Side::Left),
          mirror_double(parts.right, parts.iface, Side::Right)};
}

DeltaRecord delta(const LatticeSpec& spec, const CutSpec& c, const LanczosConfig& cfg,
                  const DeltaOptions& opts) {
  auto [ll, rr] = doubled_pair(spec, c);
  DeltaRecord rec;
  rec.parent = spec;
  rec.cut = c;
  rec.left_doubled = ll;
  rec.right_doubled = rr;
  rec.d2 = c.d2();
  LanczosConfig solve_cfg = cfg;
  solve_cfg.want_vector = false;
  const GroundStateResult lr = cached_ground(spec, solve_cfg, opts.policy, opts.cache);
  const GroundStateResult el = cached_ground(ll, solve_cfg, opts.policy, opts.cache);
  const GroundStateResult er = cached_ground(rr, solve_cfg, opts.policy, opts.cache);
  rec.e_lr = lr.ground();
  rec.e_ll = el.ground();
  rec.e_rr = er.ground();
  rec.delta = 2.0 * rec.e_lr - rec.e_ll - rec.e_rr;
  rec.residual_bound = lr.residuals.front() + el.residuals.front() + er.residuals.front();
  return rec;
}

std::vector<SweepRow> sweep(const LatticeSpec& family_template, const std::vector<int>& lengths,
                            const std::vector<int>& d2s, const LanczosConfig& cfg,
                            const SweepOptions& opts) {
  std::vector<SweepRow> rows;
  const int ny = family_template.ny;
  for (int length : lengths) {
    for (int d2 : d2s) {
      if ((length + d2) % 2 != 0) continue;
      const int m = (length + d2) / 2;
      const int n = (length - d2) / 2;
      if (m < 1 || n < 1) continue;
      if (length * ny > opts.max_sites || 2 * m * ny > opts.max_sites ||
          2 * n * ny > opts.max_sites) {
        continue;
      }
      SweepRow row;
      row.parent = family_template;
      row.parent.nx = length;
      row.d2 = d2;
      try {
        row.record = delta(row.parent, {m, n}, cfg, opts.delta);
      } catch (const SolverError& e) {
        row.status = std::string("solver failure: ") + e.what();
      } catch (const MemoryBudgetError& e) {
        row.status = std::string("memory: ") + e.what();
      } catch (const std::invalid_argument& e) {
        row.status = e.what();
      } catch (const NotApplicableError& e) {
        row.status = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

CounterexampleReport counterexample_check(const LanczosConfig& cfg, const DeltaOptions& opts) {
  LanczosConfig c = cfg;
  c.want_vector = false;
  CounterexampleReport r;
  r.e5 = cached_ground(LatticeSpec::chain(5), c, opts.policy, opts.cache).ground();
  r.e6 = cached_ground(LatticeSpec::chain(6), c, opts.policy, opts.cache).ground();
  r.e7 = cached_ground(LatticeSpec::chain(7), c, opts.policy, opts.cache).ground();
  r.lhs = 2.0 * r.e6;
  r.rhs = r.e5 + r.e7;
  r.gap = r.lhs - r.rhs;
  r.naive_violated = r.lhs < r.rhs;
  r.legit = delta(LatticeSpec::chain(6), CutSpec::from_d2(6, 2), c, opts);
  return r;
}

std::string csv_header() {
  return "family,nx,ny,variant,d2,e_lr,e_ll,e_rr,delta,residual_bound,status";
}

std::string csv_row(const SweepRow& row) {
  std::ostringstream out;
  out << family_name(row.parent.family) << ',' << row.parent.nx << ',' << row.parent.ny << ','
      << crossing_name(row.parent.crossing) << ',' << row.d2 << ',';
  if (row.record) {
    const DeltaRecord& r = *row.record;
    out << num(r.e_lr) << ',' << num(r.e_ll) << ',' << num(r.e_rr) << ',' << num(r.delta) << ','
        << num(r.residual_bound);
  } else {
    out << ",,,,";
  }
  out << ',' << sanitize(row.status);
  return out.str();
}

std::string csv_row(const DeltaRecord& rec) {
  return csv_row(SweepRow{rec.parent, rec.d2, rec, "ok"});
}

}  // namespace schupp
