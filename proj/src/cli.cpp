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


#include "schupp/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "schupp/analysis.hpp"
#include "schupp/basis.hpp"
#include "schupp/eigensolver.hpp"
#include "schupp/lattice.hpp"
#include "schupp/linalg.hpp"
#include "schupp/observables.hpp"
#include "schupp/reference.hpp"
#include "schupp/schupp.hpp"

namespace schupp::cli {
namespace {

using nlohmann::json;

constexpr double kGiB = 1024.0 * 1024.0 * 1024.0;

class MemoryGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LatticeFlags {
  std::string family = "chain";
  int nx = 0;
  int ny = 0;
  std::string crossing = "none";
  double j = 1.0;
  double jd = -1.0;
};

struct SolverFlags {
  double tol = 1e-12;
  std::uint64_t seed = LanczosConfig{}.seed;
  std::string sector = "min";
  int n_eigs = 2;
  double max_mem_gib = 8.0;
  double krylov_mem_gib = 3.0;
  std::string cache_dir;
  std::string out;
};

void add_lattice_flags(CLI::App* app, LatticeFlags& f, bool need_nx = true) {
  app->add_option("--family", f.family, "chain, ladder, x-ladder, pyro-a, pyro-b or rect")
      ->check(CLI::IsMember({"chain", "ladder", "x-ladder", "pyro-a", "pyro-b", "rect"}));
  auto* nx = app->add_option("--nx", f.nx, "columns (chain length, ladder length)");
  if (need_nx) nx->required();
  app->add_option("--ny", f.ny, "rows (rectangles only)");
  app->add_option("--crossing", f.crossing, "rectangle crossing pattern")
      ->check(CLI::IsMember({"none", "checker-a", "checker-b", "all"}));
  app->add_option("--j", f.j, "leg and rung coupling");
  app->add_option("--jd", f.jd, "diagonal coupling");
}

void add_solver_flags(CLI::App* app, SolverFlags& f) {
  app->add_option("--tol", f.tol, "residual tolerance");
  app->add_option("--seed", f.seed, "start-vector seed");
  app->add_option("--sector", f.sector, "min: Sz closest to 0, scan: all sectors")
      ->check(CLI::IsMember({"min", "scan"}));
  app->add_option("--n-eigs", f.n_eigs, "eigenvalues per solve");
  app->add_option("--max-mem", f.max_mem_gib, "refuse systems needing more GiB than this");
  app->add_option("--krylov-mem", f.krylov_mem_gib, "GiB for the Krylov basis");
  app->add_option("--cache-dir", f.cache_dir, "energy cache directory (else $SCHUPP_CACHE)");
  app->add_option("--out", f.out, "output format")->check(CLI::IsMember({"csv", "json"}));
}

LatticeSpec spec_from(const LatticeFlags& f) {
  const Family family = parse_family(f.family);
  if (family != Family::Rectangle && f.crossing != "none") {
    throw SpecError("--crossing applies to rect only");
  }
  if (family == Family::Rectangle && f.ny == 0) throw SpecError("rect requires --ny");
  LatticeSpec s = make_spec(family, f.nx, f.ny, parse_crossing(f.crossing), f.j);
  if (f.ny != 0 && f.ny != s.ny) {
    throw SpecError("family " + f.family + " has ny = " + std::to_string(s.ny));
  }
  if (f.jd >= 0.0) s.jd = f.jd;
  validate(s);
  return s;
}

LanczosConfig config_from(const SolverFlags& f) {
  LanczosConfig c;
  c.tol = f.tol;
  c.seed = f.seed;
  c.n_eigs = f.n_eigs;
  const double krylov = std::min(f.krylov_mem_gib, f.max_mem_gib) * kGiB;
  c.memory_budget = krylov > 0.0 ? static_cast<std::size_t>(krylov) : 0;
  c.validate();
  return c;
}

SectorPolicy policy_from(const SolverFlags& f) {
  return f.sector == "scan" ? SectorPolicy::ScanAll : SectorPolicy::MinAbsSz;
}

void guard(const LatticeSpec& spec, const LanczosConfig& cfg, const SolverFlags& f) {
  const double need = static_cast<double>(minimum_memory(spec, cfg));
  if (need > f.max_mem_gib * kGiB) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s needs at least %.3g GiB, above --max-mem %.3g GiB",
                  canonical_key(spec).c_str(), need / kGiB, f.max_mem_gib);
    throw MemoryGuardError(buf);
  }
}

json spec_json(const LatticeSpec& s) {
  return json{{"key", canonical_key(s)},
              {"family", std::string(family_name(s.family))},
              {"nx", s.nx},
              {"ny", s.ny},
              {"crossing", std::string(crossing_name(s.crossing))},
              {"j", round15(s.j)},
              {"jd", round15(s.jd)}};
}

json numbers(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(round15(x));
  return a;
}

json delta_json(const DeltaRecord& r) {
  return json{{"parent", spec_json(r.parent)},
              {"m", r.cut.m},
              {"n", r.cut.n},
              {"d2", r.d2},
              {"left_doubled", spec_json(r.left_doubled)},
              {"right_doubled", spec_json(r.right_doubled)},
              {"e_lr", round15(r.e_lr)},
              {"e_ll", round15(r.e_ll)},
              {"e_rr", round15(r.e_rr)},
              {"delta", round15(r.delta)},
              {"residual_bound", round15(r.residual_bound)}};
}

json sweep_row_json(const SweepRow& row) {
  json j{{"family", std::string(family_name(row.parent.family))},
         {"nx", row.parent.nx},
         {"ny", row.parent.ny},
         {"variant", std::string(crossing_name(row.parent.crossing))},
         {"d2", row.d2},
         {"status", row.status}};
  if (row.record) {
    j["e_lr"] = round15(row.record->e_lr);
    j["e_ll"] = round15(row.record->e_ll);
    j["e_rr"] = round15(row.record->e_rr);
    j["delta"] = round15(row.record->delta);
    j["residual_bound"] = round15(row.record->residual_bound);
  }
  return j;
}

json fit_json(const FitResult& f, bool joint) {
  json groups = json::array();
  for (const auto& [g, a] : f.group_amplitudes) {
    groups.push_back({{"d2", g}, {"amplitude", round15(a)}});
  }
  return json{{"model", std::string(model_name(f.model))},
              {"joint", joint},
              {"determined", f.determined},
              {"exponent", round15(f.exponent)},
              {"amplitude", round15(f.amplitude)},
              {"std_err", round15(f.std_err)},
              {"r_squared", round15(f.r_squared)},
              {"n_points", f.n_points},
              {"excluded", f.excluded},
              {"group_amplitudes", groups}};
}

json decay_json(const DecayClass& d) {
  return json{{"class", std::string(decay_name(d.cls))},
              {"r2_power", round15(d.r2_power)},
              {"r2_exp", round15(d.r2_exp)},
              {"constant", d.constant},
              {"n_points", d.n_points}};
}

// ---- input parsing for fit -------------------------------------------------

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

// Table of named columns from CSV text or from the JSON the CLI writes.
struct Table {
  std::vector<std::map<std::string, std::string>> rows;
};

std::string cell_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_number(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  return "";
}

Table parse_table(const std::string& text) {
  Table t;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InputError("empty input");
  if (text[first] == '{' || text[first] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw InputError(std::string("malformed JSON input: ") + e.what());
    }
    const json* rows = nullptr;
    if (j.is_array()) {
      rows = &j;
    } else if (j.contains("rows")) {
      rows = &j["rows"];
    } else if (j.contains("values")) {
      rows = &j["values"];
    } else {
      throw InputError("JSON input has neither rows nor values");
    }
    for (const json& r : *rows) {
      std::map<std::string, std::string> m;
      for (const auto& [k, v] : r.items()) m[k] = cell_text(v);
      if (j.is_object() && j.contains("anchor")) m["anchor"] = cell_text(j["anchor"]);
      t.rows.push_back(std::move(m));
    }
    return t;
  }
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header.empty()) {
      header = split(line);
      continue;
    }
    const auto cells = split(line);
    if (cells.size() != header.size()) throw InputError("CSV row has the wrong number of columns");
    std::map<std::string, std::string> m;
    for (std::size_t k = 0; k < cells.size(); ++k) m[header[k]] = cells[k];
    t.rows.push_back(std::move(m));
  }
  return t;
}

double number(const std::map<std::string, std::string>& row, const std::string& col) {
  auto it = row.find(col);
  if (it == row.end()) throw InputError("input lacks column '" + col + "'");
  try {
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::logic_error&) {
    throw InputError("column '" + col + "' holds a non-number: '" + it->second + "'");
  }
}

// ---- commands --------------------------------------------------------------

int cmd_energy(const LatticeFlags& lf, const SolverFlags& sf, std::ostream& out) {
  const LatticeSpec spec = spec_from(lf);
  const LanczosConfig cfg = config_from(sf);
  guard(spec, cfg, sf);
  EnergyCache cache = EnergyCache::from_env(sf.cache_dir);
  const GroundStateResult r = cached_ground(spec, cfg, policy_from(sf), &cache);
  const ReferenceEntry* ref = find_reference(spec);
  if (sf.out == "csv") {
    out << "key,n_sites,n_up,e0,e1,residual0,degenerate,reference\n";
    out << canonical_key(spec) << ',' << r.n_sites << ',' << r.n_up << ','
        << format_number(r.energies[0]) << ','
        << (r.energies.size() > 1 ? format_number(r.energies[1]) : "") << ','
        << format_number(r.residuals[0]) << ',' << (r.degenerate ? 1 : 0) << ','
        << (ref != nullptr ? format_number(ref->energy) : "") << '\n';
    return kOk;
  }
  json j = spec_json(spec);
  j["n_sites"] = r.n_sites;
  j["n_up"] = r.n_up;
  j["sector"] = sf.sector;
  j["energies"] = numbers(r.energies);
  j["residuals"] = numbers(r.residuals);
  j["degenerate"] = r.degenerate;
  j["iterations"] = r.iterations;
  if (ref != nullptr) {
    j["reference"] = round15(ref->energy);
    j["reference_diff"] = round15(r.energies[0] - ref->energy);
  } else {
    j["reference"] = nullptr;
  }
  out << j.dump(2) << '\n';
  return kOk;
}

CutSpec cut_from(const LatticeSpec& spec, int d2, int m, bool have_d2, bool have_cut) {
  if (have_d2 == have_cut) throw SpecError("give exactly one of --d2 and --cut");
  if (have_d2) return CutSpec::from_d2(spec.nx, d2);
  return {m, spec.nx - m};
}

int cmd_delta(const LatticeFlags& lf, const SolverFlags& sf, const CutSpec& c, std::ostream& out) {
  const LatticeSpec spec = spec_from(lf);
  const LanczosConfig cfg = config_from(sf);
  const auto [ll, rr] = doubled_pair(spec, c);
  for (const LatticeSpec* s : {&spec, &ll, &rr}) guard(*s, cfg, sf);
  EnergyCache cache = EnergyCache::from_env(sf.cache_dir);
  const DeltaRecord r = delta(spec, c, cfg, {policy_from(sf), &cache});
  if (sf.out == "json") {
    out << delta_json(r).dump(2) << '\n';
  } else {
    out << csv_header() << '\n' << csv_row(r) << '\n';
  }
  return kOk;
}

int cmd_sweep(const LatticeFlags& lf, const SolverFlags& sf, std::vector<int> lengths,
              int nx_min, int nx_max, std::vector<int> d2s, int max_sites, std::ostream& out) {
  LatticeFlags base = lf;
  if (lengths.empty()) {
    if (nx_min < 1 || nx_max < nx_min) throw SpecError("give --lengths or a valid --nx-min/--nx-max");
    for (int l = nx_min; l <= nx_max; ++l) lengths.push_back(l);
  }
  base.nx = lengths.front();
  const LatticeSpec tmpl = spec_from(base);
  if (d2s.empty()) {
    int longest = 0;
    for (int l : lengths) longest = std::max(longest, l);
    for (int d = 1; d <= longest - 2; ++d) d2s.push_back(d);
  }
  const LanczosConfig cfg = config_from(sf);
  // Up-front memory check of every system the sweep will solve.
  for (int l : lengths) {
    for (int d2 : d2s) {
      if ((l + d2) % 2 != 0) continue;
      const int m = (l + d2) / 2, n = (l - d2) / 2;
      if (m < 1 || n < 1) continue;
      for (int cols : {l, 2 * m, 2 * n}) {
        if (cols * tmpl.ny > max_sites) continue;
        LatticeSpec s = tmpl;
        s.nx = cols;
        guard(s, cfg, sf);
      }
    }
  }
  EnergyCache cache = EnergyCache::from_env(sf.cache_dir);
  SweepOptions opts;
  opts.delta = {policy_from(sf), &cache};
  opts.max_sites = max_sites;
  const auto rows = sweep(tmpl, lengths, d2s, cfg, opts);
  if (sf.out == "json") {
    json a = json::array();
    for (const SweepRow& r : rows) a.push_back(sweep_row_json(r));
    out << json{{"rows", a}}.dump(2) << '\n';
  } else {
    out << csv_header() << '\n';
    for (const SweepRow& r : rows) out << csv_row(r) << '\n';
  }
  return kOk;
}

int cmd_profile(const LatticeFlags& lf, const SolverFlags& sf, int anchor, std::ostream& out) {
  const LatticeSpec spec = spec_from(lf);
  const LanczosConfig cfg = config_from(sf);
  guard(spec, cfg, sf);
  const CorrelationSeries s = profile(spec, anchor, cfg);
  const DecayClass d = classify_decay(s);
  if (sf.out == "json") {
    json values = json::array();
    for (int j = 0; j < spec.n_sites(); ++j) {
      values.push_back({{"site", j},
                        {"x", j / spec.ny},
                        {"y", s.row(j)},
                        {"distance", s.distance(j)},
                        {"value", round15(s.values[j])}});
    }
    json j = spec_json(spec);
    j["anchor"] = anchor;
    j["ground_energy"] = round15(s.ground_energy);
    j["bond_energy"] = round15(s.bond_energy);
    j["values"] = values;
    j["decay"] = decay_json(d);
    out << j.dump(2) << '\n';
  } else {
    out << "anchor,site,x,y,distance,value\n";
    for (int j = 0; j < spec.n_sites(); ++j) {
      out << anchor << ',' << j << ',' << j / spec.ny << ',' << s.row(j) << ',' << s.distance(j)
          << ',' << format_number(s.values[j]) << '\n';
    }
  }
  return kOk;
}

int cmd_fit(const std::string& input, const std::string& model, double noise_floor, int only_d2,
            std::ostream& out) {
  const Table t = parse_table(read_all(input));
  if (model == "decay") {
    int anchor = -1;
    int anchor_row = -1;
    for (const auto& r : t.rows) {
      anchor = static_cast<int>(number(r, "anchor"));
      if (static_cast<int>(number(r, "site")) == anchor) anchor_row = static_cast<int>(number(r, "y"));
    }
    if (anchor_row < 0) throw InputError("profile input does not contain the anchor site");
    std::vector<double> dist, val;
    for (const auto& r : t.rows) {
      if (static_cast<int>(number(r, "y")) != anchor_row) continue;
      if (static_cast<int>(number(r, "site")) == anchor) continue;
      dist.push_back(number(r, "distance"));
      val.push_back(number(r, "value"));
    }
    out << decay_json(classify_decay(dist, val)).dump(2) << '\n';
    return kOk;
  }
  std::vector<FitPoint> pts;
  for (const auto& r : t.rows) {
    if (auto st = r.find("status"); st != r.end() && st->second != "ok") continue;
    const int d2 = static_cast<int>(number(r, "d2"));
    if (only_d2 != 0 && d2 != only_d2) continue;
    pts.push_back({number(r, "nx"), number(r, "delta"), d2});
  }
  FitResult f;
  const bool joint = model.rfind("joint-", 0) == 0;
  if (model == "power") f = fit_power(pts, noise_floor);
  if (model == "exp") f = fit_exp(pts, noise_floor);
  if (model == "joint-power") f = fit_joint(pts, FitModel::PowerLaw, noise_floor);
  if (model == "joint-exp") f = fit_joint(pts, FitModel::Exponential, noise_floor);
  out << fit_json(f, joint).dump(2) << '\n';
  return kOk;
}

int cmd_check(const LatticeFlags& lf, const CutSpec& c, const std::string& fmt, std::ostream& out) {
  const LatticeSpec spec = spec_from(lf);
  const CutResult parts = cut(spec, c);
  const ApplicabilityReport rep = check_applicability(parts.iface);
  const bool ok = rep.status == Applicability::Applicable;
  if (fmt == "csv") {
    out << "status,symmetric,eigenvalues\n" << (ok ? "applicable" : "not_representable") << ','
        << (rep.symmetric ? 1 : 0) << ',';
    for (std::size_t k = 0; k < rep.eigenvalues.size(); ++k) {
      out << (k ? ";" : "") << format_number(rep.eigenvalues[k]);
    }
    out << '\n';
    return kOk;
  }
  json k = json::array();
  for (const auto& row : parts.iface.k) k.push_back(numbers(row));
  json j{{"status", ok ? "applicable" : "not_representable"},
         {"symmetric", rep.symmetric},
         {"eigenvalues", numbers(rep.eigenvalues)},
         {"k", k},
         {"m", c.m},
         {"n", c.n},
         {"d2", c.d2()},
         {"left", spec_json(parts.left)},
         {"right", spec_json(parts.right)}};
  if (ok) {
    j["left_doubled"] = spec_json(mirror_double(parts.left, parts.iface, Side::Left));
    j["right_doubled"] = spec_json(mirror_double(parts.right, parts.iface, Side::Right));
  }
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_verify(const SolverFlags& sf, int max_sites, const std::string& table, double tolerance,
               std::ostream& out) {
  const LanczosConfig cfg = config_from(sf);
  EnergyCache cache = EnergyCache::from_env(sf.cache_dir);
  std::vector<ReferenceEntry> entries;
  if (table == "chain" || table == "all") entries = chain_reference();
  if (table == "quasi2d" || table == "all") {
    const auto& q = quasi2d_reference();
    entries.insert(entries.end(), q.begin(), q.end());
  }
  std::vector<const ReferenceEntry*> todo;
  for (const ReferenceEntry& e : entries) {
    if (e.spec.n_sites() > max_sites) continue;
    guard(e.spec, cfg, sf);
    todo.push_back(&e);
  }
  int failed = 0;
  out << "entry,n_sites,reference,computed,diff,status\n";
  for (const ReferenceEntry* e : todo) {
    const GroundStateResult r = cached_ground(e->spec, cfg, policy_from(sf), &cache);
    const double diff = r.ground() - e->energy;
    const bool pass = std::abs(diff) <= tolerance;
    if (!pass) ++failed;
    out << e->label << ',' << e->spec.n_sites() << ',' << format_number(e->energy) << ','
        << format_number(r.ground()) << ',' << format_number(diff) << ','
        << (pass ? "pass" : "FAIL") << '\n';
  }
  out << "# checked " << todo.size() << ", failed " << failed << '\n';
  return failed == 0 ? kOk : kMismatch;
}

int cmd_counterexample(const SolverFlags& sf, std::ostream& out) {
  const LanczosConfig cfg = config_from(sf);
  EnergyCache cache = EnergyCache::from_env(sf.cache_dir);
  const CounterexampleReport r = counterexample_check(cfg, {policy_from(sf), &cache});
  json j{{"e5", round15(r.e5)},
         {"e6", round15(r.e6)},
         {"e7", round15(r.e7)},
         {"two_e6", round15(r.lhs)},
         {"e5_plus_e7", round15(r.rhs)},
         {"gap", round15(r.gap)},
         {"naive_inequality_violated", r.naive_violated},
         {"even_split", delta_json(r.legit)}};
  out << j.dump(2) << '\n';
  return kOk;
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

double round15(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_number(v).c_str(), nullptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heisenberg ground states and the Lieb-Schupp energy gap", "schupp"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  LatticeFlags lf;
  SolverFlags sf;
  int d2 = 0, m = 0, anchor = 0, nx_min = 0, nx_max = 0, only_d2 = 0;
  int sweep_sites = 20, verify_sites = 16;
  std::vector<int> lengths, d2s;
  std::string input, model = "power", table = "all";
  double noise_floor = kNoiseFloor, tolerance = 1e-10;

  auto* energy = app.add_subcommand("energy", "ground-state energy of one system");
  add_lattice_flags(energy, lf);
  add_solver_flags(energy, sf);

  auto* del = app.add_subcommand("delta", "energy gap of one cut");
  add_lattice_flags(del, lf);
  add_solver_flags(del, sf);
  auto* del_d2 = del->add_option("--d2", d2, "cut offset 2d = m - n");
  auto* del_cut = del->add_option("--cut", m, "columns left of the cut");

  auto* sw = app.add_subcommand("sweep", "gaps over lengths and offsets");
  add_lattice_flags(sw, lf, false);
  add_solver_flags(sw, sf);
  sw->add_option("--lengths", lengths, "comma-separated lengths")->delimiter(',');
  sw->add_option("--nx-min", nx_min, "shortest length");
  sw->add_option("--nx-max", nx_max, "longest length");
  sw->add_option("--d2", d2s, "comma-separated offsets 2d (default: all positive)")->delimiter(',');
  sw->add_option("--max-sites", sweep_sites, "largest system solved");

  auto* prof = app.add_subcommand("profile", "correlations <S_anchor . S_j>");
  add_lattice_flags(prof, lf);
  add_solver_flags(prof, sf);
  prof->add_option("--anchor", anchor, "anchor site");

  auto* fit = app.add_subcommand("fit", "fit sweep or profile output");
  fit->add_option("--input", input, "CSV or JSON file, - for stdin")->required();
  fit->add_option("--model", model, "power, exp, joint-power, joint-exp or decay")
      ->check(CLI::IsMember({"power", "exp", "joint-power", "joint-exp", "decay"}));
  fit->add_option("--noise-floor", noise_floor, "gaps at or below this are dropped");
  fit->add_option("--d2", only_d2, "fit only this offset (0: all)");

  std::string check_out = "json";
  auto* chk = app.add_subcommand("check", "applicability of a cut");
  add_lattice_flags(chk, lf);
  auto* chk_d2 = chk->add_option("--d2", d2, "cut offset 2d = m - n");
  auto* chk_cut = chk->add_option("--cut", m, "columns left of the cut");
  chk->add_option("--out", check_out, "output format")->check(CLI::IsMember({"csv", "json"}));

  auto* ver = app.add_subcommand("verify", "recompute the reference tables");
  add_solver_flags(ver, sf);
  ver->add_option("--max-sites", verify_sites, "skip entries above this many sites");
  ver->add_option("--table", table, "all, chain or quasi2d")
      ->check(CLI::IsMember({"all", "chain", "quasi2d"}));
  ver->add_option("--tolerance", tolerance, "allowed absolute deviation");

  auto* cex = app.add_subcommand("counterexample", "2E6 against E5 + E7 for open chains");
  add_solver_flags(cex, sf);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadFlags;
  }

  try {
    if (*energy) return cmd_energy(lf, sf, out);
    if (*del) {
      const LatticeSpec spec = spec_from(lf);
      return cmd_delta(lf, sf, cut_from(spec, d2, m, del_d2->count() > 0, del_cut->count() > 0), out);
    }
    if (*sw) return cmd_sweep(lf, sf, lengths, nx_min, nx_max, d2s, sweep_sites, out);
    if (*prof) return cmd_profile(lf, sf, anchor, out);
    if (*fit) return cmd_fit(input, model, noise_floor, only_d2, out);
    if (*chk) {
      const LatticeSpec spec = spec_from(lf);
      return cmd_check(lf, cut_from(spec, d2, m, chk_d2->count() > 0, chk_cut->count() > 0),
                       check_out, out);
    }
    if (*ver) return cmd_verify(sf, verify_sites, table, tolerance, out);
    if (*cex) return cmd_counterexample(sf, out);
  } catch (const MemoryGuardError& e) {
    err << "memory guard: " << e.what() << '\n';
    return kMemoryGuard;
  } catch (const MemoryBudgetError& e) {
    err << "memory guard: " << e.what() << '\n';
    return kMemoryGuard;
  } catch (const SolverError& e) {
    err << "solver failure: " << e.what() << '\n';
    return kSolverFailure;
  } catch (const linalg::ConvergenceError& e) {
    err << "solver failure: " << e.what() << '\n';
    return kSolverFailure;
  } catch (const NotApplicableError& e) {
    err << "error: " << e.what() << '\n';
    return kBadFlags;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadFlags;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadFlags;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kBadFlags;
  }
  return kBadFlags;
}

}  // namespace schupp::cli
