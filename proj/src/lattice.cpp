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


#include "schupp/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <utility>

#include "schupp/linalg.hpp"

namespace schupp {
namespace {

constexpr double kWeightTol = 1e-15;
constexpr double kPsdTol = -1e-12;

bool close(double a, double b) { return std::abs(a - b) <= kWeightTol * std::max(1.0, std::abs(a)); }

bool is_pyro(Family f) { return f == Family::PyroLadderA || f == Family::PyroLadderB; }

// Weight of the two diagonals of plaquette (x, y), 0 when the plaquette is plain.
double diagonal_weight(const LatticeSpec& s, int x, int y) {
  switch (s.family) {
    case Family::Chain:
    case Family::SquareLadder:
      return 0.0;
    case Family::CrossedLadder:
      return s.jd;
    case Family::PyroLadderA:
      return x % 2 == 0 ? s.j : 0.0;
    case Family::PyroLadderB:
      return x % 2 == 1 ? s.j : 0.0;
    case Family::Rectangle:
      switch (s.crossing) {
        case Crossing::None:
          return 0.0;
        case Crossing::CheckerA:
          return (x + y) % 2 == 0 ? s.jd : 0.0;
        case Crossing::CheckerB:
          return (x + y) % 2 == 1 ? s.jd : 0.0;
        case Crossing::All:
          return s.jd;
      }
  }
  return 0.0;
}

BondList normalized(int n_sites, std::map<std::pair<int, int>, double> acc) {
  BondList out;
  out.n_sites = n_sites;
  out.bonds.reserve(acc.size());
  for (const auto& [ij, w] : acc) {
    if (w != 0.0) out.bonds.push_back({ij.first, ij.second, w});
  }
  return out;
}

void add(std::map<std::pair<int, int>, double>& acc, int a, int b, double w) {
  if (a == b) throw SpecError("self-coupling in bond list");
  if (a > b) std::swap(a, b);
  acc[{a, b}] += w;
}

bool same_edges(const BondList& a, const BondList& b) {
  if (a.n_sites != b.n_sites || a.bonds.size() != b.bonds.size()) return false;
  for (std::size_t k = 0; k < a.bonds.size(); ++k) {
    const Bond& x = a.bonds[k];
    const Bond& y = b.bonds[k];
    if (x.i != y.i || x.j != y.j || !close(x.w, y.w)) return false;
  }
  return true;
}

// Family members a part or a doubled system may turn into: the pyrochlore
// and checkerboard patterns can flip variant after re-indexing.
std::vector<LatticeSpec> variants(const LatticeSpec& like, int nx) {
  LatticeSpec s = like;
  s.nx = nx;
  std::vector<LatticeSpec> out{s};
  if (is_pyro(like.family)) {
    LatticeSpec other = s;
    other.family =
        like.family == Family::PyroLadderA ? Family::PyroLadderB : Family::PyroLadderA;
    out.push_back(other);
  } else if (like.family == Family::Rectangle &&
             (like.crossing == Crossing::CheckerA || like.crossing == Crossing::CheckerB)) {
    LatticeSpec other = s;
    other.crossing =
        like.crossing == Crossing::CheckerA ? Crossing::CheckerB : Crossing::CheckerA;
    out.push_back(other);
  }
  return out;
}

LatticeSpec match_variant(const LatticeSpec& like, int nx, const BondList& bonds,
                          const char* what) {
  for (const LatticeSpec& candidate : variants(like, nx)) {
    if (same_edges(build(candidate), bonds)) return candidate;
  }
  throw SpecError(std::string(what) + ": result is not a member of the " +
                  std::string(family_name(like.family)) + " family");
}

}  // namespace

double BondList::weight_sum() const {
  double s = 0.0;
  for (const Bond& b : bonds) s += b.w;
  return s;
}

LatticeSpec LatticeSpec::chain(int n, double j) { return {Family::Chain, n, 1, Crossing::None, j, 0.0}; }

LatticeSpec LatticeSpec::square_ladder(int length, double j) {
  return {Family::SquareLadder, length, 2, Crossing::None, j, 0.0};
}

LatticeSpec LatticeSpec::crossed_ladder(int length, double jd, double j) {
  return {Family::CrossedLadder, length, 2, Crossing::None, j, jd};
}

LatticeSpec LatticeSpec::pyro_a(int length, double j) {
  return {Family::PyroLadderA, length, 2, Crossing::None, j, j};
}

LatticeSpec LatticeSpec::pyro_b(int length, double j) {
  return {Family::PyroLadderB, length, 2, Crossing::None, j, j};
}

LatticeSpec LatticeSpec::rectangle(int nx, int ny, Crossing crossing, double jd, double j) {
  double d = 0.0;
  if (crossing == Crossing::CheckerA || crossing == Crossing::CheckerB) d = j;
  if (crossing == Crossing::All) d = jd;
  return {Family::Rectangle, nx, ny, crossing, j, d};
}

CutSpec CutSpec::from_d2(int length, int d2) {
  if ((length + d2) % 2 != 0) {
    throw SpecError("cut offset 2d must have the parity of the length");
  }
  return {(length + d2) / 2, (length - d2) / 2};
}

LatticeSpec make_spec(Family family, int nx, int ny, Crossing crossing, double j, double jd) {
  switch (family) {
    case Family::Chain:
      return LatticeSpec::chain(nx, j);
    case Family::SquareLadder:
      return LatticeSpec::square_ladder(nx, j);
    case Family::CrossedLadder:
      return LatticeSpec::crossed_ladder(nx, jd < 0 ? 0.5 * j : jd, j);
    case Family::PyroLadderA:
      return LatticeSpec::pyro_a(nx, j);
    case Family::PyroLadderB:
      return LatticeSpec::pyro_b(nx, j);
    case Family::Rectangle:
      return LatticeSpec::rectangle(nx, ny, crossing, jd < 0 ? 0.5 * j : jd, j);
  }
  throw SpecError("unknown family");
}

void validate(const LatticeSpec& s) {
  if (s.nx < 1 || s.ny < 1) throw SpecError("nx and ny must be positive");
  if (!(s.j > 0.0) || !std::isfinite(s.j)) throw SpecError("coupling j must be positive");
  if (!std::isfinite(s.jd) || s.jd < 0.0) throw SpecError("diagonal coupling jd must be >= 0");
  if (s.n_sites() > 32) throw SpecError("at most 32 sites are supported");

  if (s.family != Family::Rectangle && s.crossing != Crossing::None) {
    throw SpecError("crossing patterns apply to rectangles only");
  }
  switch (s.family) {
    case Family::Chain:
      if (s.ny != 1) throw SpecError("chain requires ny = 1");
      if (s.jd != 0.0) throw SpecError("chain has no diagonal coupling (jd must be 0)");
      break;
    case Family::SquareLadder:
      if (s.ny != 2) throw SpecError("ladder requires ny = 2");
      if (s.jd != 0.0) throw SpecError("square ladder has no diagonal coupling (jd must be 0)");
      break;
    case Family::CrossedLadder:
      if (s.ny != 2) throw SpecError("crossed ladder requires ny = 2");
      if (!(s.jd > 0.0)) throw SpecError("crossed ladder requires jd > 0");
      break;
    case Family::PyroLadderA:
    case Family::PyroLadderB:
      if (s.ny != 2) throw SpecError("pyrochlore ladder requires ny = 2");
      if (!close(s.jd, s.j)) throw SpecError("pyrochlore ladder requires jd = j");
      break;
    case Family::Rectangle:
      if (s.ny < 2) throw SpecError("rectangle requires ny >= 2");
      switch (s.crossing) {
        case Crossing::None:
          if (s.jd != 0.0) throw SpecError("uncrossed rectangle requires jd = 0");
          break;
        case Crossing::CheckerA:
        case Crossing::CheckerB:
          if (!close(s.jd, s.j)) throw SpecError("checkerboard rectangle requires jd = j");
          break;
        case Crossing::All:
          if (!(s.jd > 0.0)) throw SpecError("fully crossed rectangle requires jd > 0");
          break;
      }
      break;
  }
}

BondList build(const LatticeSpec& s) {
  validate(s);
  std::map<std::pair<int, int>, double> acc;
  for (int x = 0; x < s.nx; ++x) {
    for (int y = 0; y < s.ny; ++y) {
      if (x + 1 < s.nx) add(acc, s.site(x, y), s.site(x + 1, y), s.j);
      if (y + 1 < s.ny) add(acc, s.site(x, y), s.site(x, y + 1), s.j);
    }
  }
  for (int x = 0; x + 1 < s.nx; ++x) {
    for (int y = 0; y + 1 < s.ny; ++y) {
      const double w = diagonal_weight(s, x, y);
      if (w == 0.0) continue;
      add(acc, s.site(x, y), s.site(x + 1, y + 1), w);
      add(acc, s.site(x + 1, y), s.site(x, y + 1), w);
    }
  }
  return normalized(s.n_sites(), std::move(acc));
}

CutResult cut(const LatticeSpec& spec, const CutSpec& c) {
  validate(spec);
  if (c.m < 1 || c.n < 1) throw SpecError("invalid cut: both parts need at least one column");
  if (c.m + c.n != spec.nx) throw SpecError("invalid cut: m + n must equal nx");

  const int ny = spec.ny;
  const int split = c.m * ny;  // first site of the right part
  std::map<std::pair<int, int>, double> left;
  std::map<std::pair<int, int>, double> right;

  CutResult out;
  out.iface.k.assign(ny, std::vector<double>(ny, 0.0));
  for (int y = 0; y < ny; ++y) {
    out.iface.left_boundary.push_back(spec.site(c.m - 1, y));
    out.iface.right_boundary.push_back(y);
  }

  for (const Bond& b : build(spec).bonds) {
    if (b.j < split) {
      add(left, b.i, b.j, b.w);
    } else if (b.i >= split) {
      add(right, b.i - split, b.j - split, b.w);
    } else {
      const int xl = b.i / ny;
      const int xr = b.j / ny;
      if (xl != c.m - 1 || xr != c.m) throw SpecError("cut severs a non-adjacent bond");
      out.iface.k[b.i % ny][b.j % ny] += b.w;
    }
  }

  out.left = match_variant(spec, c.m, normalized(split, std::move(left)), "cut");
  out.right = match_variant(spec, c.n, normalized(c.n * ny, std::move(right)), "cut");
  return out;
}

BondList mirror_double_bonds(const LatticeSpec& part, const InterfaceMatrix& iface, Side side) {
  validate(part);
  const int nx = part.nx;
  const int ny = part.ny;
  const auto rows = static_cast<std::size_t>(ny);
  if (iface.k.size() != rows || iface.left_boundary.size() != rows ||
      iface.right_boundary.size() != rows) {
    throw SpecError("interface dimensions do not match the part");
  }
  for (const auto& row : iface.k) {
    if (row.size() != rows) throw SpecError("interface matrix is not square");
  }
  for (int y = 0; y < ny; ++y) {
    const int expected = side == Side::Left ? part.site(nx - 1, y) : part.site(0, y);
    const auto& boundary = side == Side::Left ? iface.left_boundary : iface.right_boundary;
    if (boundary[y] != expected) throw SpecError("interface boundary does not match the part");
  }

  LatticeSpec doubled = part;
  doubled.nx = 2 * nx;
  // Column of the original part and of its reflection inside the doubled system.
  auto place = [&](int x) { return side == Side::Left ? x : x + nx; };
  auto mirror = [&](int x) { return side == Side::Left ? 2 * nx - 1 - x : nx - 1 - x; };

  std::map<std::pair<int, int>, double> acc;
  for (const Bond& b : build(part).bonds) {
    const int xi = b.i / ny, yi = b.i % ny;
    const int xj = b.j / ny, yj = b.j % ny;
    add(acc, doubled.site(place(xi), yi), doubled.site(place(xj), yj), b.w);
    add(acc, doubled.site(mirror(xi), yi), doubled.site(mirror(xj), yj), b.w);
  }
  // The interface always joins columns nx-1 and nx of the doubled system.
  for (int a = 0; a < ny; ++a) {
    for (int b = 0; b < ny; ++b) {
      const double w = iface.k[a][b];
      if (w < 0.0) throw SpecError("interface weights must be nonnegative");
      if (w != 0.0) add(acc, doubled.site(nx - 1, a), doubled.site(nx, b), w);
    }
  }
  return normalized(doubled.n_sites(), std::move(acc));
}

LatticeSpec mirror_double(const LatticeSpec& part, const InterfaceMatrix& iface, Side side) {
  return match_variant(part, 2 * part.nx, mirror_double_bonds(part, iface, side), "double");
}

ApplicabilityReport check_applicability(const InterfaceMatrix& iface) {
  ApplicabilityReport report;
  const std::size_t n = iface.k.size();
  if (n == 0) throw SpecError("empty interface matrix");
  for (const auto& row : iface.k) {
    if (row.size() != n) return report;  // non-square: no mirror correspondence
  }
  report.symmetric = true;
  for (std::size_t a = 0; a < n && report.symmetric; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!close(iface.k[a][b], iface.k[b][a])) {
        report.symmetric = false;
        break;
      }
    }
  }
  if (!report.symmetric) return report;

  std::vector<double> dense;
  dense.reserve(n * n);
  for (const auto& row : iface.k) dense.insert(dense.end(), row.begin(), row.end());
  const int dim = static_cast<int>(n);
  report.eigenvalues = linalg::symmetric_eigs(dense, dim, dim, false).values;
  report.status = report.eigenvalues.front() >= kPsdTol ? Applicability::Applicable
                                                        : Applicability::NotRepresentable;
  return report;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Chain: return "chain";
    case Family::SquareLadder: return "ladder";
    case Family::CrossedLadder: return "x-ladder";
    case Family::PyroLadderA: return "pyro-a";
    case Family::PyroLadderB: return "pyro-b";
    case Family::Rectangle: return "rect";
  }
  return "?";
}

std::string_view crossing_name(Crossing c) {
  switch (c) {
    case Crossing::None: return "none";
    case Crossing::CheckerA: return "checker-a";
    case Crossing::CheckerB: return "checker-b";
    case Crossing::All: return "all";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::Chain, Family::SquareLadder, Family::CrossedLadder, Family::PyroLadderA,
                   Family::PyroLadderB, Family::Rectangle}) {
    if (family_name(f) == name) return f;
  }
  throw SpecError("unknown family '" + std::string(name) + "'");
}

Crossing parse_crossing(std::string_view name) {
  for (Crossing c : {Crossing::None, Crossing::CheckerA, Crossing::CheckerB, Crossing::All}) {
    if (crossing_name(c) == name) return c;
  }
  throw SpecError("unknown crossing '" + std::string(name) + "'");
}

std::string canonical_key(const LatticeSpec& s) {
  validate(s);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s:%d:%d:%s:%.17g:%.17g", family_name(s.family).data(), s.nx,
                s.ny, crossing_name(s.crossing).data(), s.j, s.jd);
  return buf;
}

}  // namespace schupp
