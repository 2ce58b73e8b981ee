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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schupp {

/// Raised for a LatticeSpec, CutSpec or InterfaceMatrix that violates its invariants.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family { Chain, SquareLadder, CrossedLadder, PyroLadderA, PyroLadderB, Rectangle };
enum class Crossing { None, CheckerA, CheckerB, All };

/// Open-boundary lattice instance. Sites are numbered column-major:
/// site(x, y) = x * ny + y, with x in [0, nx) along the long axis.
///
/// Couplings that a family does not use are stored as 0 so that equal
/// physics always means equal fields (and equal canonical keys).
struct LatticeSpec {
  Family family = Family::Chain;
  int nx = 2;
  int ny = 1;
  Crossing crossing = Crossing::None;
  double j = 1.0;
  double jd = 0.0;

  static LatticeSpec chain(int n, double j = 1.0);
  static LatticeSpec square_ladder(int length, double j = 1.0);
  static LatticeSpec crossed_ladder(int length, double jd = 0.5, double j = 1.0);
  static LatticeSpec pyro_a(int length, double j = 1.0);
  static LatticeSpec pyro_b(int length, double j = 1.0);
  static LatticeSpec rectangle(int nx, int ny, Crossing crossing = Crossing::None,
                               double jd = 0.5, double j = 1.0);

  [[nodiscard]] int n_sites() const { return nx * ny; }
  [[nodiscard]] int site(int x, int y) const { return x * ny + y; }

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

struct Bond {
  int i = 0;
  int j = 0;
  double w = 0.0;

  friend bool operator==(const Bond&, const Bond&) = default;
};

/// Weighted edge set of H = sum_b w_b S_i . S_j, bonds sorted by (i, j).
struct BondList {
  int n_sites = 0;
  std::vector<Bond> bonds;

  [[nodiscard]] double weight_sum() const;
  friend bool operator==(const BondList&, const BondList&) = default;
};

/// Straight cut between column m-1 and column m; the left part keeps m
/// columns, the right part n.
struct CutSpec {
  int m = 1;
  int n = 1;

  /// 2d = m - n, the signed offset from the middle in half-columns.
  [[nodiscard]] int d2() const { return m - n; }

  /// Cut of a length-L system at offset d2; L + d2 must be even.
  static CutSpec from_d2(int length, int d2);
};

/// Couplings severed by a cut. k[a][b] is the total weight between
/// left_boundary[a] (left-part index) and right_boundary[b] (right-part index).
struct InterfaceMatrix {
  std::vector<int> left_boundary;
  std::vector<int> right_boundary;
  std::vector<std::vector<double>> k;
};

struct CutResult {
  LatticeSpec left;
  LatticeSpec right;
  InterfaceMatrix iface;
};

enum class Side { Left, Right };

enum class Applicability { Applicable, NotRepresentable };

struct ApplicabilityReport {
  Applicability status = Applicability::NotRepresentable;
  bool symmetric = false;
  std::vector<double> eigenvalues;  // of k, ascending; empty when not symmetric
};

void validate(const LatticeSpec& spec);

BondList build(const LatticeSpec& spec);

CutResult cut(const LatticeSpec& spec, const CutSpec& cut);

/// Mirror-doubled system of one side of a cut: the part, its reflection
/// across the cut line, and the interface couplings mapped through the
/// reflection (row y on one side faces row y on the other).
LatticeSpec mirror_double(const LatticeSpec& part, const InterfaceMatrix& iface, Side side);

/// Bonds of the part-plus-reflection construction, independent of any
/// family bookkeeping. mirror_double() returns the spec whose build() equals this.
BondList mirror_double_bonds(const LatticeSpec& part, const InterfaceMatrix& iface, Side side);

/// k must admit k = sum_A J^A (J^A)^T: symmetric and positive semidefinite
/// (smallest eigenvalue >= -1e-12). Asymmetric matrices are rejected.
ApplicabilityReport check_applicability(const InterfaceMatrix& iface);

std::string canonical_key(const LatticeSpec& spec);

std::string_view family_name(Family family);
std::string_view crossing_name(Crossing crossing);
Family parse_family(std::string_view name);
Crossing parse_crossing(std::string_view name);

/// Default spec of a family with the given length (and ny/crossing for rectangles).
LatticeSpec make_spec(Family family, int nx, int ny = 0, Crossing crossing = Crossing::None,
                      double j = 1.0, double jd = -1.0);

}  // namespace schupp
