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


#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"
#include "oracle.hpp"
#include "schupp/lattice.hpp"

using namespace schupp;

namespace {

std::vector<oracle::Edge> as_edges(const BondList& b) {
  std::vector<oracle::Edge> out;
  for (const Bond& x : b.bonds) out.emplace_back(x.i, x.j, x.w);
  return out;
}

}  // namespace

TEST_CASE("bond lists match the independent edge builder for every family") {
  for (const LatticeSpec& s : oracle::family_zoo(16)) {
    CAPTURE(canonical_key(s));
    const BondList b = build(s);
    CHECK(b.n_sites == s.n_sites());
    const auto got = as_edges(b);
    const auto want = oracle::edges(s);
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      CHECK(std::get<0>(got[k]) == std::get<0>(want[k]));
      CHECK(std::get<1>(got[k]) == std::get<1>(want[k]));
      CHECK(std::get<2>(got[k]) == doctest::Approx(std::get<2>(want[k])));
    }
  }
}

TEST_CASE("bond counts of small lattices") {
  CHECK(build(LatticeSpec::chain(6)).bonds.size() == 5);
  CHECK(build(LatticeSpec::square_ladder(4)).bonds.size() == 10);
  CHECK(build(LatticeSpec::crossed_ladder(4)).bonds.size() == 16);
  // A crosses plaquettes 1 and 3 of four columns, B only plaquette 2.
  CHECK(build(LatticeSpec::pyro_a(4)).bonds.size() == 14);
  CHECK(build(LatticeSpec::pyro_b(4)).bonds.size() == 12);
  CHECK(build(LatticeSpec::rectangle(3, 3, Crossing::All)).bonds.size() == 12 + 8);
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(validate(LatticeSpec::chain(0)), SpecError);
  CHECK_THROWS_AS(validate(LatticeSpec::chain(33)), SpecError);
  CHECK_THROWS_AS(validate(LatticeSpec::chain(4, -1.0)), SpecError);
  CHECK_THROWS_AS(validate(LatticeSpec::crossed_ladder(4, 0.0)), SpecError);
  LatticeSpec bad = LatticeSpec::square_ladder(3);
  bad.ny = 3;
  CHECK_THROWS_AS(validate(bad), SpecError);
  bad = LatticeSpec::chain(4);
  bad.crossing = Crossing::All;
  CHECK_THROWS_AS(validate(bad), SpecError);
  CHECK_THROWS_AS(parse_family("triangle"), SpecError);
  CHECK_THROWS_AS(parse_crossing("some"), SpecError);
}

TEST_CASE("family and crossing names round-trip") {
  for (Family f : {Family::Chain, Family::SquareLadder, Family::CrossedLadder, Family::PyroLadderA,
                   Family::PyroLadderB, Family::Rectangle}) {
    CHECK(parse_family(family_name(f)) == f);
  }
  for (Crossing c : {Crossing::None, Crossing::CheckerA, Crossing::CheckerB, Crossing::All}) {
    CHECK(parse_crossing(crossing_name(c)) == c);
  }
}

TEST_CASE("canonical keys separate distinct systems") {
  std::set<std::string> keys;
  const auto zoo = oracle::family_zoo(16);
  for (const LatticeSpec& s : zoo) keys.insert(canonical_key(s));
  CHECK(keys.size() == zoo.size());
  CHECK(canonical_key(LatticeSpec::crossed_ladder(5, 0.5)) !=
        canonical_key(LatticeSpec::crossed_ladder(5, 0.25)));
  CHECK(canonical_key(LatticeSpec::chain(5)) == canonical_key(make_spec(Family::Chain, 5)));
}

TEST_CASE("cut offsets") {
  CHECK(CutSpec::from_d2(10, 0).m == 5);
  CHECK(CutSpec::from_d2(10, 2).m == 6);
  CHECK(CutSpec::from_d2(10, 2).n == 4);
  CHECK(CutSpec::from_d2(10, -4).d2() == -4);
  CHECK_THROWS_AS(CutSpec::from_d2(10, 1), SpecError);
  CHECK_THROWS_AS(cut(LatticeSpec::chain(6), CutSpec{6, 0}), SpecError);
  CHECK_THROWS_AS(cut(LatticeSpec::chain(6), CutSpec{2, 3}), SpecError);
}

TEST_CASE("cut parts and interface of a crossed ladder") {
  const LatticeSpec s = LatticeSpec::crossed_ladder(6, 0.5);
  const CutResult c = cut(s, CutSpec{4, 2});
  CHECK(c.left == LatticeSpec::crossed_ladder(4, 0.5));
  CHECK(c.right == LatticeSpec::crossed_ladder(2, 0.5));
  REQUIRE(c.iface.k.size() == 2);
  CHECK(c.iface.k[0][0] == doctest::Approx(1.0));
  CHECK(c.iface.k[1][1] == doctest::Approx(1.0));
  CHECK(c.iface.k[0][1] == doctest::Approx(0.5));
  CHECK(c.iface.k[1][0] == doctest::Approx(0.5));
  const auto rep = check_applicability(c.iface);
  CHECK(rep.status == Applicability::Applicable);
  REQUIRE(rep.eigenvalues.size() == 2);
  CHECK(rep.eigenvalues[0] == doctest::Approx(0.5));
  CHECK(rep.eigenvalues[1] == doctest::Approx(1.5));
}

TEST_CASE("strong diagonals make the interface indefinite") {
  const CutResult c = cut(LatticeSpec::crossed_ladder(6, 2.0), CutSpec{3, 3});
  const auto rep = check_applicability(c.iface);
  CHECK(rep.status == Applicability::NotRepresentable);
  CHECK(rep.eigenvalues.front() == doctest::Approx(-1.0));
}

TEST_CASE("asymmetric interfaces are not representable") {
  InterfaceMatrix m;
  m.left_boundary = {0, 1};
  m.right_boundary = {0, 1};
  m.k = {{1.0, 1.0}, {0.0, 1.0}};
  const auto rep = check_applicability(m);
  CHECK_FALSE(rep.symmetric);
  CHECK(rep.status == Applicability::NotRepresentable);
}

TEST_CASE("mirror doubling reproduces the explicit reflection") {
  for (const LatticeSpec& s : oracle::family_zoo(16)) {
    if (s.nx < 3) continue;
    for (int m = 1; m < s.nx; ++m) {
      CAPTURE(canonical_key(s));
      CAPTURE(m);
      const CutResult c = cut(s, CutSpec{m, s.nx - m});
      if (check_applicability(c.iface).status != Applicability::Applicable) continue;
      for (Side side : {Side::Left, Side::Right}) {
        const LatticeSpec& part = side == Side::Left ? c.left : c.right;
        LatticeSpec d;
        try {
          d = mirror_double(part, c.iface, side);
        } catch (const SpecError&) {
          continue;  // the doubled system is outside every family
        }
        CHECK(d.nx == 2 * part.nx);
        CHECK(build(d) == mirror_double_bonds(part, c.iface, side));
      }
    }
  }
}

TEST_CASE("doubling an open chain gives the chain of twice the length") {
  const CutResult c = cut(LatticeSpec::chain(7), CutSpec{4, 3});
  CHECK(mirror_double(c.left, c.iface, Side::Left) == LatticeSpec::chain(8));
  CHECK(mirror_double(c.right, c.iface, Side::Right) == LatticeSpec::chain(6));
}

TEST_CASE("doubling the pyrochlore ladders") {
  // Both halves of A at an even cut double into A again.
  const LatticeSpec a = LatticeSpec::pyro_a(8);
  const CutResult c = cut(a, CutSpec{5, 3});
  const LatticeSpec l = mirror_double(c.left, c.iface, Side::Left);
  const LatticeSpec r = mirror_double(c.right, c.iface, Side::Right);
  CHECK(l.nx == 10);
  CHECK(r.nx == 6);
  CHECK(build(l) == mirror_double_bonds(c.left, c.iface, Side::Left));
  CHECK(build(r) == mirror_double_bonds(c.right, c.iface, Side::Right));
}
