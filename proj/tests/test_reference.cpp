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
#include <set>
#include <string>

#include "doctest.h"
#include "oracle.hpp"
#include "schupp/reference.hpp"

using namespace schupp;

TEST_CASE("table sizes and lookup") {
  CHECK(chain_reference().size() == 27);
  CHECK(quasi2d_reference().size() == 92);
  CHECK(all_reference().size() == 119);
  const ReferenceEntry* e = find_reference(LatticeSpec::chain(12));
  REQUIRE(e != nullptr);
  CHECK(e->label == "chain N=12");
  CHECK(find_reference(LatticeSpec::crossed_ladder(4, 0.25)) == nullptr);
  CHECK(find_reference(LatticeSpec::chain(40)) == nullptr);
}

TEST_CASE("every table spec is valid and unique") {
  std::set<std::string> keys;
  for (const ReferenceEntry& e : all_reference()) {
    CHECK_NOTHROW(validate(e.spec));
    keys.insert(canonical_key(e.spec));
  }
  CHECK(keys.size() == all_reference().size());
}

TEST_CASE("small table entries agree with dense diagonalization") {
  for (const ReferenceEntry& e : all_reference()) {
    const int n = e.spec.n_sites();
    if (n > 12) continue;
    CAPTURE(e.label);
    const auto sec = oracle::sector(n, (n + 1) / 2);
    const double want = oracle::spectrum(oracle::dense(oracle::edges(e.spec), sec))(0);
    CHECK(std::abs(e.energy - want) < 1e-10);
  }
}

TEST_CASE("closed-form small chains") {
  CHECK(find_reference(LatticeSpec::chain(2))->energy == doctest::Approx(-0.75));
  CHECK(find_reference(LatticeSpec::chain(3))->energy == doctest::Approx(-1.0));
  CHECK(find_reference(LatticeSpec::chain(4))->energy ==
        doctest::Approx(-0.75 - std::sqrt(3.0) / 2.0).epsilon(1e-12));
}
