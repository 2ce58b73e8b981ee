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

#include <string>
#include <vector>

#include "schupp/lattice.hpp"

namespace schupp {

/// Published ground-state energy of one lattice instance.
struct ReferenceEntry {
  std::string table;  // "chain" or "quasi2d"
  std::string label;  // e.g. "chain N=12", "pyro-a 2x6", "rect checker-a 4x4"
  LatticeSpec spec;
  double energy = 0.0;
};

/// Open chains N = 2..28, J = 1.
const std::vector<ReferenceEntry>& chain_reference();

/// Square, pyrochlore A/B and X lattices, width 2..5. Width 2 maps to the
/// ladder families, wider strips to rectangles.
const std::vector<ReferenceEntry>& quasi2d_reference();

/// Both tables, chains first.
std::vector<ReferenceEntry> all_reference();

/// Entry for this exact spec, if the tables hold one.
const ReferenceEntry* find_reference(const LatticeSpec& spec);

}  // namespace schupp
