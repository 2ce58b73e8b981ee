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


#include "schupp/reference.hpp"

#include <cstdio>

namespace schupp {
namespace {

constexpr double kChain[][2] = {
    {2, -0.750000000000},
    {3, -1.000000000000},
    {4, -1.616025403784},
    {5, -1.927886253318},
    {6, -2.493577133888},
    {7, -2.836239680687},
    {8, -3.374932598688},
    {9, -3.736321706379},
    {10, -4.258035207283},
    {11, -4.632093302360},
    {12, -5.142090632841},
    {13, -5.525322097084},
    {14, -6.026724661862},
    {15, -6.416920491794},
    {16, -6.911737145575},
    {17, -7.307408708036},
    {18, -7.797011068537},
    {19, -8.197105741633},
    {20, -8.682473334399},
    {21, -9.086218400935},
    {22, -9.568075875984},
    {23, -9.974886805423},
    {24, -10.453785760410},
    {25, -10.863209352260},
    {26, -11.339579652755},
    {27, -11.751257222131},
    {28, -12.225440548603},
};

// width, length, then square, pyrochlore A, pyrochlore B, X lattice.
constexpr double kQuasi2d[][6] = {
    {2, 2, -2.0000000000000, -1.5000000000000, -2.0000000000000, -1.7500000000000},
    {2, 3, -3.1293852415718, -2.7500000000000, -2.7500000000000, -2.6778862533180},
    {2, 4, -4.2930664566570, -3.5000000000000, -4.0277505942154, -3.6418298745657},
    {2, 5, -5.4467120643352, -4.7777505942154, -4.7777505942154, -4.5873084880937},
    {2, 6, -6.6034724753869, -5.5277505942154, -6.0607411404916, -5.5431961748705},
    {2, 7, -7.7593260611500, -6.8107411404916, -6.8107411404916, -6.4933181096298},
    {2, 8, -8.9154711235558, -7.5607411404916, -8.0949932311853, -7.4467788894730},
    {2, 9, -10.0715341613484, -8.8449932311853, -8.8449932311853, -8.3983424061390},
    {2, 10, -11.2276251173666, -9.5949932311853, -10.1295778777187, -9.3510128680377},
    {2, 11, -12.3837088687482, -10.8795778777187, -10.8795778777186, -10.3030475515486},
    {2, 12, -13.5397954074066, -11.6295778777187, -12.1642537019725, -11.2554538123736},
    {2, 13, -14.6958813681522, -12.9142537019725, -12.9142537019725, -12.2076455365328},
    {2, 14, -15.8519676317127, -13.6642537019726, -14.1989549790545, -13.1599626306679},
    {3, 3, -4.7493272585528, -4.0087848535303, -4.0087848535303, -3.9593399973975},
    {3, 4, -6.6916801935149, -5.6617068232824, -5.6617068232824, -5.5345034217058},
    {3, 5, -8.3876285183968, -6.9910226671666, -6.9910226671666, -6.8685484091210},
    {3, 6, -10.2835182238578, -8.5954218204916, -8.5954218204916, -8.4037660947387},
    {3, 7, -12.0072308867337, -9.9647656528603, -9.9647656528602, -9.7629674917248},
    {3, 8, -13.8813610992452, -11.5380986367773, -11.5380986367773, -11.2765046416748},
    {4, 4, -9.1892070651929, -7.3280745721674, -8.1022525727023, -7.5055569500810},
    {4, 5, -11.6515708351580, -9.7410214922860, -9.7410214922860, -9.4307787759889},
    {4, 6, -14.1291468644466, -11.3817745234209, -12.1857227796133, -11.3850974919405},
    {5, 5, -14.6961464371187, -12.0391686609399, -12.0391686609399, -11.7667640193786},
};

std::string strip_label(const char* kind, int width, int length) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s %dx%d", kind, width, length);
  return buf;
}

}  // namespace

const std::vector<ReferenceEntry>& chain_reference() {
  static const std::vector<ReferenceEntry> rows = [] {
    std::vector<ReferenceEntry> out;
    for (const auto& r : kChain) {
      const int n = static_cast<int>(r[0]);
      out.push_back({"chain", "chain N=" + std::to_string(n), LatticeSpec::chain(n), r[1]});
    }
    return out;
  }();
  return rows;
}

const std::vector<ReferenceEntry>& quasi2d_reference() {
  static const std::vector<ReferenceEntry> rows = [] {
    std::vector<ReferenceEntry> out;
    for (const auto& r : kQuasi2d) {
      const int width = static_cast<int>(r[0]);
      const int length = static_cast<int>(r[1]);
      if (width == 2) {
        out.push_back({"quasi2d", strip_label("ladder", 2, length),
                       LatticeSpec::square_ladder(length), r[2]});
        out.push_back({"quasi2d", strip_label("pyro-a", 2, length), LatticeSpec::pyro_a(length), r[3]});
        out.push_back({"quasi2d", strip_label("pyro-b", 2, length), LatticeSpec::pyro_b(length), r[4]});
        out.push_back({"quasi2d", strip_label("x-ladder", 2, length),
                       LatticeSpec::crossed_ladder(length, 0.5), r[5]});
      } else {
        out.push_back({"quasi2d", strip_label("rect none", width, length),
                       LatticeSpec::rectangle(length, width, Crossing::None), r[2]});
        out.push_back({"quasi2d", strip_label("rect checker-a", width, length),
                       LatticeSpec::rectangle(length, width, Crossing::CheckerA), r[3]});
        out.push_back({"quasi2d", strip_label("rect checker-b", width, length),
                       LatticeSpec::rectangle(length, width, Crossing::CheckerB), r[4]});
        out.push_back({"quasi2d", strip_label("rect all", width, length),
                       LatticeSpec::rectangle(length, width, Crossing::All, 0.5), r[5]});
      }
    }
    return out;
  }();
  return rows;
}

std::vector<ReferenceEntry> all_reference() {
  std::vector<ReferenceEntry> out = chain_reference();
  const auto& q = quasi2d_reference();
  out.insert(out.end(), q.begin(), q.end());
  return out;
}

const ReferenceEntry* find_reference(const LatticeSpec& spec) {
  for (const auto* table : {&chain_reference(), &quasi2d_reference()}) {
    for (const ReferenceEntry& e : *table) {
      if (e.spec == spec) return &e;
    }
  }
  return nullptr;
}

}  // namespace schupp
