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

#include <ostream>
#include <string>
#include <vector>

namespace schupp::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,      // verify found an entry off the reference value
  kBadFlags = 2,
  kSolverFailure = 3,
  kMemoryGuard = 4,
};

/// Runs one command line (args[0] is the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Prints v with 15 significant digits.
std::string format_number(double v);

/// v rounded to 15 significant digits, for JSON output.
double round15(double v);

}  // namespace schupp::cli
