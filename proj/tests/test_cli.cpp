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


#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "doctest.h"
#include "schupp/cli.hpp"

using nlohmann::json;
namespace cli = schupp::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "schupp");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  std::random_device rd;
  return std::filesystem::temp_directory_path() / (std::to_string(rd()) + "-" + name);
}

// Field `col` of the first data row below a CSV header.
double csv_field(const std::string& out, int col) {
  std::istringstream in(out);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  std::istringstream row(line);
  std::string cell;
  for (int i = 0; i <= col; ++i) std::getline(row, cell, ',');
  return std::stod(cell);
}

}  // namespace

TEST_CASE("energy prints JSON with the reference value") {
  const Run r = run({"energy", "--family", "chain", "--nx", "8"});
  REQUIRE(r.code == cli::kOk);
  const json j = json::parse(r.out);
  CHECK(j.at("energies").at(0).get<double>() == doctest::Approx(-3.37493259868789).epsilon(1e-13));
  CHECK(std::abs(j.at("reference_diff").get<double>()) < 1e-10);
  CHECK(j.at("n_up") == 4);
}

TEST_CASE("energy as CSV") {
  const Run r = run({"energy", "--family", "pyro-b", "--nx", "4", "--out", "csv"});
  REQUIRE(r.code == cli::kOk);
  CHECK(csv_field(r.out, 3) == doctest::Approx(-4.02775059421543).epsilon(1e-12));
}

TEST_CASE("delta by offset and by cut position agree") {
  const Run a = run({"delta", "--family", "chain", "--nx", "6", "--d2", "2"});
  const Run b = run({"delta", "--family", "chain", "--nx", "6", "--cut", "4"});
  REQUIRE(a.code == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(csv_field(a.out, 8) == doctest::Approx(0.00380373469647366).epsilon(1e-9));
}

TEST_CASE("bad flags exit with code 2") {
  CHECK(run({"energy", "--family", "chain"}).code == cli::kBadFlags);
  CHECK(run({"energy", "--family", "hexagon", "--nx", "4"}).code == cli::kBadFlags);
  CHECK(run({"energy", "--family", "chain", "--nx", "0"}).code == cli::kBadFlags);
  CHECK(run({"delta", "--family", "chain", "--nx", "6", "--d2", "1"}).code == cli::kBadFlags);
  CHECK(run({"delta", "--family", "chain", "--nx", "6"}).code == cli::kBadFlags);
  CHECK(run({"nonsense"}).code == cli::kBadFlags);
  const Run r = run({"fit", "--input", "/nonexistent/file.csv"});
  CHECK(r.code == cli::kBadFlags);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("memory guard exits with code 4") {
  const Run r = run({"energy", "--family", "chain", "--nx", "28", "--max-mem", "1"});
  CHECK(r.code == cli::kMemoryGuard);
  CHECK(r.err.find("GiB") != std::string::npos);
}

TEST_CASE("solver failure exits with code 3") {
  const Run r = run({"energy", "--family", "chain", "--nx", "8", "--tol", "1e-30"});
  CHECK(r.code == cli::kSolverFailure);
}

TEST_CASE("non-representable cut is reported by check") {
  const Run ok = run({"check", "--family", "x-ladder", "--nx", "6", "--jd", "0.5", "--cut", "3"});
  REQUIRE(ok.code == cli::kOk);
  CHECK(json::parse(ok.out).at("status") == "applicable");
  const Run bad = run({"check", "--family", "x-ladder", "--nx", "6", "--jd", "2", "--cut", "3"});
  REQUIRE(bad.code == cli::kOk);
  CHECK(json::parse(bad.out).at("status") == "not_representable");
}

TEST_CASE("sweep output feeds the fitter") {
  const Run sw = run({"sweep", "--family", "chain", "--nx-min", "6", "--nx-max", "12", "--d2", "2"});
  REQUIRE(sw.code == cli::kOk);
  const auto path = temp_file("sweep.csv");
  std::ofstream(path) << sw.out;
  const Run fit = run({"fit", "--input", path.string(), "--model", "power"});
  REQUIRE(fit.code == cli::kOk);
  const json j = json::parse(fit.out);
  CHECK(j.at("determined") == true);
  CHECK(j.at("n_points") == 4);
  CHECK(j.at("exponent").get<double>() > 1.0);
  std::filesystem::remove(path);
}

TEST_CASE("profile output classifies its own decay") {
  const Run p = run({"profile", "--family", "chain", "--nx", "12", "--anchor", "0", "--out", "json"});
  REQUIRE(p.code == cli::kOk);
  const json j = json::parse(p.out);
  CHECK(j.contains("decay"));
  CHECK(j.at("values").size() == 12);
  const Run csv = run({"profile", "--family", "chain", "--nx", "12", "--anchor", "0"});
  const auto path = temp_file("profile.csv");
  std::ofstream(path) << csv.out;
  const Run d = run({"fit", "--input", path.string(), "--model", "decay"});
  REQUIRE(d.code == cli::kOk);
  CHECK(json::parse(d.out).contains("class"));
  std::filesystem::remove(path);
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::string> args{"sweep", "--family", "ladder", "--lengths", "4,5,6", "--d2", "0,1,2"};
  const Run a = run(args);
  const Run b = run(args);
  REQUIRE(a.code == cli::kOk);
  CHECK(a.out == b.out);
}

TEST_CASE("verify detects mismatches through the tolerance") {
  const Run ok = run({"verify", "--table", "chain", "--max-sites", "8"});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.find("# checked 7, failed 0") != std::string::npos);
  const Run strict = run({"verify", "--table", "chain", "--max-sites", "8", "--tolerance", "1e-18"});
  CHECK(strict.code == cli::kMismatch);
}

TEST_CASE("counterexample reports the violated naive inequality") {
  const Run r = run({"counterexample"});
  REQUIRE(r.code == cli::kOk);
  const json j = json::parse(r.out);
  CHECK(j.at("naive_inequality_violated") == true);
  CHECK(j.at("gap").get<double>() == doctest::Approx(-0.223028333771206).epsilon(1e-10));
}

TEST_CASE("number formatting") {
  CHECK(cli::format_number(0.1) == "0.1");
  CHECK(cli::format_number(-3.3749325986878913) == "-3.37493259868789");
  CHECK(cli::round15(1.0 / 3.0) == doctest::Approx(0.333333333333333).epsilon(1e-15));
}
