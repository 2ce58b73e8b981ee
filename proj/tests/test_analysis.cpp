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
#include <random>

#include "doctest.h"
#include "schupp/analysis.hpp"

using namespace schupp;

namespace {

std::vector<FitPoint> synthetic(FitModel m, double a, double k, double noise, unsigned seed, int group = 0) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g(0.0, noise);
  std::vector<FitPoint> pts;
  for (int x = 6; x <= 24; x += 2) {
    const double clean = m == FitModel::PowerLaw ? a * std::pow(x, -k) : a * std::exp(-k * x);
    pts.push_back({static_cast<double>(x), clean * std::exp(g(rng)), group});
  }
  return pts;
}

}  // namespace

TEST_CASE("power law recovers its exponent") {
  const FitResult f = fit_power(synthetic(FitModel::PowerLaw, 3.0, 2.5, 0.0, 1));
  REQUIRE(f.determined);
  CHECK(f.exponent == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(f.amplitude == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(f.r_squared == doctest::Approx(1.0));
}

TEST_CASE("exponential recovers its rate under noise") {
  const FitResult f = fit_exp(synthetic(FitModel::Exponential, 0.8, 0.6, 0.02, 7));
  REQUIRE(f.determined);
  CHECK(std::abs(f.exponent - 0.6) < 4.0 * f.std_err + 1e-3);
  CHECK(f.std_err > 0.0);
}

TEST_CASE("noise floor removes tiny values") {
  std::vector<FitPoint> pts = synthetic(FitModel::PowerLaw, 1.0, 2.0, 0.0, 1);
  pts.push_back({30.0, 1e-12, 0});
  pts.push_back({32.0, -1e-4, 0});
  const FitResult f = fit_power(pts);
  CHECK(f.excluded == 2);
  CHECK(f.exponent == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("too few points leave the fit undetermined") {
  CHECK_FALSE(fit_power({{4, 1.0, 0}, {6, 0.5, 0}}).determined);
  CHECK_FALSE(fit_exp({{4, 1.0, 0}, {4, 0.5, 0}, {4, 0.2, 0}}).determined);
  CHECK_FALSE(fit_exp({{4, 1e-12, 0}, {6, 1e-13, 0}, {8, 0.1, 0}}).determined);
}

TEST_CASE("joint fit shares the exponent and keeps amplitudes") {
  std::vector<FitPoint> pts = synthetic(FitModel::Exponential, 0.5, 0.4, 0.0, 1, 2);
  for (const FitPoint& p : synthetic(FitModel::Exponential, 2.0, 0.4, 0.0, 1, 4)) pts.push_back(p);
  pts.push_back({10.0, 0.3, 6});  // lone member, no slope information
  const FitResult f = fit_joint(pts, FitModel::Exponential);
  REQUIRE(f.determined);
  CHECK(f.exponent == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(f.excluded == 1);
  REQUIRE(f.group_amplitudes.size() == 2);
  CHECK(f.group_amplitudes[0].second == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(f.group_amplitudes[1].second == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("joint fit prefers the generating model") {
  std::vector<FitPoint> pw, ex;
  for (int g : {2, 4}) {
    for (const FitPoint& p : synthetic(FitModel::PowerLaw, g, 3.0, 0.01, 5u + g, g)) pw.push_back(p);
    for (const FitPoint& p : synthetic(FitModel::Exponential, g, 0.5, 0.01, 9u + g, g)) ex.push_back(p);
  }
  CHECK(fit_joint(pw, FitModel::PowerLaw).r_squared > fit_joint(pw, FitModel::Exponential).r_squared);
  CHECK(fit_joint(ex, FitModel::Exponential).r_squared > fit_joint(ex, FitModel::PowerLaw).r_squared);
}

TEST_CASE("decay classes of synthetic staggered profiles") {
  std::vector<double> d, alg, expo, flat;
  for (int r = 1; r <= 15; ++r) {
    d.push_back(r);
    const double sign = r % 2 ? -1.0 : 1.0;
    const double stagger = r % 2 ? 1.3 : 0.8;
    alg.push_back(sign * stagger * 0.6 / r);
    expo.push_back(sign * stagger * 0.6 * std::exp(-0.45 * r));
    flat.push_back(sign * (0.2 + 0.001 * std::sin(r)));
  }
  CHECK(classify_decay(d, alg).cls == Decay::Algebraic);
  CHECK(classify_decay(d, expo).cls == Decay::Exponential);
  CHECK(classify_decay(d, flat).cls == Decay::Constant);
  CHECK(classify_decay({1, 2, 3}, {0.3, 0.1, 0.05}).cls == Decay::Undetermined);
  CHECK_THROWS(classify_decay({1, 2}, {0.3}));
}

TEST_CASE("values at the floor are skipped") {
  std::vector<double> d, v;
  for (int r = 1; r <= 12; ++r) {
    d.push_back(r);
    v.push_back(1e-16);
  }
  const DecayClass c = classify_decay(d, v);
  CHECK(c.n_points == 0);
  CHECK(c.cls == Decay::Undetermined);
}

TEST_CASE("conjecture verdicts") {
  FitResult good_pw, good_ex;
  good_pw.determined = good_ex.determined = true;
  good_pw.model = FitModel::PowerLaw;
  good_ex.model = FitModel::Exponential;
  good_pw.r_squared = 0.99;
  good_ex.r_squared = 0.95;
  DecayClass alg, expo, und;
  alg.cls = Decay::Algebraic;
  expo.cls = Decay::Exponential;
  const auto rows = conjecture_table({{"chain", alg, good_pw, good_ex},
                                      {"ladder", expo, good_pw, good_ex},
                                      {"odd", und, good_pw, good_ex},
                                      {"empty", alg, FitResult{}, good_ex}});
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].verdict == Verdict::Agree);
  CHECK(rows[0].delta_model == FitModel::PowerLaw);
  CHECK(rows[1].verdict == Verdict::Disagree);
  CHECK(rows[2].flagged);
  CHECK(rows[2].verdict == Verdict::NoClaim);
  CHECK(rows[3].flagged);
}

TEST_CASE("name helpers") {
  CHECK(parse_model(model_name(FitModel::Exponential)) == FitModel::Exponential);
  CHECK(parse_model("power") == FitModel::PowerLaw);
  CHECK_THROWS(parse_model("linear"));
  CHECK(decay_name(Decay::Constant) == "constant");
  CHECK(verdict_name(Verdict::NoClaim) == "no-claim");
}
