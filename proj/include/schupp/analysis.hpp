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

#include "schupp/observables.hpp"

namespace schupp {

enum class FitModel { PowerLaw, Exponential };

struct FitPoint {
  double x = 0.0;  // system length L
  double y = 0.0;  // gap value
  int group = 0;   // d2 for joint fits
};

/// Result of y ~ A x^(-exponent) (PowerLaw) or y ~ A exp(-exponent x)
/// (Exponential) by unweighted least squares on ln y.
struct FitResult {
  FitModel model = FitModel::PowerLaw;
  bool determined = false;  // false when fewer than 3 usable points remain
  double exponent = 0.0;
  double amplitude = 0.0;   // A, of the first group for joint fits
  double std_err = 0.0;     // 1 sigma of the exponent
  double r_squared = 0.0;   // in log space; within-group for joint fits
  int n_points = 0;
  int excluded = 0;         // dropped at the noise floor, or lone group members
  std::vector<std::pair<int, double>> group_amplitudes;  // joint fits only
};

inline constexpr double kNoiseFloor = 1e-9;

FitResult fit_power(const std::vector<FitPoint>& points, double noise_floor = kNoiseFloor);
FitResult fit_exp(const std::vector<FitPoint>& points, double noise_floor = kNoiseFloor);

/// One exponent shared by all groups, a free amplitude per group.
/// Groups left with a single point carry no slope information and are dropped.
FitResult fit_joint(const std::vector<FitPoint>& points, FitModel model,
                    double noise_floor = kNoiseFloor);

enum class Decay { Algebraic, Exponential, Constant, Undetermined };

struct DecayClass {
  Decay cls = Decay::Undetermined;
  double r2_power = 0.0;  // log-space, on the smoothed |c|
  double r2_exp = 0.0;
  bool constant = false;  // |c| = a + b r with a > 3 sigma_a and |b| <= 3 sigma_b
  int n_points = 0;
};

struct DecayOptions {
  double min_distance = 2.0;
  double max_fraction = 0.75;  // drop distances past this share of the largest one (far-edge echo)
  double ratio = 3.0;          // the loser's 1 - r2 must exceed the winner's by this factor
  double floor = 1e-12;        // |c| at or below it is treated as exactly zero and skipped
};

/// Decay of |<S_anchor . S_j>| with column distance, over the sites in the
/// anchor's row. Neighbouring distances are merged by geometric mean to
/// flatten the even/odd staggering. Needs at least 4 usable points.
DecayClass classify_decay(const std::vector<double>& distance, const std::vector<double>& value,
                          const DecayOptions& opts = {});
DecayClass classify_decay(const CorrelationSeries& series, const DecayOptions& opts = {});

struct ConjectureInput {
  std::string family;
  DecayClass decay;
  FitResult delta_power;
  FitResult delta_exp;
};

enum class Verdict { Agree, Disagree, NoClaim };

struct ConjectureRow {
  std::string family;
  Decay decay = Decay::Undetermined;
  FitModel delta_model = FitModel::PowerLaw;
  bool delta_determined = false;
  Verdict verdict = Verdict::NoClaim;
  bool flagged = false;  // an undetermined input; no agreement is claimed
};

/// Pairs each family's correlation decay with the better of its two gap
/// fits (larger r_squared). Algebraic goes with PowerLaw and Exponential
/// with Exponential; a Constant decay is outside the conjecture.
std::vector<ConjectureRow> conjecture_table(const std::vector<ConjectureInput>& families);

std::string_view model_name(FitModel m);
FitModel parse_model(std::string_view name);
std::string_view decay_name(Decay d);
std::string_view verdict_name(Verdict v);

}  // namespace schupp
