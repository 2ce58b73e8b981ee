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


#include "schupp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace schupp {
namespace {

struct Line {
  double slope = 0.0;
  double intercept = 0.0;
  double se_slope = 0.0;
  double se_intercept = 0.0;
  double ssr = 0.0;
  double sst = 0.0;
};

// Ordinary least squares y = intercept + slope x; needs n >= 3 and spread in x.
Line ols(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("regression needs at least two distinct x values");
  Line l;
  l.slope = sxy / sxx;
  l.intercept = my - l.slope * mx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - l.intercept - l.slope * x[i];
    l.ssr += r * r;
  }
  l.sst = syy;
  const double s2 = l.ssr / (n - 2.0);
  l.se_slope = std::sqrt(s2 / sxx);
  l.se_intercept = std::sqrt(s2 * (1.0 / n + mx * mx / sxx));
  return l;
}

double r_squared(double ssr, double sst) { return sst > 0.0 ? 1.0 - ssr / sst : 1.0; }

double abscissa(FitModel model, double x) { return model == FitModel::PowerLaw ? std::log(x) : x; }

FitResult fit_single(const std::vector<FitPoint>& points, FitModel model, double noise_floor) {
  FitResult out;
  out.model = model;
  std::vector<double> xs, ys;
  for (const FitPoint& p : points) {
    if (!(p.y > noise_floor) || !(p.x > 0.0)) {
      ++out.excluded;
      continue;
    }
    xs.push_back(abscissa(model, p.x));
    ys.push_back(std::log(p.y));
  }
  out.n_points = static_cast<int>(xs.size());
  if (xs.size() < 3) return out;
  if (std::all_of(xs.begin(), xs.end(), [&](double v) { return v == xs.front(); })) return out;
  const Line l = ols(xs, ys);
  out.determined = true;
  out.exponent = -l.slope;
  out.amplitude = std::exp(l.intercept);
  out.std_err = l.se_slope;
  out.r_squared = r_squared(l.ssr, l.sst);
  return out;
}

}  // namespace

FitResult fit_power(const std::vector<FitPoint>& points, double noise_floor) {
  return fit_single(points, FitModel::PowerLaw, noise_floor);
}

FitResult fit_exp(const std::vector<FitPoint>& points, double noise_floor) {
  return fit_single(points, FitModel::Exponential, noise_floor);
}

FitResult fit_joint(const std::vector<FitPoint>& points, FitModel model, double noise_floor) {
  FitResult out;
  out.model = model;
  std::map<int, std::vector<std::pair<double, double>>> groups;
  for (const FitPoint& p : points) {
    if (!(p.y > noise_floor) || !(p.x > 0.0)) {
      ++out.excluded;
      continue;
    }
    groups[p.group].emplace_back(abscissa(model, p.x), std::log(p.y));
  }
  // Within-group centering removes the per-group intercepts.
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  std::map<int, std::pair<double, double>> means;
  int n = 0;
  for (auto it = groups.begin(); it != groups.end();) {
    if (it->second.size() < 2) {
      out.excluded += static_cast<int>(it->second.size());
      it = groups.erase(it);
      continue;
    }
    double mx = 0.0, my = 0.0;
    for (auto [x, y] : it->second) {
      mx += x;
      my += y;
    }
    mx /= static_cast<double>(it->second.size());
    my /= static_cast<double>(it->second.size());
    for (auto [x, y] : it->second) {
      sxx += (x - mx) * (x - mx);
      sxy += (x - mx) * (y - my);
      syy += (y - my) * (y - my);
    }
    means[it->first] = {mx, my};
    n += static_cast<int>(it->second.size());
    ++it;
  }
  out.n_points = n;
  const int dof = n - 1 - static_cast<int>(groups.size());
  if (n < 3 || dof < 1 || !(sxx > 0.0)) return out;

  const double slope = sxy / sxx;
  double ssr = 0.0;
  for (const auto& [g, pts] : groups) {
    const auto [mx, my] = means[g];
    for (auto [x, y] : pts) {
      const double r = (y - my) - slope * (x - mx);
      ssr += r * r;
    }
    out.group_amplitudes.emplace_back(g, std::exp(my - slope * mx));
  }
  out.determined = true;
  out.exponent = -slope;
  out.amplitude = out.group_amplitudes.front().second;
  out.std_err = std::sqrt(ssr / dof / sxx);
  out.r_squared = r_squared(ssr, syy);
  return out;
}

DecayClass classify_decay(const std::vector<double>& distance, const std::vector<double>& value,
                          const DecayOptions& opts) {
  if (distance.size() != value.size()) {
    throw std::invalid_argument("distance and value lists differ in length");
  }
  std::vector<std::pair<double, double>> raw;
  for (std::size_t k = 0; k < distance.size(); ++k) raw.emplace_back(distance[k], std::abs(value[k]));
  std::sort(raw.begin(), raw.end());

  // Geometric mean of neighbours, placed at the midpoint.
  std::vector<double> r, a;
  for (std::size_t k = 0; k + 1 < raw.size(); ++k) {
    if (!(raw[k].second > opts.floor) || !(raw[k + 1].second > opts.floor)) continue;
    r.push_back(0.5 * (raw[k].first + raw[k + 1].first));
    a.push_back(std::sqrt(raw[k].second * raw[k + 1].second));
  }
  const double r_max = r.empty() ? 0.0 : *std::max_element(r.begin(), r.end());
  std::vector<double> log_r, x, log_a;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] < opts.min_distance || r[k] > opts.max_fraction * r_max) continue;
    log_r.push_back(std::log(r[k]));
    x.push_back(r[k]);
    log_a.push_back(std::log(a[k]));
  }
  DecayClass out;
  out.n_points = static_cast<int>(x.size());
  if (x.size() < 4) return out;

  const Line pw = ols(log_r, log_a);
  const Line ex = ols(x, log_a);
  out.r2_power = r_squared(pw.ssr, pw.sst);
  out.r2_exp = r_squared(ex.ssr, ex.sst);

  std::vector<double> rc, ac;
  for (auto [d, c] : raw) {
    if (d < opts.min_distance) continue;
    rc.push_back(d);
    ac.push_back(c);
  }
  if (rc.size() >= 3) {
    const Line lin = ols(rc, ac);
    out.constant = lin.intercept > 3.0 * lin.se_intercept && std::abs(lin.slope) <= 3.0 * lin.se_slope;
  }

  const double miss_pw = 1.0 - out.r2_power;
  const double miss_ex = 1.0 - out.r2_exp;
  if (out.constant) {
    out.cls = Decay::Constant;
  } else if (miss_ex >= opts.ratio * miss_pw) {
    out.cls = Decay::Algebraic;
  } else if (miss_pw >= opts.ratio * miss_ex) {
    out.cls = Decay::Exponential;
  }
  return out;
}

DecayClass classify_decay(const CorrelationSeries& series, const DecayOptions& opts) {
  std::vector<double> dist, val;
  const int row = series.row(series.anchor);
  for (int j = 0; j < static_cast<int>(series.values.size()); ++j) {
    if (series.row(j) != row || j == series.anchor) continue;
    dist.push_back(series.distance(j));
    val.push_back(series.values[j]);
  }
  return classify_decay(dist, val, opts);
}

std::vector<ConjectureRow> conjecture_table(const std::vector<ConjectureInput>& families) {
  std::vector<ConjectureRow> rows;
  for (const ConjectureInput& in : families) {
    ConjectureRow row;
    row.family = in.family;
    row.decay = in.decay.cls;
    row.delta_determined = in.delta_power.determined && in.delta_exp.determined;
    if (row.delta_determined) {
      row.delta_model = in.delta_power.r_squared > in.delta_exp.r_squared ? FitModel::PowerLaw
                                                                          : FitModel::Exponential;
    }
    row.flagged = row.decay == Decay::Undetermined || !row.delta_determined;
    if (!row.flagged) {
      if (row.decay == Decay::Algebraic) {
        row.verdict = row.delta_model == FitModel::PowerLaw ? Verdict::Agree : Verdict::Disagree;
      } else if (row.decay == Decay::Exponential) {
        row.verdict = row.delta_model == FitModel::Exponential ? Verdict::Agree : Verdict::Disagree;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::string_view model_name(FitModel m) {
  return m == FitModel::PowerLaw ? "power" : "exp";
}

FitModel parse_model(std::string_view name) {
  if (name == "power") return FitModel::PowerLaw;
  if (name == "exp") return FitModel::Exponential;
  throw std::invalid_argument("unknown fit model '" + std::string(name) + "'");
}

std::string_view decay_name(Decay d) {
  switch (d) {
    case Decay::Algebraic: return "algebraic";
    case Decay::Exponential: return "exponential";
    case Decay::Constant: return "constant";
    case Decay::Undetermined: return "undetermined";
  }
  return "?";
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Agree: return "agree";
    case Verdict::Disagree: return "disagree";
    case Verdict::NoClaim: return "no-claim";
  }
  return "?";
}

}  // namespace schupp
