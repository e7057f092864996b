// Copyright 2026 The sigtime Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sigtime/relay_rates.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "sigtime/error.hpp"

namespace sigtime {

namespace {

constexpr std::string_view kModule = "relay";

template <typename Fn>
std::pair<double, double> golden_max(Fn&& fn, double lo, double hi, double width) {
  constexpr double kRatio = 0.6180339887498949;
  double c = hi - kRatio * (hi - lo);
  double d = lo + kRatio * (hi - lo);
  double fc = fn(c);
  double fd = fn(d);
  while (hi - lo > width) {
    if (fc < fd) {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kRatio * (hi - lo);
      fd = fn(d);
    } else {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kRatio * (hi - lo);
      fc = fn(c);
    }
  }
  const double x = 0.5 * (lo + hi);
  return {x, fn(x)};
}

// Improves (x, best) along one coordinate inside [x - h, x + h] clipped to
// [0, 1]. Only strict improvements move the point.
template <typename Fn>
void refine_coordinate(Fn&& fn, double& x, double& best, double h) {
  const double lo = std::max(0.0, x - h);
  const double hi = std::min(1.0, x + h);
  const auto [xm, vm] = golden_max(fn, lo, hi, 1e-12);
  for (const auto& [cand, val] : {std::pair{xm, vm}, std::pair{lo, fn(lo)}, std::pair{hi, fn(hi)}}) {
    if (val > best) {
      best = val;
      x = cand;
    }
  }
}

double grid_value(unsigned i, unsigned points) {
  return points <= 1 ? 0.0 : static_cast<double>(i) / (points - 1);
}

struct DfProfile {
  double value;
  double t;
};

// max over t in [0, 1] of min{u + t (a1 - u), v + t (a2 - v)} for fixed (r, beta)
DfProfile df_profile(const DfChannel& ch, double r, double beta) {
  const double p_sd2 = (1.0 - beta) * ch.p_sd;
  const double p_rd = beta * ch.p_rd;
  const double x = ch.cross_term == CrossTerm::sd1 ? ch.p_sd : p_sd2;
  const double a1 = gauss_cap(ch.p_sr);
  const double a2 = gauss_cap(ch.p_sd);
  const double u = gauss_cap((1.0 - r * r) * p_sd2);
  const double v = gauss_cap(p_sd2 + p_rd + 2.0 * r * std::sqrt(x * p_rd));

  DfProfile best{std::min(u, v), 0.0};
  if (const double at_one = std::min(a1, a2); at_one > best.value) best = {at_one, 1.0};
  const double slope = (a1 - u) - (a2 - v);
  if (slope != 0.0) {
    const double t = (v - u) / slope;
    if (t > 0.0 && t < 1.0) {
      const double cross = u + t * (a1 - u);
      if (cross > best.value) best = {cross, t};
    }
  }
  return best;
}

}  // namespace

void ScenarioConfig::check() const {
  auto require = [](bool ok, const char* field) {
    if (!ok) throw DomainError(kModule, std::string("out of range: ") + field);
  };
  require(power > 0.0, "P");
  require(d > 0.0, "d");
  require(a > 1.0, "a");
  require(kappa > 0.0 && kappa < 1.0, "kappa");
  require(alpha > 0.0, "alpha");
  require(bandwidth > 0.0, "B");
  require(ntr > 0.0, "ntr");
  require(bits_per_pulse_pair >= 0.0, "bits_per_pulse_pair");
}

double gauss_cap(double x) {
  if (!(x >= 0.0)) throw DomainError(kModule, "gauss_cap needs a non-negative SNR");
  return 0.5 * std::log2(1.0 + x);
}

LinkBudget link_budget(const ScenarioConfig& config, double zeta, double beta) {
  config.check();
  LinkBudget lb;
  lb.d1 = config.kappa * config.a * config.d;
  lb.d2 = (1.0 - config.kappa) * config.a * config.d;
  lb.d_direct = config.geometry == GeometryMode::direct_d ? config.d : config.a * config.d;
  const double g1 = std::pow(lb.d1, -config.alpha);
  const double g2 = std::pow(lb.d2, -config.alpha);
  const double g3 = std::pow(lb.d_direct, -config.alpha);
  const double p = config.power;
  lb.p_sr = p * g1;
  lb.p_sd1 = p * g3;
  lb.p_sd2 = (1.0 - beta) * p * g3;
  lb.p_rd = beta * p * g2;
  const double b = config.bandwidth;
  lb.c1 = b * std::log2(1.0 + zeta * p * g1);
  lb.c2 = b * std::log2(1.0 + p * g2);
  lb.c3 = b * std::log2(1.0 + (1.0 - zeta) * p * g3);
  return lb;
}

DfChannel df_channel(const ScenarioConfig& config) {
  const LinkBudget lb = link_budget(config, 1.0, 1.0);
  return DfChannel{lb.p_sr, lb.p_sd1, lb.p_rd, config.cross_term};
}

DfResult r_gc(const DfChannel& channel, const OptimizerOptions& options) {
  const unsigned n = std::max(2U, options.df_grid);
  DfResult best{-1.0, 0.0, 0.0, 0.0};
  for (unsigned i = 0; i < n; ++i) {
    const double r = grid_value(i, n);
    for (unsigned j = 0; j < n; ++j) {
      const double beta = grid_value(j, n);
      const DfProfile p = df_profile(channel, r, beta);
      if (p.value > best.rate) best = {p.value, p.t, r, beta};
    }
  }

  const double h = 1.0 / (n - 1);
  double r = best.r;
  double beta = best.beta;
  double value = best.rate;
  for (unsigned sweep = 0; sweep < options.max_sweeps; ++sweep) {
    const double before = value;
    refine_coordinate([&](double x) { return df_profile(channel, x, beta).value; }, r, value, h);
    refine_coordinate([&](double x) { return df_profile(channel, r, x).value; }, beta, value, h);
    if (value - before < 1e-6 * options.tolerance) break;
  }
  const DfProfile final_point = df_profile(channel, r, beta);
  return {final_point.value, final_point.t, r, beta};
}

DfResult r_gc(const ScenarioConfig& config, const OptimizerOptions& options) {
  return r_gc(df_channel(config), options);
}

StChannel st_channel(const ScenarioConfig& config) {
  const LinkBudget lb = link_budget(config, 1.0, 1.0);
  StChannel ch;
  ch.bandwidth = config.bandwidth;
  ch.snr_sr = lb.p_sr;
  ch.snr_rd = lb.p_rd;
  ch.snr_sd = lb.p_sd1;
  ch.time_resolution = config.time_resolution();
  ch.bits_per_pulse_pair = config.bits_per_pulse_pair;
  return ch;
}

double st_rate(double c1, double c2, double c3, double bits_per_pulse_pair,
               double time_resolution) {
  const double sum = c1 + c2;
  if (sum <= 0.0) return 0.0;
  const double two_hop = c1 * c2 / sum;
  const double peak = std::max(c1, c2);
  const double time_coded = two_hop * bits_per_pulse_pair / (peak * time_resolution);
  return two_hop + time_coded + c2 * c3 / sum;
}

double r_st(const StChannel& ch, double zeta) {
  if (!(zeta >= 0.0 && zeta <= 1.0)) throw DomainError(kModule, "zeta must lie in [0, 1]");
  const double c1 = ch.bandwidth * std::log2(1.0 + zeta * ch.snr_sr);
  const double c2 = ch.bandwidth * std::log2(1.0 + ch.snr_rd);
  const double c3 = ch.bandwidth * std::log2(1.0 + (1.0 - zeta) * ch.snr_sd);
  return st_rate(c1, c2, c3, ch.bits_per_pulse_pair, ch.time_resolution);
}

double r_st(const ScenarioConfig& config, double zeta) {
  return r_st(st_channel(config), zeta);
}

StOptimum r_st_opt(const StChannel& channel, const OptimizerOptions& options) {
  const unsigned n = std::max(2U, options.zeta_grid);
  StOptimum best{-1.0, 0.0};
  for (unsigned i = 0; i < n; ++i) {
    const double zeta = grid_value(i, n);
    const double rate = r_st(channel, zeta);
    if (rate > best.rate) best = {rate, zeta};
  }
  refine_coordinate([&](double z) { return r_st(channel, z); }, best.zeta, best.rate,
                    1.0 / (n - 1));
  return best;
}

StOptimum r_st_opt(const ScenarioConfig& config, const OptimizerOptions& options) {
  return r_st_opt(st_channel(config), options);
}

TwoHopFigures two_hop_figures(const ScenarioConfig& config) {
  const LinkBudget lb = link_budget(config, 1.0, 1.0);
  TwoHopFigures f;
  f.c1 = lb.c1;
  f.c2 = lb.c2;
  const double lo = std::min(f.c1, f.c2);
  const double hi = std::max(f.c1, f.c2);
  f.lower = 0.5 * lo;
  f.time_division = (f.c1 + f.c2) > 0.0 ? f.c1 * f.c2 / (f.c1 + f.c2) : 0.0;
  f.upper = std::min(lo, 0.5 * hi);
  return f;
}

double two_hop_bound(const ScenarioConfig& config) { return two_hop_figures(config).upper; }

InfoAmounts info_amounts(const ScenarioConfig& config, double zeta, double period) {
  if (!(period > 0.0)) throw DomainError(kModule, "period must be positive");
  const LinkBudget lb = link_budget(config, zeta, 1.0);
  InfoAmounts out;
  const double sum = lb.c1 + lb.c2;
  if (sum <= 0.0) return out;
  const double two_hop = lb.c1 * lb.c2 / sum;
  out.two_hop = two_hop * period;
  out.time_domain = two_hop * config.bits_per_pulse_pair * period /
                    (std::max(lb.c1, lb.c2) * config.time_resolution());
  out.direct = lb.c2 * lb.c3 * period / sum;
  return out;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double snr_direct_db(const ScenarioConfig& config) {
  return 10.0 * std::log10(link_budget(config, 1.0, 1.0).p_sd1);
}

namespace {

RateReport finish_report(const ScenarioConfig& config, const DfResult& df,
                         const OptimizerOptions& options) {
  RateReport rep;
  rep.snr_direct_db = snr_direct_db(config);
  rep.kappa = config.kappa;
  rep.a = config.a;
  rep.ntr = config.ntr;
  rep.r_gc = df.rate;
  rep.t_star = df.t;
  rep.r_star = df.r;
  rep.beta_star = df.beta;

  const StOptimum st = r_st_opt(config, options);
  const double norm = 2.0 * config.bandwidth;
  rep.r_st_opt = st.rate;
  rep.zeta_star = st.zeta;
  rep.r_st_norm = st.rate / norm;
  rep.u_two_norm = two_hop_bound(config) / norm;
  const LinkBudget at_star = link_budget(config, st.zeta, 1.0);
  const double sum = at_star.c1 + at_star.c2;
  rep.time_division_norm = sum > 0.0 ? at_star.c1 * at_star.c2 / sum / norm : 0.0;
  rep.gamma = rep.r_st_norm / rep.r_gc;
  return rep;
}

}  // namespace

RateReport evaluate(const ScenarioConfig& config, const OptimizerOptions& options) {
  RateReport rep = finish_report(config, r_gc(config, options), options);
  rep.p_db = 10.0 * std::log10(config.power);
  return rep;
}

std::vector<RateReport> sweep(const ScenarioConfig& base, std::span<const double> p_db,
                              std::span<const SweepPoint> points,
                              const OptimizerOptions& options) {
  std::map<std::pair<double, double>, std::vector<DfResult>> df_cache;
  std::vector<RateReport> rows;
  rows.reserve(p_db.size() * points.size());
  for (const SweepPoint& pt : points) {
    ScenarioConfig config = base;
    config.kappa = pt.kappa;
    config.a = pt.a;
    config.ntr = pt.ntr;
    config.check();

    auto [it, fresh] = df_cache.try_emplace({pt.kappa, pt.a});
    if (fresh) {
      it->second.reserve(p_db.size());
      for (double p : p_db) {
        config.power = db_to_linear(p);
        it->second.push_back(r_gc(config, options));
      }
    }
    for (std::size_t i = 0; i < p_db.size(); ++i) {
      config.power = db_to_linear(p_db[i]);
      RateReport rep = finish_report(config, it->second[i], options);
      rep.p_db = p_db[i];
      rows.push_back(rep);
    }
  }
  return rows;
}

}  // namespace sigtime
