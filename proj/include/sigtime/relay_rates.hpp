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

#pragma once

#include <span>
#include <vector>

namespace sigtime {

// Direct-link distance: `direct_d` uses the base distance d (the relay then
// sits on an ellipse with foci S and D); `paper_formula` uses a * d for the
// direct link as well.
enum class GeometryMode { direct_d, paper_formula };

// Cross term of the decode-and-forward multiple-access bound:
// 2 r sqrt(P_SD1 P_RD) or 2 r sqrt(P_SD2 P_RD).
enum class CrossTerm { sd1, sd2 };

// Three-node Gaussian relay scenario. Noise is normalized (B N0 = 1), so the
// received SNR of a link of length x is P / x^alpha.
struct ScenarioConfig {
  double power = 1.0;  // P, linear
  double d = 10.0;
  double a = 2.0;       // d1 + d2 = a d, a > 1
  double kappa = 0.35;  // d1 = kappa a d
  double alpha = 2.0;
  double bandwidth = 1.0;  // B, Hz
  double ntr = 6.0;        // B * dT
  double bits_per_pulse_pair = 1.9222;
  GeometryMode geometry = GeometryMode::direct_d;
  CrossTerm cross_term = CrossTerm::sd1;

  // Throws DomainError naming the first field out of range.
  void check() const;
  double time_resolution() const { return ntr / bandwidth; }
};

struct OptimizerOptions {
  unsigned df_grid = 101;      // coarse points per axis over (r, beta)
  unsigned zeta_grid = 1001;   // coarse points over zeta
  double tolerance = 1e-8;     // on the rate
  unsigned max_sweeps = 500;   // coordinate passes in the DF refinement
};

struct LinkBudget {
  double d1 = 0.0;
  double d2 = 0.0;
  double d_direct = 0.0;
  // received powers (SNRs); the last two depend on beta
  double p_sr = 0.0;
  double p_sd1 = 0.0;
  double p_sd2 = 0.0;
  double p_rd = 0.0;
  // link capacities in bits/s; c1 and c3 depend on zeta
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

LinkBudget link_budget(const ScenarioConfig& config, double zeta, double beta);

// 0.5 log2(1 + x). Throws DomainError for x < 0.
double gauss_cap(double x);

// Full-power received SNRs of the decode-and-forward model; the relay-slot
// powers are P_SD2 = (1 - beta) p_sd and P_RD = beta p_rd.
struct DfChannel {
  double p_sr = 0.0;
  double p_sd = 0.0;
  double p_rd = 0.0;
  CrossTerm cross_term = CrossTerm::sd1;
};

DfChannel df_channel(const ScenarioConfig& config);

struct DfResult {
  double rate = 0.0;  // bits per channel use
  double t = 0.0;
  double r = 0.0;
  double beta = 0.0;
};

// Decode-and-forward rate
//   max over t, r, beta of min{ t C(P_SR) + (1-t) C((1-r^2) P_SD2),
//                               t C(P_SD1) + (1-t) C(P_SD2 + P_RD + 2r sqrt(X P_RD)) }
// The objective is a minimum of two lines in t, so t is solved exactly; (r, beta)
// go through a coarse grid and then coordinate-wise golden-section passes.
DfResult r_gc(const DfChannel& channel, const OptimizerOptions& options = {});
DfResult r_gc(const ScenarioConfig& config, const OptimizerOptions& options = {});

// Full-power link SNRs of the signal-time model.
struct StChannel {
  double bandwidth = 1.0;
  double snr_sr = 0.0;  // zeta scales this one
  double snr_rd = 0.0;
  double snr_sd = 0.0;  // (1 - zeta) scales this one
  double time_resolution = 1.0;  // dT, s
  double bits_per_pulse_pair = 1.9222;
};

StChannel st_channel(const ScenarioConfig& config);

// Average rate of two-hop + time-domain + direct sub-flows, bits/s:
//   c1 c2/(c1+c2) (1 + A / (max{c1,c2} dT)) + c2 c3/(c1+c2)
// Zero when c1 = c2 = 0.
double st_rate(double c1, double c2, double c3, double bits_per_pulse_pair,
               double time_resolution);

double r_st(const StChannel& channel, double zeta);
double r_st(const ScenarioConfig& config, double zeta);

struct StOptimum {
  double rate = 0.0;  // bits/s
  double zeta = 0.0;
};

// Ties resolve to the smallest zeta.
StOptimum r_st_opt(const StChannel& channel, const OptimizerOptions& options = {});
StOptimum r_st_opt(const ScenarioConfig& config, const OptimizerOptions& options = {});

// Full-power two-hop capacities and the half-duplex flow bounds around them:
// lower = min/2, time_division = c1 c2/(c1+c2), upper = min{max/2, min}.
struct TwoHopFigures {
  double c1 = 0.0;
  double c2 = 0.0;
  double lower = 0.0;
  double time_division = 0.0;
  double upper = 0.0;
};

TwoHopFigures two_hop_figures(const ScenarioConfig& config);
double two_hop_bound(const ScenarioConfig& config);

struct InfoAmounts {
  double two_hop = 0.0;      // I_A1
  double time_domain = 0.0;  // I_A2
  double direct = 0.0;       // I_A3
  double total() const { return two_hop + time_domain + direct; }
};

InfoAmounts info_amounts(const ScenarioConfig& config, double zeta, double period);

struct RateReport {
  double p_db = 0.0;
  double snr_direct_db = 0.0;
  double kappa = 0.0;
  double a = 0.0;
  double ntr = 0.0;
  double r_gc = 0.0;          // bits per channel use
  double r_st_opt = 0.0;      // bits/s
  double r_st_norm = 0.0;     // r_st_opt / 2B
  double u_two_norm = 0.0;    // U_two / 2B
  double time_division_norm = 0.0;  // c1 c2/(c1+c2) at zeta*, / 2B
  double gamma = 0.0;         // r_st_norm / r_gc
  double zeta_star = 0.0;
  double t_star = 0.0;
  double r_star = 0.0;
  double beta_star = 0.0;
};

double db_to_linear(double db);
double snr_direct_db(const ScenarioConfig& config);

RateReport evaluate(const ScenarioConfig& config, const OptimizerOptions& options = {});

struct SweepPoint {
  double kappa = 0.0;
  double a = 0.0;
  double ntr = 0.0;
};

// Rows ordered by point (in the given order), then by power. The
// decode-and-forward optimum does not depend on ntr and is shared between
// points with equal (kappa, a).
std::vector<RateReport> sweep(const ScenarioConfig& base, std::span<const double> p_db,
                              std::span<const SweepPoint> points,
                              const OptimizerOptions& options = {});

}  // namespace sigtime
