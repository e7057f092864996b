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

#include "sigtime/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sigtime/ballot_count.hpp"
#include "sigtime/codebook.hpp"
#include "sigtime/concat_codec.hpp"
#include "sigtime/csv.hpp"
#include "sigtime/error.hpp"

namespace sigtime::cli {

namespace {

// Flag values that parse but violate a module precondition.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_real(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + ": not a number: '" + text + "'");
  }
}

GeometryMode parse_geometry(const std::string& text) {
  if (text == "direct_d") return GeometryMode::direct_d;
  if (text == "paper_formula") return GeometryMode::paper_formula;
  throw UsageError("geometry_mode: expected direct_d or paper_formula, got '" + text + "'");
}

CrossTerm parse_cross_term(const std::string& text) {
  if (text == "sd1") return CrossTerm::sd1;
  if (text == "sd2") return CrossTerm::sd2;
  throw UsageError("cross_term: expected sd1 or sd2, got '" + text + "'");
}

const char* geometry_name(GeometryMode g) {
  return g == GeometryMode::direct_d ? "direct_d" : "paper_formula";
}

const char* cross_term_name(CrossTerm c) { return c == CrossTerm::sd1 ? "sd1" : "sd2"; }

// "lo:hi:step" or a single value. Points are lo + i * step up to hi.
std::vector<double> parse_range(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() == 1) return {parse_real(parts[0], "--p-db")};
  if (parts.size() != 3) throw UsageError("--p-db: expected lo:hi:step, got '" + text + "'");
  const double lo = parse_real(parts[0], "--p-db");
  const double hi = parse_real(parts[1], "--p-db");
  const double step = parse_real(parts[2], "--p-db");
  if (!(step > 0.0) || hi < lo) throw UsageError("--p-db: need step > 0 and hi >= lo");
  std::vector<double> out;
  for (long i = 0;; ++i) {
    const double v = lo + static_cast<double>(i) * step;
    if (v > hi + 1e-9 * step) break;
    out.push_back(v);
  }
  return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_atomic(path, text);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("--config: cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// --L (slots) and --L-pairs (pulse pairs, i.e. half the slot count).
struct ComponentFlags {
  unsigned slots = 0;
  unsigned pairs = 0;

  void attach(CLI::App* app) {
    auto* a = app->add_option("--L", slots, "component length in slots (even)");
    auto* b = app->add_option("--L-pairs", pairs,
                              "component length in pulse pairs (slots = 2 * pairs)");
    a->excludes(b);
    b->excludes(a);
  }

  unsigned resolve() const {
    if (pairs > 0) return 2 * pairs;
    if (slots == 0) throw UsageError("--L: one of --L or --L-pairs is required");
    if (slots % 2 != 0) throw UsageError("--L: component length must be even");
    return slots;
  }
};

void run_count(unsigned n_max, const std::string& csv, std::ostream& out) {
  BallotTable table(n_max);
  CsvTable t({"n", "S_n", "log2_Sn", "bits_per_pulse"});
  for (unsigned n = 1; n <= n_max; ++n) {
    const RateFigure fig = rate_figures(n, table);
    t.add_row({std::to_string(n), to_decimal(table.s(n)), format_real(fig.bits_total),
               format_real(fig.bits_per_pulse)});
  }
  emit(t.str(), csv, out);
}

std::string flow_csv(const FlowTrace& trace) {
  CsvTable t({"slot", "link", "duration_s", "bits", "relay_buffer_bits"});
  t.add_comment("T=" + format_real(trace.period) + " N=" + std::to_string(trace.pairs) +
                " dt1=" + format_real(trace.source_slot) +
                " dt2=" + format_real(trace.relay_slot) +
                " delivered_bits=" + format_real(trace.delivered_bits));
  for (const FlowSlot& s : trace.slots) {
    t.add_row({std::to_string(s.index), s.link == Link::source_relay ? "S-R" : "R-D",
               format_real(s.duration), format_real(s.bits), format_real(s.relay_buffer)});
  }
  return t.str();
}

std::string metrics_csv(unsigned component_len, unsigned len_min, unsigned len_max) {
  CsvTable t({"len", "m", "r", "rate", "rho_R", "rho_M", "stored_words", "stored_bits"});
  t.add_comment("L=" + std::to_string(component_len) + " slots");
  for (unsigned len = len_min; len <= len_max; len += 2) {
    const ConcatScheme scheme = plan(len, component_len);
    const ConcatMetrics m = metrics(scheme);
    t.add_row({std::to_string(len), std::to_string(scheme.blocks()),
               std::to_string(scheme.tail_len()), format_real(m.rate_per_pulse),
               format_real(m.rho_r), format_real(m.rho_m), to_decimal(m.stored_words),
               to_decimal(m.stored_bits)});
  }
  return t.str();
}

// key -> (value, line number), in file order; later duplicates win
std::map<std::string, std::pair<std::string, std::size_t>> read_key_values(std::string_view text) {
  std::map<std::string, std::pair<std::string, std::size_t>> entries;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError("config", "line " + std::to_string(line_no) + ": expected key = value");
    }
    entries[trim(std::string_view(line).substr(0, eq))] = {
        trim(std::string_view(line).substr(eq + 1)), line_no};
  }
  return entries;
}

}  // namespace

ScenarioConfig parse_scenario_config(std::string_view text, ScenarioConfig base) {
  for (const auto& [key, entry] : read_key_values(text)) {
    const auto& [value, line_no] = entry;
    try {
      if (key == "P") base.power = parse_real(value, key);
      else if (key == "d") base.d = parse_real(value, key);
      else if (key == "a") base.a = parse_real(value, key);
      else if (key == "kappa") base.kappa = parse_real(value, key);
      else if (key == "alpha") base.alpha = parse_real(value, key);
      else if (key == "B") base.bandwidth = parse_real(value, key);
      else if (key == "ntr") base.ntr = parse_real(value, key);
      else if (key == "bits_per_pulse_pair") base.bits_per_pulse_pair = parse_real(value, key);
      else if (key == "geometry_mode") base.geometry = parse_geometry(value);
      else if (key == "cross_term") base.cross_term = parse_cross_term(value);
      else throw DomainError("config", "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    } catch (const UsageError& e) {
      throw DomainError("config", "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return base;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signal-time coding: schedule-codeword counting, codebooks and relay rate analysis",
               "sigtime"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string csv_path;
  std::string config_path;
  bool seedless = false;
  app.add_option("--csv", csv_path, "write CSV output to PATH instead of stdout");
  app.add_option("--config", config_path, "scenario config file (key = value)");
  app.add_flag("--seedless", seedless, "reserved; every computation is already deterministic");

  // count
  auto* count = app.add_subcommand("count", "exact counts S_n and bits per pulse for n = 1..N");
  unsigned n_max = 0;
  count->add_option("--n-max", n_max, "largest half-length n")
      ->required()
      ->check(CLI::Range(1U, 100000U));

  // codebook
  auto* codebook = app.add_subcommand("codebook", "optimal fixed-length codebooks");
  codebook->require_subcommand(1);
  auto* cb_build = codebook->add_subcommand("build", "write all words of length 2n, one per line");
  unsigned cb_n = 0;
  unsigned cb_max_n = kDefaultMaterializeMaxN;
  std::string cb_out;
  cb_build->add_option("--n", cb_n, "half-length n")->required();
  cb_build->add_option("--out", cb_out, "output file (default stdout)");
  cb_build->add_option("--max-n", cb_max_n, "materialization cap on n")
      ->capture_default_str()
      ->check(CLI::Range(0U, kPackedMaxN));

  auto* cb_rank = codebook->add_subcommand("rank", "canonical index of a word");
  std::string cb_word;
  cb_rank->add_option("--word", cb_word, "word over {0,1}")->required();

  auto* cb_unrank = codebook->add_subcommand("unrank", "word at a canonical index");
  unsigned cb_unrank_n = 0;
  std::string cb_index;
  cb_unrank->add_option("--n", cb_unrank_n, "half-length n")->required();
  cb_unrank->add_option("--index", cb_index, "decimal index in [0, S_n)")->required();

  auto* cb_sim = codebook->add_subcommand("simulate", "replay a schedule through the relay (CSV)");
  std::string sim_word;
  double sim_c1 = 0.0, sim_c2 = 0.0, sim_t = 0.0;
  cb_sim->add_option("--word", sim_word, "schedule word")->required();
  cb_sim->add_option("--c1", sim_c1, "S-R capacity, bits/s")->required()->check(CLI::PositiveNumber);
  cb_sim->add_option("--c2", sim_c2, "R-D capacity, bits/s")->required()->check(CLI::PositiveNumber);
  cb_sim->add_option("--T", sim_t, "period, s")->required()->check(CLI::PositiveNumber);

  // concat
  auto* concat = app.add_subcommand("concat", "concatenated codebooks");
  concat->require_subcommand(1);
  auto* cc_metrics = concat->add_subcommand("metrics", "rate loss and storage ratio per length (CSV)");
  ComponentFlags metrics_l;
  metrics_l.attach(cc_metrics);
  unsigned len_min = 2, len_max = 0;
  cc_metrics->add_option("--len-max", len_max, "largest code length in slots")->required();
  cc_metrics->add_option("--len-min", len_min, "smallest code length in slots")->capture_default_str();

  auto* cc_encode = concat->add_subcommand("encode", "index -> concatenated word");
  ComponentFlags encode_l;
  encode_l.attach(cc_encode);
  unsigned enc_len = 0;
  std::string enc_index;
  cc_encode->add_option("--len", enc_len, "code length in slots")->required();
  cc_encode->add_option("--index", enc_index, "decimal index")->required();

  auto* cc_decode = concat->add_subcommand("decode", "concatenated word -> index");
  ComponentFlags decode_l;
  decode_l.attach(cc_decode);
  unsigned dec_len = 0;
  std::string dec_word;
  cc_decode->add_option("--len", dec_len, "code length in slots")->required();
  cc_decode->add_option("--word", dec_word, "word over {0,1}")->required();

  // relay
  auto* relay = app.add_subcommand("relay", "Gaussian relay network rates");
  relay->require_subcommand(1);
  auto* rl_sweep = relay->add_subcommand(
      "sweep", "R_GC, R_ST and coding gain over a power grid (CSV). Powers in dB, distances in "
               "metres, bandwidth B in Hz, ntr = B * dT dimensionless; rates normalized by 2B");
  double rl_d = 0.0, rl_alpha = 0.0, rl_b = 0.0, rl_a_bits = 0.0;
  std::vector<double> rl_kappa, rl_a, rl_ntr;
  std::string rl_pdb = "1:50:0.5", rl_geometry, rl_cross;
  OptimizerOptions opt;
  auto* o_d = rl_sweep->add_option("--d", rl_d, "base distance d, m")->check(CLI::PositiveNumber);
  auto* o_kappa = rl_sweep->add_option("--kappa", rl_kappa, "relay position ratios, comma list")
                      ->delimiter(',');
  auto* o_a = rl_sweep->add_option("--a", rl_a, "detour factors > 1, comma list")->delimiter(',');
  auto* o_ntr = rl_sweep->add_option("--ntr", rl_ntr, "normalized time resolutions B*dT, comma list")
                    ->delimiter(',');
  rl_sweep->add_option("--p-db", rl_pdb, "total power range lo:hi:step in dB")->capture_default_str();
  auto* o_alpha = rl_sweep->add_option("--alpha", rl_alpha, "path-loss exponent")->check(CLI::PositiveNumber);
  auto* o_b = rl_sweep->add_option("--B", rl_b, "bandwidth, Hz")->check(CLI::PositiveNumber);
  auto* o_abits = rl_sweep->add_option("--A", rl_a_bits, "time-domain bits per pulse pair")
                      ->check(CLI::NonNegativeNumber);
  auto* o_geo = rl_sweep->add_option("--geometry", rl_geometry, "direct_d | paper_formula");
  auto* o_cross = rl_sweep->add_option("--cross-term", rl_cross, "sd1 | sd2");
  rl_sweep->add_option("--df-grid", opt.df_grid, "coarse grid points per axis for R_GC")
      ->capture_default_str()
      ->check(CLI::Range(2U, 100001U));
  rl_sweep->add_option("--zeta-grid", opt.zeta_grid, "coarse grid points over zeta")
      ->capture_default_str()
      ->check(CLI::Range(2U, 10000001U));

  std::vector<const char*> argv{"sigtime"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*count) {
      run_count(n_max, csv_path, out);
    } else if (*cb_build) {
      const Codebook book = build_codebook(cb_n, cb_max_n);
      std::string text;
      text.reserve(book.size() * (2 * cb_n + 1));
      for (std::size_t i = 0; i < book.size(); ++i) text += book.word(i).str() + "\n";
      emit(text, cb_out, out);
    } else if (*cb_rank) {
      if (!validate(std::string_view(cb_word))) {
        throw InvalidWordError("codebook", "not a valid word: " + cb_word);
      }
      const Codeword w = Codeword::parse(cb_word);
      out << to_decimal(rank(w, PathCountTable(static_cast<unsigned>(w.size() / 2)))) << "\n";
    } else if (*cb_unrank) {
      const BigCount index = parse_decimal(cb_index);
      out << unrank(index, PathCountTable(cb_unrank_n)).str() << "\n";
    } else if (*cb_sim) {
      emit(flow_csv(simulate_flow(Codeword::parse(sim_word), sim_c1, sim_c2, sim_t)), csv_path, out);
    } else if (*cc_metrics) {
      const unsigned l = metrics_l.resolve();
      if (len_min < 2 || len_min % 2 != 0) throw UsageError("--len-min: must be even and >= 2");
      if (len_max < len_min) throw UsageError("--len-max: must be >= --len-min");
      emit(metrics_csv(l, len_min, len_max), csv_path, out);
    } else if (*cc_encode) {
      const ConcatScheme scheme = plan(enc_len, encode_l.resolve());
      out << concat_encode(scheme, parse_decimal(enc_index)).str() << "\n";
    } else if (*cc_decode) {
      const ConcatScheme scheme = plan(dec_len, decode_l.resolve());
      out << to_decimal(concat_decode(scheme, Codeword::parse(dec_word))) << "\n";
    } else if (*rl_sweep) {
      // defaults < config file < flags
      ScenarioConfig base;
      std::vector<double> kappas{0.35, 0.75}, as{1.5, 2.0}, ntrs{6.0, 12.0};
      if (!config_path.empty()) {
        const std::string text = read_file(config_path);
        base = parse_scenario_config(text);
        const auto keys = read_key_values(text);
        if (keys.count("kappa")) kappas = {base.kappa};
        if (keys.count("a")) as = {base.a};
        if (keys.count("ntr")) ntrs = {base.ntr};
      }
      if (o_d->count()) base.d = rl_d;
      if (o_alpha->count()) base.alpha = rl_alpha;
      if (o_b->count()) base.bandwidth = rl_b;
      if (o_abits->count()) base.bits_per_pulse_pair = rl_a_bits;
      if (o_geo->count()) base.geometry = parse_geometry(rl_geometry);
      if (o_cross->count()) base.cross_term = parse_cross_term(rl_cross);
      if (o_kappa->count()) kappas = rl_kappa;
      if (o_a->count()) as = rl_a;
      if (o_ntr->count()) ntrs = rl_ntr;
      for (double k : kappas) {
        if (!(k > 0.0 && k < 1.0)) throw UsageError("--kappa: values must lie in (0, 1)");
      }
      for (double a : as) {
        if (!(a > 1.0)) throw UsageError("--a: values must exceed 1");
      }
      for (double v : ntrs) {
        if (!(v > 0.0)) throw UsageError("--ntr: values must be positive");
      }
      const std::vector<double> p_db = parse_range(rl_pdb);

      std::vector<SweepPoint> points;
      for (double k : kappas)
        for (double a : as)
          for (double v : ntrs) points.push_back({k, a, v});
      const auto rows = sweep(base, p_db, points, opt);

      CsvTable t({"p_db", "snr_db", "kappa", "a", "ntr", "r_gc", "r_st_norm", "u_two_norm", "gamma",
                  "zeta_star", "t_star", "r_star", "beta_star"});
      t.add_comment(std::string("geometry_mode=") + geometry_name(base.geometry) +
                    " cross_term=" + cross_term_name(base.cross_term) + " d=" + format_real(base.d) +
                    " alpha=" + format_real(base.alpha) + " B=" + format_real(base.bandwidth) +
                    " bits_per_pulse_pair=" + format_real(base.bits_per_pulse_pair) +
                    " df_grid=" + std::to_string(opt.df_grid) +
                    " zeta_grid=" + std::to_string(opt.zeta_grid));
      for (const RateReport& r : rows) {
        t.add_row({format_real(r.p_db), format_real(r.snr_direct_db), format_real(r.kappa),
                   format_real(r.a), format_real(r.ntr), format_real(r.r_gc),
                   format_real(r.r_st_norm), format_real(r.u_two_norm), format_real(r.gamma),
                   format_real(r.zeta_star), format_real(r.t_star), format_real(r.r_star),
                   format_real(r.beta_star)});
      }
      emit(t.str(), csv_path, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << e.module() << ": " << e.what() << "\n";
    return kExitModuleError;
  } catch (const std::exception& e) {
    err << "io: " << e.what() << "\n";
    return kExitModuleError;
  }
  (void)seedless;
  return kExitOk;
}

}  // namespace sigtime::cli
