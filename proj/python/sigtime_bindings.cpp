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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "sigtime/ballot_count.hpp"
#include "sigtime/codebook.hpp"
#include "sigtime/concat_codec.hpp"
#include "sigtime/error.hpp"
#include "sigtime/relay_rates.hpp"

namespace py = pybind11;
using namespace sigtime;

namespace {

// Counts cross the boundary as Python ints via their decimal text.
py::int_ to_py(const BigCount& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_decimal(x).c_str(), nullptr, 10));
}

BigCount from_py(const py::int_& x) {
  const std::string text = py::str(x);
  if (!text.empty() && text[0] == '-') throw IndexOutOfRangeError("python", "negative index " + text);
  return parse_decimal(text);
}

BallotTable& shared_table() {
  static BallotTable table;
  return table;
}

py::dict report_dict(const RateReport& r) {
  py::dict d;
  d["p_db"] = r.p_db;
  d["snr_db"] = r.snr_direct_db;
  d["kappa"] = r.kappa;
  d["a"] = r.a;
  d["ntr"] = r.ntr;
  d["r_gc"] = r.r_gc;
  d["r_st_opt"] = r.r_st_opt;
  d["r_st_norm"] = r.r_st_norm;
  d["u_two_norm"] = r.u_two_norm;
  d["time_division_norm"] = r.time_division_norm;
  d["gamma"] = r.gamma;
  d["zeta_star"] = r.zeta_star;
  d["t_star"] = r.t_star;
  d["r_star"] = r.r_star;
  d["beta_star"] = r.beta_star;
  return d;
}

}  // namespace

PYBIND11_MODULE(_sigtime, m) {
  m.doc() = "Signal-time coding: counting, codebooks, concatenation and relay rates.";

  static py::handle error = py::exception<Error>(m, "SigtimeError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const IndexOutOfRangeError& e) {
      PyErr_SetString(PyExc_IndexError, (e.module() + ": " + e.what()).c_str());
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), (e.module() + ": " + e.what()).c_str());
    }
  });

  m.def("s_count", [](unsigned n) { return to_py(s_count(n, shared_table())); }, py::arg("n"));
  m.def("f_count", [](unsigned n, unsigned k) { return to_py(f_count(n, k, shared_table())); },
        py::arg("n"), py::arg("k"));
  m.def("catalan", [](unsigned n) { return to_py(catalan_closed_form(n)); }, py::arg("n"));
  m.def("brute_force_count", [](unsigned n) { return to_py(brute_force_count(n)); }, py::arg("n"));
  m.def("bits_per_pulse", [](unsigned n) { return rate_figures(n, shared_table()).bits_per_pulse; },
        py::arg("n"));

  m.def("validate", [](const std::string& word) { return validate(std::string_view(word)); },
        py::arg("word"));
  m.def(
      "build_codebook",
      [](unsigned n, unsigned max_n) {
        const Codebook book = build_codebook(n, max_n);
        std::vector<std::string> out;
        out.reserve(book.size());
        for (std::size_t i = 0; i < book.size(); ++i) out.push_back(book.word(i).str());
        return out;
      },
      py::arg("n"), py::arg("max_n") = kDefaultMaterializeMaxN);
  m.def(
      "rank",
      [](const std::string& word) {
        const Codeword w = Codeword::parse(word);
        return to_py(rank(w, PathCountTable(static_cast<unsigned>(w.size() / 2))));
      },
      py::arg("word"));
  m.def(
      "unrank",
      [](unsigned n, const py::int_& index) { return unrank(from_py(index), PathCountTable(n)).str(); },
      py::arg("n"), py::arg("index"));
  m.def(
      "simulate_flow",
      [](const std::string& word, double c1, double c2, double period) {
        const FlowTrace t = simulate_flow(Codeword::parse(word), c1, c2, period);
        py::list buffer;
        for (const FlowSlot& s : t.slots) buffer.append(s.relay_buffer);
        py::dict d;
        d["pairs"] = t.pairs;
        d["dt1"] = t.source_slot;
        d["dt2"] = t.relay_slot;
        d["delivered_bits"] = t.delivered_bits;
        d["relay_buffer"] = buffer;
        return d;
      },
      py::arg("word"), py::arg("c1"), py::arg("c2"), py::arg("period"));

  py::class_<ConcatScheme>(m, "ConcatScheme")
      .def(py::init(&plan), py::arg("target_len"), py::arg("component_len"))
      .def_property_readonly("target_len", &ConcatScheme::target_len)
      .def_property_readonly("component_len", &ConcatScheme::component_len)
      .def_property_readonly("blocks", &ConcatScheme::blocks)
      .def_property_readonly("tail_len", &ConcatScheme::tail_len)
      .def_property_readonly("capacity", [](const ConcatScheme& s) { return to_py(s.capacity()); })
      .def("encode", [](const ConcatScheme& s, const py::int_& i) { return concat_encode(s, from_py(i)).str(); })
      .def("decode",
           [](const ConcatScheme& s, const std::string& w) { return to_py(concat_decode(s, Codeword::parse(w))); })
      .def("metrics", [](const ConcatScheme& s) {
        const ConcatMetrics c = metrics(s);
        py::dict d;
        d["rate_per_pulse"] = c.rate_per_pulse;
        d["optimal_rate_per_pulse"] = c.optimal_rate_per_pulse;
        d["rho_r"] = c.rho_r;
        d["rho_m"] = c.rho_m;
        d["stored_words"] = to_py(c.stored_words);
        d["stored_bits"] = to_py(c.stored_bits);
        d["optimal_words"] = to_py(c.optimal_words);
        return d;
      });

  py::enum_<GeometryMode>(m, "GeometryMode")
      .value("direct_d", GeometryMode::direct_d)
      .value("paper_formula", GeometryMode::paper_formula);
  py::enum_<CrossTerm>(m, "CrossTerm").value("sd1", CrossTerm::sd1).value("sd2", CrossTerm::sd2);

  py::class_<ScenarioConfig>(m, "ScenarioConfig")
      .def(py::init<>())
      .def_readwrite("power", &ScenarioConfig::power)
      .def_readwrite("d", &ScenarioConfig::d)
      .def_readwrite("a", &ScenarioConfig::a)
      .def_readwrite("kappa", &ScenarioConfig::kappa)
      .def_readwrite("alpha", &ScenarioConfig::alpha)
      .def_readwrite("bandwidth", &ScenarioConfig::bandwidth)
      .def_readwrite("ntr", &ScenarioConfig::ntr)
      .def_readwrite("bits_per_pulse_pair", &ScenarioConfig::bits_per_pulse_pair)
      .def_readwrite("geometry", &ScenarioConfig::geometry)
      .def_readwrite("cross_term", &ScenarioConfig::cross_term)
      .def("check", &ScenarioConfig::check);

  py::class_<OptimizerOptions>(m, "OptimizerOptions")
      .def(py::init<>())
      .def_readwrite("df_grid", &OptimizerOptions::df_grid)
      .def_readwrite("zeta_grid", &OptimizerOptions::zeta_grid)
      .def_readwrite("tolerance", &OptimizerOptions::tolerance)
      .def_readwrite("max_sweeps", &OptimizerOptions::max_sweeps);

  m.def("db_to_linear", &db_to_linear);
  m.def("gauss_cap", &gauss_cap, py::arg("x"));
  m.def("r_st", py::overload_cast<const ScenarioConfig&, double>(&r_st), py::arg("config"), py::arg("zeta"));
  m.def("two_hop_bound", &two_hop_bound, py::arg("config"));
  m.def(
      "evaluate", [](const ScenarioConfig& c, const OptimizerOptions& o) { return report_dict(evaluate(c, o)); },
      py::arg("config"), py::arg("options") = OptimizerOptions{});
  m.def(
      "sweep",
      [](const ScenarioConfig& base, const std::vector<double>& p_db,
         const std::vector<std::tuple<double, double, double>>& points, const OptimizerOptions& o) {
        std::vector<SweepPoint> pts;
        for (auto [k, a, ntr] : points) pts.push_back({k, a, ntr});
        py::list out;
        for (const RateReport& r : sweep(base, p_db, pts, o)) out.append(report_dict(r));
        return out;
      },
      py::arg("config"), py::arg("p_db"), py::arg("points"), py::arg("options") = OptimizerOptions{});
}
