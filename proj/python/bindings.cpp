// SPDX-License-Identifier: Apache-2.0
//
// femtorelay: link-level simulator for femtocell uplinks with limited backhaul
// Copyright (C) 2026 femtorelay developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "femtorelay/montecarlo.hpp"
#include "femtorelay/sweep_io.hpp"
#include "femtorelay/verification.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace femtorelay;

namespace {

std::vector<RatePair> to_pairs(const std::vector<std::pair<double, double>>& points)
{
    std::vector<RatePair> out;
    out.reserve(points.size());
    for (const auto& [ru, rv] : points)
        out.push_back({ru, rv});
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Uplink rate formulas, rate-region metrics and Monte Carlo sweeps for a macro/femto pair";
    m.attr("__version__") = std::string(kVersion);

    py::enum_<Scheme>(m, "Scheme")
        .value("DF", Scheme::DF)
        .value("QF_EQ", Scheme::QF_EQ)
        .value("QF_WZQ", Scheme::QF_WZQ)
        .value("DFQSI", Scheme::DFQSI);

    py::enum_<DecodingOrder>(m, "DecodingOrder").value("UV", DecodingOrder::UV).value("VU", DecodingOrder::VU);

    py::enum_<SweepVariable>(m, "SweepVariable").value("C_UP", SweepVariable::CUp).value("S_O", SweepVariable::SO);

    py::enum_<MaxMinCase>(m, "MaxMinCase")
        .value("DOMINATED", MaxMinCase::Dominated)
        .value("SAME_SIDE", MaxMinCase::SameSide)
        .value("OPPOSITE_SIDES", MaxMinCase::OppositeSides);

    py::class_<SnrTriplet>(m, "SnrTriplet")
        .def(py::init([](double uf, double vf, double ub) {
                 SnrTriplet s{uf, vf, ub};
                 s.validate();
                 return s;
             }),
             py::arg("gamma_uf"), py::arg("gamma_vf"), py::arg("gamma_ub"))
        .def_readwrite("gamma_uf", &SnrTriplet::gamma_uf)
        .def_readwrite("gamma_vf", &SnrTriplet::gamma_vf)
        .def_readwrite("gamma_ub", &SnrTriplet::gamma_ub)
        .def("__repr__", [](const SnrTriplet& s) {
            std::ostringstream os;
            os << "SnrTriplet(gamma_uf=" << s.gamma_uf << ", gamma_vf=" << s.gamma_vf << ", gamma_ub=" << s.gamma_ub << ")";
            return os.str();
        });

    py::class_<BackhaulCapacities>(m, "BackhaulCapacities")
        .def(py::init([](double up, double down) {
                 BackhaulCapacities c{up, down};
                 c.validate();
                 return c;
             }),
             py::arg("c_up"), py::arg("c_down") = 0.0)
        .def_readwrite("c_up", &BackhaulCapacities::c_up)
        .def_readwrite("c_down", &BackhaulCapacities::c_down);

    py::class_<RatePoint>(m, "RatePoint")
        .def_readonly("r_u", &RatePoint::r_u)
        .def_readonly("r_v", &RatePoint::r_v)
        .def_readonly("scheme", &RatePoint::scheme)
        .def_readonly("order", &RatePoint::order)
        .def("__iter__", [](const RatePoint& p) { return py::iter(py::make_tuple(p.r_u, p.r_v)); })
        .def("__repr__", [](const RatePoint& p) {
            std::ostringstream os;
            os << "RatePoint(" << to_string(p.scheme) << "-" << to_string(p.order) << ", r_u=" << p.r_u << ", r_v=" << p.r_v
               << ")";
            return os.str();
        });

    py::class_<NetworkGeometry>(m, "NetworkGeometry")
        .def(py::init([](double s_o, double r_m, double r_f) {
                 NetworkGeometry g{s_o, r_m, r_f};
                 g.validate();
                 return g;
             }),
             py::arg("s_o") = 150.0, py::arg("r_m") = 200.0, py::arg("r_f") = 20.0)
        .def_readwrite("s_o", &NetworkGeometry::s_o)
        .def_readwrite("r_m", &NetworkGeometry::r_m)
        .def_readwrite("r_f", &NetworkGeometry::r_f);

    py::class_<PropagationParams>(m, "PropagationParams")
        .def(py::init([](double alpha, double shadow, double d_min, double snr_db) {
                 PropagationParams p{alpha, shadow, d_min, snr_db};
                 p.validate();
                 return p;
             }),
             py::arg("alpha") = 3.0, py::arg("shadow_sigma_db") = 8.0, py::arg("d_min") = 1.0, py::arg("rx_snr_db") = 10.0)
        .def_readwrite("alpha", &PropagationParams::alpha)
        .def_readwrite("shadow_sigma_db", &PropagationParams::shadow_sigma_db)
        .def_readwrite("d_min", &PropagationParams::d_min)
        .def_readwrite("rx_snr_db", &PropagationParams::rx_snr_db);

    m.def("capacity", &capacity, py::arg("snr"));
    m.def(
        "snr_triplet",
        [](std::pair<double, double> u, std::pair<double, double> v, const NetworkGeometry& g, const PropagationParams& p) {
            return snr_triplet(Placement{{u.first, u.second}, {v.first, v.second}}, g, p);
        },
        py::arg("u_pos"), py::arg("v_pos"), py::arg("geometry"), py::arg("params"),
        "SNR triplet for a fixed placement without shadowing");
    m.def("df_rates", &df_rates, py::arg("order"), py::arg("snr"), py::arg("c_up"));
    m.def("beta_eq", &beta_eq, py::arg("snr"), py::arg("c_up"));
    m.def("beta_wzq", &beta_wzq, py::arg("snr"), py::arg("c_up"));
    m.def("qf_rates", &qf_rates, py::arg("order"), py::arg("snr"), py::arg("beta"), py::arg("quantizer") = Scheme::QF_WZQ);
    m.def("dfqsi_rates", &dfqsi_rates, py::arg("order"), py::arg("snr"), py::arg("caps"));
    m.def("scheme_rates", &scheme_rates, py::arg("scheme"), py::arg("order"), py::arg("snr"), py::arg("caps"));
    m.def(
        "verify_wzq_identity",
        [](const SnrTriplet& snr, double c_up, double tol) {
            const WzqIdentityCheck c = verify_wzq_identity(snr, c_up, tol);
            return py::make_tuple(c.passed, c.residual, c.mutual_information);
        },
        py::arg("snr"), py::arg("c_up"), py::arg("tolerance") = 1e-9,
        "Returns (passed, residual, mutual_information_bits)");

    m.def(
        "max_sum_rate",
        [](const std::vector<std::pair<double, double>>& points) {
            const OperatingPoint op = max_sum_rate(RateRegion(to_pairs(points)));
            return py::make_tuple(op.value, op.r_u, op.r_v);
        },
        py::arg("points"), "Returns (sum, r_u, r_v) of the best corner");
    m.def(
        "max_min_two",
        [](std::pair<double, double> p1, std::pair<double, double> p2) {
            const MaxMinTwo r = max_min_two({p1.first, p1.second}, {p2.first, p2.second});
            return py::make_tuple(r.value, r.branch, r.weight);
        },
        py::arg("p1"), py::arg("p2"), "Returns (value, branch, weight on p1)");
    m.def(
        "max_min_region",
        [](const std::vector<std::pair<double, double>>& points) {
            const OperatingPoint op = max_min_region(RateRegion(to_pairs(points)));
            return py::make_tuple(op.value, op.first, op.second, op.weight);
        },
        py::arg("points"), "Returns (value, first, second, weight on first)");
    m.def(
        "max_min_oracle",
        [](const std::vector<std::pair<double, double>>& points, double step) {
            return max_min_oracle(RateRegion(to_pairs(points)), step);
        },
        py::arg("points"), py::arg("grid_step"));

    m.def(
        "run_sweep",
        [](SweepVariable variable, std::vector<double> values, std::size_t trials, std::uint64_t seed, double c_up,
           double c_down, std::optional<double> c_down_ratio, const NetworkGeometry& geometry,
           const PropagationParams& params, unsigned workers) {
            ScenarioConfig config;
            config.variable = variable;
            config.values = std::move(values);
            config.trials = trials;
            config.master_seed = seed;
            config.geometry = geometry;
            config.propagation = params;
            config.backhaul = {c_up, c_down, c_down_ratio};
            config.workers = workers;
            SweepSummary summary;
            {
                py::gil_scoped_release release;
                summary = run_sweep(config);
            }
            std::ostringstream os;
            write_sweep_csv(os, summary, config);
            return os.str();
        },
        py::arg("variable"), py::arg("values"), py::arg("trials") = 10000, py::arg("seed") = 1, py::arg("c_up") = 4.0,
        py::arg("c_down") = 1.0, py::arg("c_down_ratio") = py::none(), py::arg("geometry") = NetworkGeometry{},
        py::arg("params") = PropagationParams{}, py::arg("workers") = 1, "Run a sweep and return the CSV text");

    m.def(
        "run_verification",
        [](std::size_t samples, std::uint64_t seed) {
            py::list out;
            for (const PropertyReport& r : run_verification(samples, seed))
                out.append(py::make_tuple(r.name, r.max_residual, r.passed));
            return out;
        },
        py::arg("samples") = 10000, py::arg("seed") = 1, "List of (name, max_residual, passed)");
}
