#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uavbs/config.hpp"
#include "uavbs/error.hpp"
#include "uavbs/specfun.hpp"
#include "uavbs/sweeps.hpp"

namespace py = pybind11;
using namespace uavbs;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Outage, energy-efficiency and Monte-Carlo routines for UAV-assisted backscatter";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<DegenerateGeometry>(m, "DegenerateGeometry", base.ptr());
  auto numerical = py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
  py::register_exception<QuadratureError>(m, "QuadratureError", numerical.ptr());
  py::register_exception<InfeasibleBudget>(m, "InfeasibleBudget", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

  py::class_<SystemParams>(m, "SystemParams")
      .def(py::init<>())
      .def_readwrite("M", &SystemParams::M)
      .def_readwrite("P_v", &SystemParams::P_v)
      .def_readwrite("P_c", &SystemParams::P_c)
      .def_readwrite("P_f", &SystemParams::P_f)
      .def_readwrite("eta_r", &SystemParams::eta_r)
      .def_readwrite("eta_c", &SystemParams::eta_c)
      .def_readwrite("T_b", &SystemParams::T_b)
      .def_readwrite("T_u", &SystemParams::T_u)
      .def_readwrite("sigma2_um", &SystemParams::sigma2_um)
      .def_readwrite("sigma2_v", &SystemParams::sigma2_v)
      .def_readwrite("sigma2_b", &SystemParams::sigma2_b)
      .def_readwrite("R_m", &SystemParams::R_m)
      .def_readwrite("v", &SystemParams::v)
      .def_readwrite("E_total", &SystemParams::E_total)
      .def("validate", &SystemParams::validate);

  py::class_<ChannelParams>(m, "ChannelParams")
      .def(py::init<>())
      .def_readwrite("c", &ChannelParams::c)
      .def_readwrite("q", &ChannelParams::q)
      .def_readwrite("beta0", &ChannelParams::beta0)
      .def_readwrite("alpha", &ChannelParams::alpha)
      .def_readwrite("k_los", &ChannelParams::k_los)
      .def_readwrite("k_nlos", &ChannelParams::k_nlos)
      .def_readwrite("eta_nlos", &ChannelParams::eta_nlos)
      .def("validate", &ChannelParams::validate);

  py::class_<Scenario>(m, "Scenario")
      .def(py::init<>())
      .def_readwrite("tag_x", &Scenario::tag_x)
      .def_readwrite("x1", &Scenario::x1)
      .def_readwrite("x2", &Scenario::x2)
      .def_readwrite("x_b", &Scenario::x_b)
      .def_readwrite("h", &Scenario::h)
      .def_readwrite("slots", &Scenario::slots)
      .def("validate", &Scenario::validate)
      .def("slot_of", &Scenario::slot_of, py::arg("tag"));

  py::class_<LinkStats>(m, "LinkStats")
      .def_readonly("distance", &LinkStats::distance)
      .def_readonly("theta_deg", &LinkStats::theta_deg)
      .def_readonly("p_los", &LinkStats::p_los)
      .def_readonly("omega_los", &LinkStats::omega_los)
      .def_readonly("omega_nlos", &LinkStats::omega_nlos);

  py::enum_<CorrelationMode>(m, "CorrelationMode")
      .value("paper_faithful", CorrelationMode::paper_faithful)
      .value("physical", CorrelationMode::physical);

  py::class_<McConfig>(m, "McConfig")
      .def(py::init<>())
      .def_readwrite("trials", &McConfig::trials)
      .def_readwrite("seed", &McConfig::seed)
      .def_readwrite("mode", &McConfig::mode);

  py::class_<McEstimate>(m, "McEstimate")
      .def_readonly("value", &McEstimate::value)
      .def_readonly("half_width_95", &McEstimate::half_width_95)
      .def_readonly("trials", &McEstimate::trials);

  py::class_<OptimizeOptions>(m, "OptimizeOptions")
      .def(py::init<>())
      .def_readwrite("tol", &OptimizeOptions::tol)
      .def_readwrite("grid_points", &OptimizeOptions::grid_points);

  py::class_<TagOutage>(m, "TagOutage")
      .def_readonly("slot", &TagOutage::slot)
      .def_readonly("energy", &TagOutage::energy)
      .def_readonly("backscatter", &TagOutage::backscatter)
      .def_readonly("uplink", &TagOutage::uplink)
      .def_readonly("total", &TagOutage::total);

  py::class_<OutageReport>(m, "OutageReport")
      .def_readonly("per_tag", &OutageReport::per_tag)
      .def_readonly("system_avg", &OutageReport::system_avg)
      .def_readonly("energy_outage", &OutageReport::energy_outage)
      .def_readonly("gamma_th_tags", &OutageReport::gamma_th_tags)
      .def_readonly("gamma_th_uplink", &OutageReport::gamma_th_uplink);

  py::class_<FeasibleRegion>(m, "FeasibleRegion")
      .def_readonly("lo", &FeasibleRegion::lo)
      .def_readonly("hi", &FeasibleRegion::hi);

  py::class_<OptResult>(m, "OptResult")
      .def_readonly("x1_star", &OptResult::x1_star)
      .def_readonly("eta_en_star", &OptResult::eta_en_star)
      .def_readonly("feasible_lo", &OptResult::feasible_lo)
      .def_readonly("feasible_hi", &OptResult::feasible_hi)
      .def_readonly("iterations", &OptResult::iterations)
      .def_readonly("trace", &OptResult::trace);

  py::class_<RunConfig>(m, "RunConfig")
      .def_readwrite("system", &RunConfig::system)
      .def_readwrite("channel", &RunConfig::channel)
      .def_readwrite("scenario", &RunConfig::scenario)
      .def_readwrite("mc", &RunConfig::mc)
      .def_readwrite("optimizer", &RunConfig::optimizer)
      .def("to_text", [](const RunConfig& c) { return to_config_text(c); });

  m.def("parse_config", &parse_config, py::arg("text"), py::arg("source") = "<config>");
  m.def("load_config", &load_config, py::arg("path"));

  m.def("reg_lower_inc_gamma", &reg_lower_inc_gamma, py::arg("shape"), py::arg("x"));
  m.def("make_link_stats", &make_link_stats, py::arg("distance"), py::arg("h"), py::arg("ch"));
  m.def("mixture_gain_cdf", &mixture_gain_cdf, py::arg("link"), py::arg("ch"), py::arg("x"));

  m.def("energy_outage", &energy_outage, py::arg("slot"), py::arg("link"), py::arg("params"),
        py::arg("ch"));
  m.def("snr_cdf_uplink", &snr_cdf_uplink, py::arg("x"), py::arg("link_vb"), py::arg("params"),
        py::arg("ch"));
  m.def("snr_cdf_backscatter", &snr_cdf_backscatter, py::arg("x"), py::arg("link_vu"),
        py::arg("params"), py::arg("ch"));
  m.def("tag_outage_terms", &tag_outage_terms, py::arg("tag"), py::arg("scenario"),
        py::arg("params"), py::arg("ch"));
  m.def("system_outage", &system_outage, py::arg("scenario"), py::arg("params"), py::arg("ch"));

  m.def("mc_tag_outage", &mc_tag_outage, py::arg("tag"), py::arg("scenario"), py::arg("params"),
        py::arg("ch"), py::arg("cfg"), py::call_guard<py::gil_scoped_release>());
  m.def("mc_system_outage", &mc_system_outage, py::arg("scenario"), py::arg("params"),
        py::arg("ch"), py::arg("cfg"), py::call_guard<py::gil_scoped_release>());

  m.def("mission_energy", &mission_energy, py::arg("x1"), py::arg("scenario"), py::arg("params"));
  m.def("energy_efficiency", &energy_efficiency, py::arg("x1"), py::arg("scenario"),
        py::arg("params"), py::arg("ch"));
  m.def("feasible_region", &feasible_region, py::arg("scenario"), py::arg("params"));
  m.def("optimize_location", &optimize_location, py::arg("scenario"), py::arg("params"),
        py::arg("ch"), py::arg("opts") = OptimizeOptions{},
        py::call_guard<py::gil_scoped_release>());

  m.def(
      "mc_validate",
      [](const RunConfig& c, unsigned threads) {
        const ValidationReport r = mc_validate(c, threads);
        return py::make_tuple(r.all_passed(), format_validation(r));
      },
      py::arg("config"), py::arg("threads") = 0u,
      "Returns (all_passed, report_text).");
}
