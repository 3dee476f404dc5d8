// _ekr: the report layer exported as JSON strings; the Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ekr/cli_io.hpp"
#include "ekr/error.hpp"

namespace py = pybind11;

namespace {

ekr::GroupArgs group_args(const std::optional<std::string>& family, const std::map<std::string, std::string>& params) {
  ekr::GroupArgs a;
  a.family = family;
  a.params = params;
  return a;
}

template <class F>
std::string released(F&& f) {
  py::gil_scoped_release nogil;
  return f().dump();
}

}  // namespace

PYBIND11_MODULE(_ekr, m) {
  m.doc() = "Derangement-graph EKR checks (native core)";
  m.attr("__version__") = ekr::kToolVersion;

  py::register_exception<ekr::Error>(m, "EkrError", PyExc_ValueError);

  m.def("claim_ids", &ekr::claim_ids);
  m.def(
      "describe_group",
      [](std::optional<std::string> family, std::map<std::string, std::string> params) {
        return released([&] { return ekr::describe_group(group_args(family, params)); });
      },
      py::arg("family") = py::none(), py::arg("params") = std::map<std::string, std::string>{});
  m.def(
      "profile",
      [](std::optional<std::string> family, std::map<std::string, std::string> params) {
        return released([&] { return ekr::profile_group(group_args(family, params)); });
      },
      py::arg("family") = py::none(), py::arg("params") = std::map<std::string, std::string>{});
  m.def(
      "alpha",
      [](std::optional<std::string> family, std::map<std::string, std::string> params,
         std::vector<std::string> removed) {
        return released([&] { return ekr::alpha_report(group_args(family, params), removed); });
      },
      py::arg("family") = py::none(), py::arg("params") = std::map<std::string, std::string>{},
      py::arg("removed") = std::vector<std::string>{});
  m.def(
      "verify",
      [](const std::string& claim, std::optional<std::string> family, std::map<std::string, std::string> params,
         std::size_t workers, std::string catalog_dir) {
        ekr::ClaimOptions o;
        o.group = group_args(family, params);
        o.workers = workers;
        o.catalog_dir = catalog_dir;
        return released([&] { return ekr::run_claim(claim, o); });
      },
      py::arg("claim"), py::arg("family") = py::none(), py::arg("params") = std::map<std::string, std::string>{},
      py::arg("workers") = 1, py::arg("catalog_dir") = "");
  m.def(
      "claim_params",
      [](const std::string& claim, std::optional<std::string> family, std::map<std::string, std::string> params) {
        ekr::ClaimOptions o;
        o.group = group_args(family, params);
        return ekr::claim_params(claim, o).dump();
      },
      py::arg("claim"), py::arg("family") = py::none(), py::arg("params") = std::map<std::string, std::string>{});
  m.def(
      "scan_robustness",
      [](std::optional<std::string> family, std::map<std::string, std::string> params, std::size_t workers,
         std::size_t budget) {
        return released([&] { return ekr::robustness_report(group_args(family, params), workers, budget); });
      },
      py::arg("family") = py::none(), py::arg("params") = std::map<std::string, std::string>{},
      py::arg("workers") = 1, py::arg("budget") = 1'000'000);
  m.def(
      "catalog_scan",
      [](const std::string& path, std::size_t degree, std::size_t workers) {
        return released([&] { return ekr::catalog_report(path, degree, workers); });
      },
      py::arg("path"), py::arg("degree"), py::arg("workers") = 1);
  m.def("exit_code", [](const std::string& verdict) { return ekr::exit_code(ekr::json::parse(verdict)); });
}
