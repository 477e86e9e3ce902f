#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "linkalg/cli.hpp"

namespace py = pybind11;

namespace {

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release nogil;
    code = linkalg::cli::run(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_linkalg, m) {
  m.doc() = "Bindings for the linkalg command front end";
  m.attr("SCHEMA_VERSION") = linkalg::cli::kSchemaVersion;
  m.def("run", &run, py::arg("args"), "Run one command; returns (exit_code, stdout_json, stderr_summary).");
  m.def(
      "emit_session",
      [](const std::string& text) { return linkalg::cli::emit_session(linkalg::cli::parse_session_text(text)); },
      py::arg("text"), "Canonical form of a session text.");
  m.def(
      "run_session",
      [](const std::string& text) { return linkalg::cli::run_session(linkalg::cli::parse_session_text(text)).dump(); },
      py::arg("text"), "Run a session text and return the JSON results.");
}
