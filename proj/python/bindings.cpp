#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "binform/cli.hpp"
#include "binform/dynamics.hpp"
#include "binform/expr.hpp"
#include "binform/serialize.hpp"

namespace py = pybind11;
using namespace binform;

namespace {

// Domain errors surface as ValueError carrying the error JSON.
template <typename F>
auto guarded(F&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw py::value_error(to_json(e).dump());
  }
}

std::string command_json(const std::string& command, const std::string& text,
                         const std::map<std::string, std::string>& options) {
  CommandResult r = run({command, text, options});
  if (r.exit_code != 0) throw py::value_error(r.err);
  return r.out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Real binary forms: factorization, symmetry groups, Hamiltonian fields";

  m.def(
      "run",
      [](const std::string& command, const std::string& text, const std::map<std::string, std::string>& options) {
        CommandResult r = run({command, text, options});
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("command"), py::arg("polynomial"), py::arg("options") = std::map<std::string, std::string>{},
      "Run a CLI command; returns (exit_code, stdout, stderr).");

  m.def("command_json", &command_json, py::arg("command"), py::arg("polynomial"),
        py::arg("options") = std::map<std::string, std::string>{});

  m.def(
      "parse",
      [](const std::string& text) {
        return guarded([&] {
          std::map<std::pair<int, int>, std::string> terms;
          const BivariatePoly p = parse_polynomial(text);
          for (const auto& [mono, c] : p.terms()) terms[mono] = to_string(c);
          return terms;
        });
      },
      py::arg("text"), "Sparse coefficient map {(i, j): 'p/q'} of x^i y^j.");

  m.def(
      "canonical",
      [](const std::string& text) { return guarded([&] { return to_text(to_homogeneous(parse_polynomial(text))); }); },
      py::arg("text"));

  m.def(
      "mat_exp",
      [](std::array<double, 4> a, double t) {
        Mat2d e = mat_exp(Mat2d{a[0], a[1], a[2], a[3]}, t);
        return std::array<double, 4>{e.a, e.b, e.c, e.d};
      },
      py::arg("a"), py::arg("t"), "exp(A t) for A = [a00, a01, a10, a11], row-major.");

  m.def(
      "integrate_flow",
      [](const std::string& P, const std::string& Q, std::array<double, 2> z0, double T) {
        return guarded([&] {
          PlanarPolyField field = make_field(parse_polynomial(P), parse_polynomial(Q));
          Trajectory tr = integrate_flow(field, {z0[0], z0[1]}, T);
          return to_json(tr).dump();
        });
      },
      py::arg("P"), py::arg("Q"), py::arg("z0"), py::arg("T"));
}
