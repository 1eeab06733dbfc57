#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stabdiv/errors.hpp"
#include "stabdiv/groebner.hpp"
#include "stabdiv/job.hpp"
#include "stabdiv/norms.hpp"
#include "stabdiv/stability.hpp"
#include "stabdiv/text.hpp"

namespace py = pybind11;
using namespace stabdiv;

namespace {

MonomialOrder order_of(const std::string& spec, const Ambient& ambient) {
  return spec.empty() ? MonomialOrder::graded_lex(ambient.nvars()) : MonomialOrder::parse(spec, ambient);
}

std::vector<std::string> texts(const std::vector<QPoly>& ps, const MonomialOrder& order) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p, order));
  return out;
}

py::dict divide_py(const std::string& dividend, const std::vector<std::string>& generators,
                   const std::vector<std::string>& variables, const std::string& order_spec,
                   const std::string& strategy) {
  const Ambient ambient(variables);
  const auto order = order_of(order_spec, ambient);
  const auto f = parse_polynomials(generators, ambient);
  const auto res = divide(parse_polynomial(dividend, ambient), f, order, Strategy::parse(strategy));
  py::dict out;
  out["quotients"] = texts(res.quotients, order);
  out["remainder"] = to_string(res.remainder, order);
  out["steps"] = res.trace.size();
  return out;
}

std::vector<std::string> groebner_py(const std::vector<std::string>& generators,
                                     const std::vector<std::string>& variables, const std::string& order_spec) {
  const Ambient ambient(variables);
  const auto order = order_of(order_spec, ambient);
  const auto f = parse_polynomials(generators, ambient);
  return texts(buchberger(std::span<const QPoly>(f), order).generators, order);
}

bool is_groebner_py(const std::vector<std::string>& generators, const std::vector<std::string>& variables,
                    const std::string& order_spec) {
  const Ambient ambient(variables);
  const auto f = parse_polynomials(generators, ambient);
  return is_groebner_basis(std::span<const QPoly>(f), order_of(order_spec, ambient));
}

py::dict rescale_py(const std::vector<std::string>& generators, const std::vector<std::string>& variables,
                    const std::string& order_spec) {
  const Ambient ambient(variables);
  const auto order = order_of(order_spec, ambient);
  const auto f = parse_polynomials(generators, ambient);
  const auto gb = buchberger(std::span<const QPoly>(f), order);
  const auto lam = rescale_lambdas(std::span<const QPoly>(gb.generators), order);
  const auto scaled = rescale_ideal(gb, to_rationals(lam.by_variable));
  py::dict out;
  std::vector<std::string> by_variable;
  for (const auto& v : lam.by_variable) by_variable.push_back(v.get_str());
  out["lambdas"] = by_variable;
  out["basis"] = texts(scaled.generators, order);
  const auto rho = dominance_rho(std::span<const QPoly>(scaled.generators), order);
  out["rho"] = rho ? py::object(py::str(to_string(*rho))) : py::object(py::none());
  return out;
}

py::list scan_py(const std::vector<std::string>& generators, const std::vector<std::string>& variables,
                 int channels, int n_min, int n_max, double tolerance) {
  const Ambient ambient(variables, channels);
  std::vector<CPoly> f;
  for (const auto& p : parse_polynomials(generators, ambient)) f.push_back(to_float(p));
  const auto report = stability_constant_scan(std::span<const CPoly>(f), n_min, n_max, tolerance);
  py::list rows;
  for (const auto& r : report.rows) {
    py::dict row;
    row["n"] = r.degree;
    row["dim_module"] = r.dim_module;
    row["dim_ambient"] = r.dim_ambient;
    row["c_n"] = r.constant ? py::object(py::float_(*r.constant)) : py::object(py::none());
    rows.append(row);
  }
  return rows;
}

int hilbert_py(const std::vector<std::string>& generators, const std::vector<std::string>& variables,
               const std::string& order_spec) {
  const Ambient ambient(variables);
  const auto f = parse_polynomials(generators, ambient);
  return hilbert_dimension(buchberger(std::span<const QPoly>(f), order_of(order_spec, ambient)));
}

std::string h2_py(const std::string& p, const std::vector<std::string>& variables, int channels) {
  return to_string(h2_norm_sq(parse_polynomial(p, Ambient(variables, channels))));
}

std::string l1_py(const std::string& p, const std::vector<std::string>& variables, int channels) {
  return to_string(l1_norm(parse_polynomial(p, Ambient(variables, channels))));
}

py::tuple run_job_py(const std::string& config_json) {
  JobConfig config;
  try {
    config = nlohmann::json::parse(config_json).get<JobConfig>();
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte, 1);
  }
  config.output.clear();
  const auto outcome = run_job(config);
  return py::make_tuple(static_cast<int>(outcome.code), outcome.message, outcome.files);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact polynomial division, Groebner bases and stability diagnostics.";

  auto base = py::register_exception<Error>(m, "StabdivError");
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<ValidationError>(m, "ValidationError", base);
  py::register_exception<AssertionFailure>(m, "AssertionFailure", base);

  m.def("divide", &divide_py, py::arg("dividend"), py::arg("generators"), py::arg("variables"),
        py::arg("order") = "", py::arg("strategy") = "CLO_DEFAULT",
        "Divide with remainder; returns quotients, remainder and the step count.");
  m.def("groebner", &groebner_py, py::arg("generators"), py::arg("variables"), py::arg("order") = "");
  m.def("is_groebner_basis", &is_groebner_py, py::arg("generators"), py::arg("variables"), py::arg("order") = "");
  m.def("rescale", &rescale_py, py::arg("generators"), py::arg("variables"), py::arg("order") = "");
  m.def("stability_scan", &scan_py, py::arg("generators"), py::arg("variables"), py::arg("channels") = 1,
        py::arg("n_min") = 0, py::arg("n_max") = 10, py::arg("tolerance") = 1e-9);
  m.def("hilbert_dimension", &hilbert_py, py::arg("generators"), py::arg("variables"), py::arg("order") = "");
  m.def("h2_norm_sq", &h2_py, py::arg("polynomial"), py::arg("variables"), py::arg("channels") = 1);
  m.def("l1_norm", &l1_py, py::arg("polynomial"), py::arg("variables"), py::arg("channels") = 1);
  m.def("run_job", &run_job_py, py::arg("config_json"),
        "Run a JSON job; returns (exit_code, message, {file name: contents}).");
}
