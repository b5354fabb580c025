// Python bindings. Documents and reports cross the boundary as JSON text; scalars as "p/q" strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "etensor/commands.hpp"
#include "etensor/errors.hpp"

namespace py = pybind11;
using namespace etensor;

namespace {

using Rows = std::vector<std::vector<std::string>>;

Matrix to_matrix(const Rows& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_scalar(rows[r][c]);
  }
  return m;
}

Vector to_vector(const std::vector<std::string>& v) {
  Vector out;
  for (const auto& s : v) out.push_back(parse_scalar(s));
  return out;
}

std::vector<std::string> from_vector(const Vector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(format_scalar(x));
  return out;
}

std::pair<int, std::string> run(const std::string& command, const std::string& document, int degree, int order) {
  const io::AlgebraFile file = io::parse_algebra(io::Json::parse(document));
  const CommandResult r = run_command(command, file, CommandOptions{degree, order});
  return {r.code, io::dump(r.body)};
}

}  // namespace

PYBIND11_MODULE(_etensor, m) {
  m.doc() = "Exact computations with embedding tensors on 3-Lie algebras";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<ShapeError> shape_error(m, "ShapeError", PyExc_ValueError);
  static py::exception<SizeCapError> size_error(m, "SizeCapError", PyExc_MemoryError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const ShapeError& e) {
      py::set_error(shape_error, e.what());
    } catch (const SizeCapError& e) {
      py::set_error(size_error, e.what());
    } catch (const io::Json::exception& e) {
      py::set_error(parse_error, e.what());
    }
  });

  m.attr("PASS") = static_cast<int>(kPass);
  m.attr("FAIL") = static_cast<int>(kFail);
  m.attr("BAD_INPUT") = static_cast<int>(kBadInput);

  m.def("commands", &command_names);
  m.def("run", &run, py::arg("command"), py::arg("document"), py::arg("degree") = 2, py::arg("order") = -1,
        "Run a command on an algebra document (JSON text); returns (exit code, report JSON text).");

  m.def("entry_cap", &entry_cap);
  m.def("set_entry_cap", &set_entry_cap, py::arg("cap"));

  m.def("rank", [](const Rows& rows) { return rank(to_matrix(rows)); }, py::arg("rows"));
  m.def(
      "kernel_basis",
      [](const Rows& rows) {
        std::vector<std::vector<std::string>> out;
        for (const auto& v : kernel_basis(to_matrix(rows))) out.push_back(from_vector(v));
        return out;
      },
      py::arg("rows"));
  m.def(
      "solve",
      [](const Rows& rows, const std::vector<std::string>& b) -> std::optional<std::vector<std::string>> {
        const auto x = solve(to_matrix(rows), to_vector(b));
        if (!x) return std::nullopt;
        return from_vector(*x);
      },
      py::arg("rows"), py::arg("b"));
}
