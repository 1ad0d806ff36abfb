#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wcoh/builders.hpp"
#include "wcoh/cli.hpp"
#include "wcoh/weight.hpp"

#include <sstream>

namespace py = pybind11;
using namespace wcoh;

namespace {

py::int_ to_py(const Integer& x) { return py::int_(py::str(x.get_str())); }

Integer from_py(const py::handle& h) {
  if (!py::isinstance<py::int_>(h)) throw py::type_error("matrix entries must be integers");
  return Integer(py::str(h).cast<std::string>());
}

IntMatrix matrix_from_py(const py::sequence& rows, std::optional<std::size_t> cols_if_empty = std::nullopt) {
  std::vector<std::vector<Integer>> data;
  for (const auto& row : rows) {
    std::vector<Integer> r;
    for (const auto& x : row.cast<py::sequence>()) r.push_back(from_py(x));
    data.push_back(std::move(r));
  }
  if (data.empty()) return IntMatrix(0, cols_if_empty.value_or(0));
  return IntMatrix::from_rows(data, data.front().size());
}

py::list matrix_to_py(const IntMatrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(to_py(m(r, c)));
    rows.append(row);
  }
  return rows;
}

py::tuple group_to_py(const FgAbGroup& g) {
  py::list torsion;
  for (const auto& t : g.torsion()) torsion.append(to_py(t));
  return py::make_tuple(g.free_rank(), torsion);
}

SncDatum datum(const std::optional<std::string>& builder, const std::optional<std::string>& json) {
  if (builder.has_value() == json.has_value()) throw py::value_error("give exactly one of builder= or json=");
  return builder ? build(*builder) : from_json_text(*json);
}

py::dict table_to_py(const BigradedTable& t) {
  py::dict out;
  for (const auto& [ab, g] : t.entries()) out[py::make_tuple(ab.first, ab.second)] = group_to_py(g);
  return out;
}

py::dict report_to_py(const CheckReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["passed"] = r.passed;
  d["details"] = r.details;
  return d;
}

}  // namespace

PYBIND11_MODULE(_wcoh, m) {
  m.doc() = "Integral weight cohomology with compact support from SNC compactification data";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def(
      "smith_normal_form",
      [](const py::sequence& rows, std::size_t cols) {
        const auto snf = smith_normal_form(matrix_from_py(rows, cols));
        return py::make_tuple(matrix_to_py(snf.u), matrix_to_py(snf.d), matrix_to_py(snf.v));
      },
      py::arg("matrix"), py::arg("cols") = 0, "Returns (u, d, v) with u * a * v = d.");

  m.def(
      "canonical_form",
      [](std::size_t generators, const py::sequence& relation_columns) {
        // relations given as a list of columns
        return group_to_py(canonical_form({generators, matrix_from_py(relation_columns, generators).transpose()}));
      },
      py::arg("generators"), py::arg("relations") = py::list(), "(free_rank, torsion) of Z^n / <relations>.");

  m.def("example_names", &example_names);
  m.def("builder_json", [](const std::string& name) { return to_json(build(name)); }, py::arg("name"));

  m.def(
      "weight_table",
      [](std::optional<std::string> builder, std::optional<std::string> json, bool rational) {
        const auto t = weight_cohomology_table(datum(builder, json));
        return table_to_py(rational ? t.rationalized() : t);
      },
      py::arg("builder") = py::none(), py::arg("json") = py::none(), py::arg("rational") = false,
      "{(a, b): (free_rank, torsion)} for the nonzero entries.");

  m.def(
      "validate",
      [](std::optional<std::string> builder, std::optional<std::string> json) {
        const auto r = validate(datum(builder, json));
        std::vector<std::string> lines;
        for (const auto& v : r.violations) lines.push_back(v.message);
        return lines;
      },
      py::arg("builder") = py::none(), py::arg("json") = py::none(), "Violation messages; empty when valid.");

  m.def(
      "reduced_cohomology",
      [](const std::vector<std::vector<int>>& facets) {
        std::map<int, py::tuple> out;
        for (const auto& [p, g] : reduced_cohomology(SimplicialComplex::from_facets(facets))) out[p] = group_to_py(g);
        return out;
      },
      py::arg("facets"));

  m.def(
      "contractibility",
      [](std::optional<std::string> builder, std::optional<std::string> json, std::optional<std::vector<std::vector<int>>> facets,
         std::size_t budget) {
        if (facets) return contractibility_report(SimplicialComplex::from_facets(*facets), budget).summary();
        return contractibility_report(nerve(datum(builder, json)), budget).summary();
      },
      py::arg("builder") = py::none(), py::arg("json") = py::none(), py::arg("facets") = py::none(),
      py::arg("budget") = kDefaultSimplifyBudget);

  m.def(
      "check",
      [](const std::string& which, std::optional<std::string> builder, std::optional<std::string> json,
         std::optional<std::map<int, long>> hc) {
        const SncDatum s = datum(builder, json);
        if (which == "prop1") return report_to_py(check_prop1(s));
        if (which == "d2") return report_to_py(d2_check(s));
        if (which == "stability") return report_to_py(a1_stability_check(s));
        if (which == "euler") return report_to_py(euler_check(s));
        if (which == "degeneration") {
          if (!hc) throw py::value_error("degeneration needs hc={degree: betti}");
          return report_to_py(degeneration_check(s, *hc));
        }
        throw py::value_error("unknown check '" + which + "'");
      },
      py::arg("which"), py::arg("builder") = py::none(), py::arg("json") = py::none(), py::arg("hc") = py::none());

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "wcoh");
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "(exit_code, stdout, stderr) of the command line tool.");
}
