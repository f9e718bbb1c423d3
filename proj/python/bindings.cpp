#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "grecip/arrangement.hpp"
#include "grecip/errors.hpp"
#include "grecip/fixtures.hpp"
#include "grecip/golomb.hpp"
#include "grecip/golomb_graph.hpp"
#include "grecip/json_io.hpp"
#include "grecip/mixed_graph.hpp"
#include "grecip/quasipoly.hpp"

namespace py = pybind11;

// mpz_class <-> int, mpq_class <-> fractions.Fraction (ints accepted too).
namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = mpz_class(py::str(src).cast<std::string>());
    return true;
  }
  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    if (PyLong_Check(src.ptr())) {
      value = mpq_class(mpz_class(py::str(src).cast<std::string>()));
      return true;
    }
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator") || PyFloat_Check(src.ptr())) return false;
    mpz_class num(py::str(src.attr("numerator")).cast<std::string>());
    mpz_class den(py::str(src.attr("denominator")).cast<std::string>());
    value = grecip::make_rational(num, den);
    return true;
  }
  static handle cast(const mpq_class& v, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::int_ num = py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_num().get_str().c_str(), nullptr, 10));
    py::int_ den = py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_den().get_str().c_str(), nullptr, 10));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace grecip;

SearchOptions options(std::optional<std::uint64_t> budget, unsigned threads) {
  SearchOptions o;
  if (budget) o.node_budget = *budget;
  o.threads = threads;
  return o;
}

std::vector<std::vector<Rational>> constituents(const Quasipolynomial& q) {
  std::vector<std::vector<Rational>> out;
  for (const auto& c : q.constituents()) out.push_back(c.coefficients());
  return out;
}

py::dict golomb_report(const GolombReciprocityReport& r) {
  py::list rows;
  for (const auto& row : r.rows) {
    py::dict d;
    d["t"] = row.t;
    d["lhs"] = row.lhs;
    d["rhs"] = row.rhs;
    d["ok"] = row.ok;
    rows.append(d);
  }
  py::dict d;
  d["m"] = r.m;
  d["rows"] = rows;
  d["value_at_zero"] = r.value_at_zero;
  d["orientation_count"] = r.orientation_count;
  d["ok"] = r.ok();
  return d;
}

py::dict mixed_report(const MixedReciprocityReport& r) {
  py::dict d;
  d["t"] = r.t;
  d["chromatic_polynomial"] = r.chromatic.coefficients();
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["rhs_dilate_t"] = r.rhs_dilate_t;
  d["ok"] = r.ok;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Golomb ruler counting, the Golomb arrangement and mixed-graph reciprocity";

  // Translators registered later are tried first.
  auto& error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      py::set_error(PyExc_ValueError, e.what());
    } catch (const ParseError& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  constexpr std::uint64_t default_budget = kDefaultNodeBudget;
  m.attr("DEFAULT_NODE_BUDGET") = default_budget;

  // Golomb rulers.
  m.def("is_golomb", [](const std::vector<std::int64_t>& gaps) { return is_golomb(Ruler(gaps)); }, py::arg("gaps"));
  m.def(
      "count_golomb_rulers",
      [](int mm, std::int64_t t, std::optional<std::uint64_t> budget, unsigned threads) {
        return count_golomb_rulers(mm, t, options(budget, threads));
      },
      py::arg("m"), py::arg("t"), py::kw_only(), py::arg("budget") = py::none(), py::arg("threads") = 1u);
  m.def(
      "enumerate_golomb_rulers",
      [](int mm, std::int64_t t, std::optional<std::uint64_t> budget, unsigned threads) {
        std::vector<std::vector<std::int64_t>> out;
        for (const auto& r : enumerate_golomb_rulers(mm, t, options(budget, threads))) out.push_back(r.gaps());
        return out;
      },
      py::arg("m"), py::arg("t"), py::kw_only(), py::arg("budget") = py::none(), py::arg("threads") = 1u);
  m.def(
      "optimal_length",
      [](int mm, std::int64_t ceiling, std::optional<std::uint64_t> budget) {
        return optimal_length(mm, ceiling, options(budget, 1));
      },
      py::arg("m"), py::arg("ceiling") = 10'000, py::kw_only(), py::arg("budget") = py::none());

  // Quasipolynomials.
  py::class_<Quasipolynomial>(m, "Quasipolynomial")
      .def_property_readonly("period", &Quasipolynomial::period)
      .def_property_readonly("degree", &Quasipolynomial::degree)
      .def_property_readonly("constituents", &constituents)
      .def("minimal_period", &Quasipolynomial::minimal_period)
      .def("__call__", [](const Quasipolynomial& q, std::int64_t t) { return q.evaluate(t); }, py::arg("t"))
      .def("to_json", [](const Quasipolynomial& q) { return dump(to_json(q)); })
      .def("__eq__", [](const Quasipolynomial& a, const Quasipolynomial& b) { return a == b; })
      .def("__repr__", [](const Quasipolynomial& q) {
        return "<Quasipolynomial period=" + std::to_string(q.period()) + " degree=" + std::to_string(q.degree()) + ">";
      });
  m.def(
      "golomb_quasipolynomial",
      [](int mm, std::optional<int> period, std::optional<std::uint64_t> budget) {
        return golomb_quasipolynomial(mm, period, options(budget, 1));
      },
      py::arg("m"), py::arg("period") = py::none(), py::kw_only(), py::arg("budget") = py::none());
  m.def(
      "reciprocity_check_golomb",
      [](int mm, std::int64_t t_min, std::int64_t t_max) { return golomb_report(reciprocity_check_golomb(mm, t_min, t_max)); },
      py::arg("m"), py::arg("t_min") = 0, py::arg("t_max") = 8);

  // Arrangement.
  m.def("period_bound", &period_bound, py::arg("m"));
  m.def("iop_vertices", &iop_vertices, py::arg("m"));
  m.def(
      "golomb_hyperplanes",
      [](int mm) {
        std::vector<std::vector<int>> out;
        for (const auto& h : golomb_hyperplanes(mm)) out.push_back(h.normal);
        return out;
      },
      py::arg("m"));

  // Regions.
  m.def(
      "constrained_orientations",
      [](int mm, bool combinatorial, std::optional<std::uint64_t> budget, unsigned threads) {
        OrientationSearchOptions o;
        if (budget) o.node_budget = *budget;
        o.threads = threads;
        if (combinatorial) o.check = RegionCheck::kShiftConditionOnly;
        std::vector<std::vector<std::string>> out;
        for (const auto& x : enumerate_constrained_orientations(mm, o)) out.push_back(x.labels());
        return out;
      },
      py::arg("m"), py::kw_only(), py::arg("combinatorial") = false, py::arg("budget") = py::none(),
      py::arg("threads") = 1u);
  m.def("multiplicity", [](const std::vector<std::int64_t>& gaps) { return multiplicity(Ruler(gaps)); },
        py::arg("gaps"));

  // Mixed graphs.
  py::class_<MixedGraph>(m, "MixedGraph")
      .def(py::init<int, std::vector<MixedGraph::Pair>, std::vector<MixedGraph::Pair>>(), py::arg("n"),
           py::arg("edges") = std::vector<MixedGraph::Pair>{}, py::arg("arcs") = std::vector<MixedGraph::Pair>{})
      .def_static("from_json", [](const std::string& text) { return mixed_graph_from_json(Json::parse(text)); })
      .def_static("triangle", &fixtures::triangle)
      .def_property_readonly("n", &MixedGraph::n)
      .def_property_readonly("edges", &MixedGraph::edges)
      .def_property_readonly("arcs", &MixedGraph::arcs)
      .def("to_json", [](const MixedGraph& g) { return dump(to_json(g)); })
      .def("is_acyclic", &is_acyclic_mixed)
      .def("count_proper_colorings", [](const MixedGraph& g, std::int64_t t) { return count_proper_colorings(g, t); },
           py::arg("t"))
      .def("chromatic_polynomial", [](const MixedGraph& g) { return chromatic_polynomial(g).coefficients(); })
      .def("acyclic_orientations",
           [](const MixedGraph& g) {
             std::vector<std::vector<int>> orders;
             for (const auto& o : enumerate_acyclic_orientations(g)) orders.push_back(topological_order(g, o));
             return orders;
           })
      .def("compatible_orientation_count",
           [](const MixedGraph& g, const std::vector<std::int64_t>& c) { return compatible_orientation_count(g, c); },
           py::arg("coloring"))
      .def("chromatic_number", [](const MixedGraph& g) { return chromatic_number(g); })
      .def("reciprocity", [](const MixedGraph& g, std::int64_t t) { return mixed_report(reciprocity_check_mixed(g, t)); },
           py::arg("t"));
}
