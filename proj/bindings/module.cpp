#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ohg/altcells.hpp"
#include "ohg/axioms.hpp"
#include "ohg/errors.hpp"
#include "ohg/fixtures.hpp"
#include "ohg/freeterm.hpp"
#include "ohg/johnson.hpp"
#include "ohg/json_io.hpp"
#include "ohg/steiner.hpp"

namespace py = pybind11;
using namespace ohg;

namespace {

py::object to_py(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

json from_py(py::handle obj) {
  if (py::isinstance<py::str>(obj)) return json::parse(obj.cast<std::string>());
  return json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

struct py_hypergraph {
  omega_hypergraph h;

  explicit py_hypergraph(omega_hypergraph g) : h(std::move(g)) {}

  py::object to_json() const { return to_py(hypergraph_to_json(h)); }

  py::object check(const std::string& formalism, std::size_t cap) const {
    if (formalism == "pc") return to_py(check_street(h).to_json());
    if (formalism == "ps") return to_py(check_johnson(h, cap).to_json());
    if (formalism == "adc") return to_py(check_steiner(h).to_json());
    if (formalism == "gpc") {
      axiom_report rep = check_gpc_computable(h);
      for (const auto& a : check_gpc_full(h, cap).axioms)
        if (a.name == "A3" || a.name == "A4") rep.axioms.push_back(a);
      return to_py(rep.to_json());
    }
    json arr = json::array();
    for (auto& [k, rep] : check_formalisms(h, cap)) arr.push_back(rep.to_json());
    return to_py(arr);
  }

  py::object atom_of(const std::string& gen) const {
    return to_py(cell_to_json(h, atom(h, h.id_of(gen))));
  }

  bool cell_ok(py::handle c) const { return is_cell(h, cell_from_json(h, from_py(c))); }

  py::object compose_cells(py::handle a, py::handle b, int i) const {
    pre_cell x = cell_from_json(h, from_py(a));
    pre_cell y = cell_from_json(h, from_py(b));
    int n = std::max(x.dim(), y.dim());
    return to_py(cell_to_json(h, compose(h, identity(x, n), identity(y, n), i)));
  }

  py::object boundary_of(py::handle c, const std::string& side, int k) const {
    pre_cell x = cell_from_json(h, from_py(c));
    sign e = side == "-" ? sign::neg : sign::pos;
    return to_py(cell_to_json(h, boundary(x, e, k < 0 ? x.dim() - 1 : k)));
  }

  py::object decompose_cell(py::handle c) const {
    return to_py(tree_to_json(h, decompose(h, cell_from_json(h, from_py(c)))));
  }

  py::object evaluate_tree(py::handle t) const {
    return to_py(cell_to_json(h, evaluate(h, tree_from_json(h, from_py(t)))));
  }

  py::object translate(py::handle c, const std::string& to) const {
    pre_cell x = cell_from_json(h, from_py(c));
    if (to == "precell") return to_py(cell_to_json(h, x));
    if (to == "maximal") return to_py(fgs_to_json(h, ctoprinc(h, x)));
    if (to == "closed") return to_py(fgs_to_json(h, ctocl(h, x)));
    if (to == "adc") return to_py(adc_cell_to_json(h, c2st(x, h)));
    throw error(errkind::parse_error, "unknown translation target: " + to);
  }

  py::object enumerate(int dim, std::size_t cap) const {
    json arr = json::array();
    for (const auto& c : enumerate_cells(h, dim, cap)) arr.push_back(cell_to_json(h, c));
    return to_py(arr);
  }
};

py::object run_counterexample() {
  fixture f = load_fixture("ce_tf");
  const auto& h = f.graph;
  pre_cell c1 = eval_cell(h, f.terms.at("xi1"));
  pre_cell c2 = eval_cell(h, f.terms.at("xi2"));
  auto w1 = word(h, f.terms.at("xi1"));
  auto w2 = word(h, f.terms.at("xi2"));
  json out{{"cell", cell_to_json(h, c1)},
           {"equal_cells", c1 == c2},
           {"equal_words", w1 == w2},
           {"word_xi1", names_of(h, w1)},
           {"word_xi2", names_of(h, w2)},
           {"free", !(c1 == c2 && w1 != w2)}};
  return to_py(out);
}

}  // namespace

PYBIND11_MODULE(ohgpy, m) {
  m.doc() = "pasting diagrams in strict omega-categories";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const error& e) {
      PyErr_SetString(PyExc_ValueError, (e.kind() + ": " + e.what()).c_str());
    }
  });

  py::class_<py_hypergraph>(m, "Hypergraph")
      .def(py::init([](py::handle data) {
             return py_hypergraph(hypergraph_from_json(from_py(data)));
           }),
           py::arg("data"))
      .def_property_readonly("name", [](const py_hypergraph& g) { return g.h.name(); })
      .def_property_readonly("top_dim", [](const py_hypergraph& g) { return g.h.top_dim(); })
      .def("generators",
           [](const py_hypergraph& g, int dim) { return names_of(g.h, g.h.generators(dim)); })
      .def("to_json", &py_hypergraph::to_json)
      .def("check", &py_hypergraph::check, py::arg("formalism") = "all",
           py::arg("cap") = std::size_t{100000})
      .def("atom", &py_hypergraph::atom_of, py::arg("generator"))
      .def("is_cell", &py_hypergraph::cell_ok, py::arg("cell"))
      .def("compose", &py_hypergraph::compose_cells, py::arg("a"), py::arg("b"), py::arg("dim"))
      .def("boundary", &py_hypergraph::boundary_of, py::arg("cell"), py::arg("side") = "-",
           py::arg("k") = -1)
      .def("decompose", &py_hypergraph::decompose_cell, py::arg("cell"))
      .def("evaluate", &py_hypergraph::evaluate_tree, py::arg("tree"))
      .def("translate", &py_hypergraph::translate, py::arg("cell"), py::arg("to"))
      .def("enumerate_cells", &py_hypergraph::enumerate, py::arg("dim"),
           py::arg("cap") = std::size_t{100000});

  m.def("fixtures", [] { return fixture_names(); });
  m.def(
      "load_fixture",
      [](const std::string& name) { return py_hypergraph(load_fixture(name).graph); },
      py::arg("name"));
  m.def("counterexample", &run_counterexample,
        "reproduce the freeness counter-example: equal cells, different words");
}
