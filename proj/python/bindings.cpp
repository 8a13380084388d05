// Python bindings: thin wrappers returning JSON text that the package
// decodes, so the schema matches the command-line tool exactly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "coxsol/conjectures.hpp"
#include "coxsol/errors.hpp"
#include "coxsol/group_spec.hpp"
#include "coxsol/io.hpp"

namespace py = pybind11;
using namespace coxsol;

namespace {

struct PyGroup {
  GroupSpec spec;
  GroupPtr group;
  std::optional<std::uint64_t> seed;
  std::shared_ptr<GroupContext> ctx;

  PyGroup(const std::string& name, std::size_t max_elements, std::optional<std::uint64_t> seed_order)
      : spec(GroupSpec::parse(name)), group(CoxeterGroup::build(spec.matrix(), max_elements)), seed(seed_order) {
    ctx = std::make_shared<GroupContext>(group, seed ? seeded_hyperplane_order(*group, *seed) : std::vector<Element>{});
  }

  Subset subset(const std::vector<int>& gens) const {
    Subset L = 0;
    for (int i : gens) {
      if (i < 1 || i > group->rank()) throw ParseError("generator s" + std::to_string(i) + " is out of range");
      L |= Subset{1} << (i - 1);
    }
    return L;
  }
};

std::string report_json(const PyGroup& g, const ConjectureReport& r) {
  return report_document(r, g.group, g.spec.name()).json.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations in finite Coxeter groups, descent algebras and Orlik-Solomon algebras";
  static py::exception<Error> error(m, "CoxsolError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<PyGroup>(m, "Group")
      .def(py::init<const std::string&, std::size_t, std::optional<std::uint64_t>>(), py::arg("name"),
           py::arg("max_elements") = CoxeterGroup::default_max_elements, py::arg("seed_order") = py::none())
      .def_property_readonly("name", [](const PyGroup& g) { return g.spec.name(); })
      .def_property_readonly("rank", [](const PyGroup& g) { return g.group->rank(); })
      .def_property_readonly("order", [](const PyGroup& g) { return g.group->size(); })
      .def("summary_json", [](const PyGroup& g) { return group_document(g.group, g.spec.name()).json.dump(); })
      .def("descent_json", [](const PyGroup& g) { return descent_document(*g.ctx, g.spec.name()).json.dump(); })
      .def("os_json", [](const PyGroup& g) { return os_document(*g.ctx, g.spec.name()).json.dump(); })
      .def("table_json", [](const PyGroup& g) { return table_document(emit_table(*g.ctx), g.spec.name()).json.dump(); })
      .def("render",
           [](const PyGroup& g, const std::string& what, const std::string& format) {
             const Format f = parse_format(format);
             if (what == "group") return render(group_document(g.group, g.spec.name()), f);
             if (what == "descent") return render(descent_document(*g.ctx, g.spec.name()), f);
             if (what == "os") return render(os_document(*g.ctx, g.spec.name()), f);
             if (what == "table") return render(table_document(emit_table(*g.ctx), g.spec.name()), f);
             throw ParseError("unknown document '" + what + "'");
           },
           py::arg("what"), py::arg("format") = "json")
      .def("verify_a_json", [](const PyGroup& g) { return report_json(g, verify_A(*g.ctx)); })
      .def("verify_b_json",
           [](const PyGroup& g, std::optional<std::vector<int>> L) {
             return report_json(g, L ? verify_B(*g.ctx, g.subset(*L)) : verify_B(*g.ctx));
           },
           py::arg("L") = py::none())
      .def("verify_c_json",
           [](const PyGroup& g, const std::vector<int>& L) { return report_json(g, verify_C(*g.ctx, g.subset(L))); },
           py::arg("L"));
}
