#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twistlink/bracket.hpp"
#include "twistlink/faces.hpp"
#include "twistlink/group.hpp"
#include "twistlink/moves.hpp"

namespace py = pybind11;
using namespace twistlink;

namespace {

py::int_ to_py(const Integer& c) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(c.str().c_str(), nullptr, 10));
}

/// [(a exponent, M exponent, coefficient), ...]
py::list terms(const LaurentBipoly& p) {
  py::list out;
  for (const auto& [k, c] : p.terms()) out.append(py::make_tuple(k.first, k.second, to_py(c)));
  return out;
}

std::set<MoveTag> tag_set(const std::optional<std::vector<std::string>>& tags) {
  std::set<MoveTag> out;
  if (tags)
    for (const auto& t : *tags) out.insert(parse_move_tag(t));
  return out;
}

std::vector<std::string> site_strings(const std::vector<MoveSite>& sites) {
  std::vector<std::string> out;
  for (const auto& s : sites) out.push_back(s.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(twistlink, m) {
  m.doc() = "Twisted link diagrams: invariants, groups and extended Reidemeister moves.";

  py::register_exception<TldError>(m, "TldError", PyExc_ValueError);
  py::register_exception<StaleSite>(m, "StaleSite", PyExc_ValueError);
  py::register_exception<SearchExhausted>(m, "SearchExhausted", PyExc_RuntimeError);

  py::class_<GroupPresentation>(m, "Presentation")
      .def_readonly("generators", &GroupPresentation::generators)
      .def_readonly("names", &GroupPresentation::names)
      .def_readonly("relators", &GroupPresentation::relators)
      .def_readonly("budget_exhausted", &GroupPresentation::budget_exhausted)
      .def("simplify", [](const GroupPresentation& p, int budget) { return tietze_simplify(p, budget); },
           py::arg("budget") = 10000)
      .def("abelianization",
           [](const GroupPresentation& p) {
             py::list out;
             for (const auto& f : abelianization(p)) out.append(to_py(f));
             return out;
           })
      .def("count_homs",
           [](const GroupPresentation& p, int degree, int max_generators) {
             return count_homs(p, degree, HomOptions{max_generators});
           },
           py::arg("degree"), py::arg("max_generators") = 6)
      .def("__str__", &GroupPresentation::to_string);

  py::class_<PlanarDiagram>(m, "Diagram")
      .def_static("parse", [](const std::string& text) { return parse_tld(text); })
      .def("to_tld", [](const PlanarDiagram& d) { return serialize_tld(d); })
      .def("validate",
           [](const PlanarDiagram& d) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& v : validate(d).violations) out.emplace_back(v.code, v.message);
             return out;
           })
      .def_property_readonly("classical", [](const PlanarDiagram& d) { return d.classical.size(); })
      .def_property_readonly("virtual", [](const PlanarDiagram& d) { return d.virtuals.size(); })
      .def("writhe", [](const PlanarDiagram& d) { return writhe(project_abstract(d)); })
      .def("components", [](const PlanarDiagram& d) { return link_components(project_abstract(d)); })
      .def("bracket", [](const PlanarDiagram& d) { return terms(bracket(project_abstract(d))); })
      .def("twisted_jones", [](const PlanarDiagram& d) { return terms(twisted_jones(project_abstract(d))); })
      .def("jones",
           [](const PlanarDiagram& d) -> py::object {
             auto j = jones(project_abstract(d));
             return j ? py::object(terms(*j)) : py::none();
           })
      .def("carrier",
           [](const PlanarDiagram& d) {
             auto c = carrier(project_abstract(d));
             py::list genus, orientable;
             for (const auto& x : c.components) {
               genus.append(x.euler_genus);
               orientable.append(x.orientable);
             }
             py::dict out;
             out["euler_genus"] = genus;
             out["orientable"] = orientable;
             out["total_euler_genus"] = c.total_euler_genus;
             return out;
           })
      .def("two_colorable", [](const PlanarDiagram& d) { return two_colorable(project_abstract(d)); })
      .def("group",
           [](const PlanarDiagram& d, const std::string& level) {
             auto a = project_abstract(d);
             if (level == "twisted") return twisted_group(a);
             if (level == "upper") return virtual_group(a, Level::upper);
             if (level == "lower") return virtual_group(a, Level::lower);
             throw py::value_error("level must be 'twisted', 'upper' or 'lower'");
           },
           py::arg("level") = "twisted")
      .def("moves",
           [](const PlanarDiagram& d, std::optional<std::vector<std::string>> tags) {
             return site_strings(find_moves(d, tag_set(tags)));
           },
           py::arg("tags") = py::none())
      .def("apply", [](const PlanarDiagram& d, const std::string& site) { return apply_move(d, MoveSite::parse(site)); })
      .def("walk",
           [](const PlanarDiagram& d, std::uint64_t seed, int steps, int max_classical, int max_virtual,
              int max_bars) {
             std::vector<MoveSite> trace;
             auto out = random_walk(d, seed, steps, WalkCaps{max_classical, max_virtual, max_bars}, &trace);
             return std::make_pair(out, site_strings(trace));
           },
           py::arg("seed"), py::arg("steps"), py::arg("max_classical") = 8, py::arg("max_virtual") = 16,
           py::arg("max_bars") = 12)
      .def("realize", [](const PlanarDiagram& d) { return realize(project_abstract(d)); })
      .def("canonical_code", [](const PlanarDiagram& d) { return canonical_code(d); })
      .def("abstract_code", [](const PlanarDiagram& d) { return canonical_code(project_abstract(d)); })
      .def("__eq__", [](const PlanarDiagram& a, const PlanarDiagram& b) { return a == b; })
      .def("__repr__", [](const PlanarDiagram& d) { return "Diagram(" + serialize_tld(d) + ")"; });

  m.def(
      "equiv",
      [](const PlanarDiagram& a, const PlanarDiagram& b, int depth) -> py::object {
        SearchOptions opts;
        opts.depth = depth;
        auto path = equiv_search(a, b, opts);
        return path ? py::object(py::cast(site_strings(*path))) : py::none();
      },
      py::arg("a"), py::arg("b"), py::arg("depth") = 6);
}
