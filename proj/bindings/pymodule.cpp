#include "fgc/associahedron.hpp"
#include "fgc/cyclic.hpp"
#include "fgc/fatgraph.hpp"
#include "fgc/graph_io.hpp"
#include "fgc/quadrature.hpp"
#include "fgc/random_gen.hpp"
#include "fgc/verify.hpp"
#include "fgc/witten.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fgc;

namespace {

// exact rationals cross the boundary as reduced "p/q" strings; Python's
// fractions.Fraction parses them directly
std::string frac(const Rational& r) { return to_fraction(r); }

py::dict report_dict(const Report& r) {
  py::dict d;
  d["name"] = r.name;
  d["exact"] = frac(r.exact);
  d["closed_form"] = frac(r.closed_form);
  d["match"] = r.match;
  d["counts"] = r.counts;
  py::dict stats;
  for (const auto& [k, v] : r.stats) stats[py::str(k)] = frac(v);
  d["stats"] = stats;
  d["failures"] = r.failures;
  return d;
}

py::dict suite_dict(const SuiteResult& s) {
  py::dict d;
  d["name"] = s.name;
  py::list checks;
  for (const auto& c : s.checks) {
    py::dict cd;
    cd["name"] = c.name;
    cd["expected"] = c.expected;
    cd["actual"] = c.actual;
    cd["pass"] = c.pass;
    checks.append(cd);
  }
  d["checks"] = checks;
  d["counts"] = s.counts;
  d["seed"] = s.seed;
  d["pass"] = s.pass();
  return d;
}

py::dict quad_dict(const QuadratureResult& q) {
  py::dict d;
  d["estimate"] = q.estimate;
  d["error_bound"] = q.error_bound;
  d["size"] = q.size;
  d["seed"] = q.seed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_fgc, m) {
  m.doc() = "exact cocycles on cyclic sets and fat graphs, with their closed-form constants";

  py::class_<OrderedSet>(m, "OrderedSet")
      .def_static("linear", &OrderedSet::linear)
      .def_static("cyclic", &OrderedSet::cyclic)
      .def_property_readonly("elements", &OrderedSet::elements)
      .def_property_readonly("is_cyclic", &OrderedSet::is_cyclic)
      .def("position", &OrderedSet::position)
      .def("as_cyclic", &OrderedSet::as_cyclic)
      .def("__len__", &OrderedSet::size)
      .def("__eq__", [](const OrderedSet& a, const OrderedSet& b) { return a == b; });

  py::class_<OrderedMono>(m, "OrderedMono")
      .def(py::init<OrderedSet, OrderedSet, std::map<Label, Label>>())
      .def_static("identity", &OrderedMono::identity)
      .def_static("inclusion", &OrderedMono::inclusion)
      .def("apply", &OrderedMono::apply)
      .def("then", &OrderedMono::then)
      .def_property_readonly("source", &OrderedMono::source)
      .def_property_readonly("target", &OrderedMono::target);

  m.def("degree", [](const OrderedMono& f) { return frac(degree(f)); });
  m.def("is_morphism", &is_morphism);
  m.def("tuple_sign", [](const std::vector<Label>& t, const OrderedSet& ref) {
    return tuple_sign(t, ref);
  });

  py::class_<ZSimplex>(m, "ZSimplex")
      .def(py::init<OrderedSet>())
      .def(py::init<std::vector<OrderedMono>>())
      .def_property_readonly("dimension", &ZSimplex::dimension)
      .def("object", &ZSimplex::object)
      .def("face", &ZSimplex::face)
      .def("as_cyclic", &ZSimplex::as_cyclic);

  m.def("c_z", [](const ZSimplex& s, unsigned k) { return frac(c_z(s, k)); });
  m.def("s_k", [](const ZSimplex& s, unsigned k) { return frac(s_k(s, k)); });
  m.def("c_z_plus", [](const ZSimplex& s, unsigned k) { return frac(c_z_plus(s, k)); });

  py::class_<FatGraph>(m, "FatGraph")
      .def(py::init<std::map<int, std::vector<int>>, std::map<int, int>>())
      .def_property_readonly("stars", &FatGraph::stars)
      .def_property_readonly("vertices", &FatGraph::vertices)
      .def_property_readonly("edges", &FatGraph::edges)
      .def("valence", &FatGraph::valence);

  m.def("validate", &validate);
  m.def("faces", &faces);
  m.def("topology", [](const FatGraph& g) {
    Topology t = topology(g);
    py::dict d;
    d["euler_char"] = t.euler_char;
    d["genus"] = t.genus;
    d["punctures"] = t.punctures;
    d["codimension"] = t.codimension;
    return d;
  });
  m.def("parse_graph", &parse_graph);
  m.def("read_graph", &read_graph);
  m.def("graph_to_json", &graph_to_json);
  m.def("c_fat_0", [](const FatGraph& g) { return frac(c_fat(FatSimplex(g), 0)); });

  m.def("enumerate_chord_sets", [](int n) { return (long long)enumerate_chord_sets(n).size(); });
  m.def("maximal_chain_count", [](int n) {
    long long c = 0;
    for_each_maximal_chain(n, [&](const AChain&) { c++; });
    return c;
  });
  m.def("b_chain_count", [](unsigned k) { return (long long)b_chains(k).size(); });
  m.def("boundary_consistency", [](int n) -> py::object {
    auto r = boundary_consistency(n);
    if (r) return py::str(*r);
    return py::none();
  });

  m.def("eval_bk", [](unsigned k) { return report_dict(eval_bk(k)); });
  m.def("stat_x", [](unsigned k) { return report_dict(stat_x(k)); });
  m.def("half_disk", [](unsigned k) { return report_dict(half_disk(k)); });
  m.def("collar", [](unsigned k) { return report_dict(collar(k)); });
  m.def("kappa_constant", [](unsigned k) { return report_dict(kappa_constant(k)); });
  m.def("kontsevich_coeff", [](const std::vector<std::pair<unsigned, unsigned>>& terms) {
    auto [cfat, ktilde] = kontsevich_coeff(WeightSpec{terms});
    return py::make_tuple(frac(cfat), frac(ktilde));
  });

  m.def("simplex_integral_exact",
        [](unsigned k, const std::vector<long long>& a) {
          return frac(simplex_integral_exact(k, MassProfile{a}));
        });
  m.def("simplex_integral_grid",
        [](unsigned k, const std::vector<long long>& a, int order) {
          return quad_dict(simplex_integral_grid(k, MassProfile{a}, order));
        },
        py::arg("k"), py::arg("a"), py::arg("order") = 32);
  m.def("simplex_integral_mc",
        [](unsigned k, const std::vector<long long>& a, long long samples, std::uint64_t seed,
           unsigned threads) {
          return quad_dict(simplex_integral_mc(k, MassProfile{a}, samples, seed, threads));
        },
        py::arg("k"), py::arg("a"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 1);
  m.def("euler_2form",
        [](const ZSimplex& s, int order) { return quad_dict(euler_2form(s, order)); },
        py::arg("s"), py::arg("order") = 32);
  m.def("power_form",
        [](const ZSimplex& s, long long samples, std::uint64_t seed, unsigned threads) {
          return quad_dict(power_form(s, samples, seed, threads));
        },
        py::arg("s"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 1);

  m.def("verify_cyclic_cocycle",
        [](unsigned k, long long trials, std::uint64_t seed, unsigned threads) {
          return suite_dict(verify_cyclic_cocycle(k, trials, seed, threads));
        },
        py::arg("k"), py::arg("trials"), py::arg("seed"), py::arg("threads") = 1);
  m.def("verify_fat_cocycle",
        [](unsigned k, long long trials, std::uint64_t seed, unsigned threads) {
          return suite_dict(verify_fat_cocycle(k, trials, seed, threads));
        },
        py::arg("k"), py::arg("trials"), py::arg("seed"), py::arg("threads") = 1);
  m.def("verify_associahedron", [](int n) { return suite_dict(verify_associahedron(n)); });
}
